#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace embred {

using MatrixRowsF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Token set of an embedding matrix. Row ids follow file order of first occurrence.
class Vocabulary {
  public:
    std::size_t size() const { return words_.size(); }
    const std::vector<std::string>& words() const { return words_; }
    const std::string& word(std::size_t row) const { return words_[row]; }

    std::optional<std::size_t> find(std::string_view token) const;

    // Appends a token and returns its row id; nullopt when already present.
    std::optional<std::size_t> add(std::string token);

  private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::vector<std::string> words_;
    std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> index_;
};

// Dense row-major matrix of word vectors plus the vocabulary index.
// Immutable after construction; safe for concurrent readers.
class EmbeddingMatrix {
  public:
    EmbeddingMatrix(Vocabulary vocab, MatrixRowsF data);

    Eigen::Index rows() const { return data_.rows(); }
    Eigen::Index dim() const { return data_.cols(); }
    const Vocabulary& vocab() const { return vocab_; }
    const MatrixRowsF& data() const { return data_; }

    std::span<const float> row(Eigen::Index i) const {
        return {data_.row(i).data(), static_cast<std::size_t>(data_.cols())};
    }

    // Exact-match lookup; with fold_case, retries with the ASCII-lowercased
    // token. Returns a view into the matrix, never a copy.
    std::optional<std::span<const float>> lookup(std::string_view token,
                                                 bool fold_case = false) const;

  private:
    Vocabulary vocab_;
    MatrixRowsF data_;
};

struct LoadStats {
    std::size_t duplicates_dropped = 0;
    bool header_detected = false;
};

// Reads the whitespace-separated text format of pre-trained GloVe / fastText
// vectors: one `token v1 ... vd` line per word, optionally preceded by a
// `count dim` header line (auto-detected). Duplicate tokens keep the first
// occurrence.
EmbeddingMatrix load_embeddings(const std::filesystem::path& path,
                                std::optional<Eigen::Index> expected_dim = std::nullopt,
                                LoadStats* stats = nullptr);

// Writes the same text format with `precision` decimal places per value.
void save_embeddings(const EmbeddingMatrix& m, const std::filesystem::path& path,
                     int precision = 6);

}  // namespace embred
