#include "embred/embedding.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <system_error>

#include "embred/errors.hpp"

namespace embred {

namespace {

// Splits on runs of spaces/tabs. Views point into `line`.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

bool parse_nonneg_int(std::string_view s, long long& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && out >= 0;
}

float parse_float_field(std::string_view s, const std::filesystem::path& path,
                        std::size_t line_no) {
    float v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw IoError(path.string() + ": line " + std::to_string(line_no) +
                      ": cannot parse value '" + std::string(s) + "'");
    if (!std::isfinite(v))
        throw IoError(path.string() + ": line " + std::to_string(line_no) +
                      ": non-finite value '" + std::string(s) + "'");
    return v;
}

bool getline_trimmed(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

std::string lowercased(std::string_view token) {
    std::string folded(token);
    for (char& c : folded)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return folded;
}

}  // namespace

std::optional<std::size_t> Vocabulary::find(std::string_view token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Vocabulary::add(std::string token) {
    if (index_.contains(std::string_view(token))) return std::nullopt;
    const std::size_t row = words_.size();
    index_.emplace(token, row);
    words_.push_back(std::move(token));
    return row;
}

EmbeddingMatrix::EmbeddingMatrix(Vocabulary vocab, MatrixRowsF data)
    : vocab_(std::move(vocab)), data_(std::move(data)) {
    if (data_.rows() < 1 || data_.cols() < 1)
        throw ArgError("embedding matrix must have at least one row and one column");
    if (static_cast<std::size_t>(data_.rows()) != vocab_.size())
        throw ArgError("embedding matrix rows (" + std::to_string(data_.rows()) +
                       ") do not match vocabulary size (" + std::to_string(vocab_.size()) + ")");
}

std::optional<std::span<const float>> EmbeddingMatrix::lookup(std::string_view token,
                                                              bool fold_case) const {
    std::optional<std::size_t> id = vocab_.find(token);
    if (!id && fold_case) id = vocab_.find(lowercased(token));
    if (!id) return std::nullopt;
    return row(static_cast<Eigen::Index>(*id));
}

EmbeddingMatrix load_embeddings(const std::filesystem::path& path,
                                std::optional<Eigen::Index> expected_dim, LoadStats* stats) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open embedding file: " + path.string());

    LoadStats local;

    // First non-empty line decides the format: a `count dim` header (exactly
    // two non-negative integer fields) or the first data row.
    std::string line;
    std::size_t line_no = 0;
    std::size_t first_data_line = 0;
    while (getline_trimmed(in, line)) {
        ++line_no;
        if (!line.empty()) { first_data_line = line_no; break; }
    }
    if (first_data_line == 0) throw IoError("empty embedding file: " + path.string());

    Eigen::Index dim = 0;
    Eigen::Index rows_hint = 0;
    const std::vector<std::string_view> first_fields = split_fields(line);
    long long hdr_count = 0, hdr_dim = 0;
    if (first_fields.size() == 2 && parse_nonneg_int(first_fields[0], hdr_count) &&
        parse_nonneg_int(first_fields[1], hdr_dim)) {
        local.header_detected = true;
        rows_hint = static_cast<Eigen::Index>(hdr_count);
        dim = static_cast<Eigen::Index>(hdr_dim);
        if (expected_dim && dim != *expected_dim)
            throw IoError(path.string() + ": line " + std::to_string(first_data_line) +
                          ": header dimension " + std::to_string(dim) + " does not match expected " +
                          std::to_string(*expected_dim));
        if (dim < 1)
            throw IoError(path.string() + ": header declares dimension " + std::to_string(dim));
    } else {
        if (first_fields.size() < 2)
            throw IoError(path.string() + ": line " + std::to_string(first_data_line) +
                          ": expected `token v1 ... vd`");
        dim = static_cast<Eigen::Index>(first_fields.size()) - 1;
        if (expected_dim && dim != *expected_dim)
            throw IoError(path.string() + ": line " + std::to_string(first_data_line) +
                          ": dimension " + std::to_string(dim) + " does not match expected " +
                          std::to_string(*expected_dim));
        // No row count up front: count the remaining non-empty lines, then
        // rewind and parse straight into the allocated matrix.
        rows_hint = 1;
        std::string rest;
        while (std::getline(in, rest)) {
            if (!rest.empty() && rest != "\r") ++rows_hint;
        }
        in.clear();
        in.seekg(0);
        line_no = 0;
        while (getline_trimmed(in, line)) {
            ++line_no;
            if (line_no == first_data_line) break;
        }
    }

    Vocabulary vocab;
    MatrixRowsF data(rows_hint, dim);
    Eigen::Index next_row = 0;

    // In header mode `line` still holds the header, which is already consumed;
    // in headerless mode it holds the first data row.
    bool pending = !local.header_detected;
    while (pending || getline_trimmed(in, line)) {
        if (!pending) ++line_no;
        pending = false;
        if (line.empty()) continue;

        const std::vector<std::string_view> fields = split_fields(line);
        if (static_cast<Eigen::Index>(fields.size()) != dim + 1)
            throw IoError(path.string() + ": line " + std::to_string(line_no) +
                          ": expected " + std::to_string(dim + 1) + " fields, got " +
                          std::to_string(fields.size()));

        if (!vocab.add(std::string(fields[0]))) {
            ++local.duplicates_dropped;
            continue;
        }
        if (next_row >= data.rows())
            data.conservativeResize(data.rows() * 2 + 1, Eigen::NoChange);
        float* out = data.row(next_row).data();
        for (Eigen::Index j = 0; j < dim; ++j)
            out[j] = parse_float_field(fields[static_cast<std::size_t>(j) + 1], path, line_no);
        ++next_row;
    }

    if (next_row == 0) throw IoError("no embedding rows in file: " + path.string());
    if (next_row != data.rows()) data.conservativeResize(next_row, Eigen::NoChange);

    if (stats) *stats = local;
    return EmbeddingMatrix(std::move(vocab), std::move(data));
}

void save_embeddings(const EmbeddingMatrix& m, const std::filesystem::path& path, int precision) {
    if (precision < 0 || precision > 40) throw ArgError("save_embeddings: bad precision");
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path.string());

    std::string buf;
    char num[80];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        buf.assign(m.vocab().word(static_cast<std::size_t>(i)));
        for (const float v : m.row(i)) {
            // std::to_chars keeps the output locale-independent.
            auto [ptr, ec] = std::to_chars(num, num + sizeof(num), static_cast<double>(v),
                                           std::chars_format::fixed, precision);
            if (ec != std::errc()) throw IoError("save_embeddings: value formatting failed");
            buf.push_back(' ');
            buf.append(num, ptr);
        }
        buf.push_back('\n');
        out << buf;
    }
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace embred
