#pragma once

#include <string>
#include <string_view>

#include "embred/embedding.hpp"

namespace embred {

// Reduction methods: the full pipeline plus its single-sided ablations.
enum class Method { kAlgo, kPca, kPpaPca, kPcaPpa, kPpaOnly };

// Accepts "algo", "pca", "p+pca", "pca+p", "ppa-only".
Method parse_method(std::string_view name);
std::string_view method_name(Method method);

struct ReductionSpec {
    Method method = Method::kAlgo;
    Eigen::Index target_dim = 0;  // N; ignored by ppa-only
    Eigen::Index threshold = 7;   // D

    // Throws ArgError when the spec cannot apply to a matrix of input_dim.
    void validate(Eigen::Index input_dim) const;
};

// Maps an embedding matrix to a lower-dimensional one:
//   algo:     PPA(D) -> center -> PCA(N) -> PPA(D)
//   pca:      center -> PCA(N)
//   p+pca:    PPA(D) -> center -> PCA(N)
//   pca+p:    center -> PCA(N) -> PPA(D)
//   ppa-only: PPA(D), dimension preserved
// Vocabulary is preserved verbatim.
EmbeddingMatrix reduce(const EmbeddingMatrix& m, const ReductionSpec& spec);

// Human-readable stage list, e.g. "PPA(7) → center → PCA(150) → PPA(7)".
std::string describe(const ReductionSpec& spec);

}  // namespace embred
