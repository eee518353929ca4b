#include "embred/pipeline.hpp"

#include <string>

#include "embred/errors.hpp"
#include "embred/pca.hpp"
#include "embred/postprocess.hpp"

namespace embred {

Method parse_method(std::string_view name) {
    if (name == "algo") return Method::kAlgo;
    if (name == "pca") return Method::kPca;
    if (name == "p+pca") return Method::kPpaPca;
    if (name == "pca+p") return Method::kPcaPpa;
    if (name == "ppa-only") return Method::kPpaOnly;
    throw ArgError("unknown method '" + std::string(name) +
                   "' (expected algo, pca, p+pca, pca+p, ppa-only)");
}

std::string_view method_name(Method method) {
    switch (method) {
        case Method::kAlgo: return "algo";
        case Method::kPca: return "pca";
        case Method::kPpaPca: return "p+pca";
        case Method::kPcaPpa: return "pca+p";
        case Method::kPpaOnly: return "ppa-only";
    }
    throw ArgError("unknown method");
}

void ReductionSpec::validate(Eigen::Index input_dim) const {
    if (input_dim < 1) throw ArgError("reduce: input dimension must be positive");
    if (threshold < 0) throw ArgError("reduce: threshold D must be non-negative");

    if (method == Method::kPpaOnly) {
        // N is ignored; PPA runs at the input dimension.
        if (threshold > input_dim)
            throw ArgError("reduce: threshold D = " + std::to_string(threshold) +
                           " exceeds input dimension " + std::to_string(input_dim));
        return;
    }

    if (target_dim < 1 || target_dim > input_dim)
        throw ArgError("reduce: target dimension N = " + std::to_string(target_dim) +
                       " out of range [1, " + std::to_string(input_dim) + "]");

    const bool ppa_before = method == Method::kAlgo || method == Method::kPpaPca;
    const bool ppa_after = method == Method::kAlgo || method == Method::kPcaPpa;
    if (ppa_before && threshold > input_dim)
        throw ArgError("reduce: threshold D = " + std::to_string(threshold) +
                       " exceeds input dimension " + std::to_string(input_dim));
    // The second PPA operates in the reduced N-dimensional space.
    if (ppa_after && threshold > target_dim)
        throw ArgError("reduce: threshold D = " + std::to_string(threshold) +
                       " exceeds target dimension N = " + std::to_string(target_dim));
}

EmbeddingMatrix reduce(const EmbeddingMatrix& m, const ReductionSpec& spec) {
    spec.validate(m.dim());
    const Eigen::Index n = spec.target_dim;
    const Eigen::Index d_thr = spec.threshold;

    switch (spec.method) {
        case Method::kPpaOnly:
            return ppa(m, d_thr);
        case Method::kPca: {
            auto [centered, mean] = center(m);
            return transform(centered, fit_pca(centered, n), n);
        }
        case Method::kPpaPca: {
            const EmbeddingMatrix post = ppa(m, d_thr);
            auto [centered, mean] = center(post);
            return transform(centered, fit_pca(centered, n), n);
        }
        case Method::kPcaPpa: {
            auto [centered, mean] = center(m);
            return ppa(transform(centered, fit_pca(centered, n), n), d_thr);
        }
        case Method::kAlgo: {
            const EmbeddingMatrix post = ppa(m, d_thr);
            auto [centered, mean] = center(post);
            return ppa(transform(centered, fit_pca(centered, n), n), d_thr);
        }
    }
    throw ArgError("reduce: unknown method");
}

std::string describe(const ReductionSpec& spec) {
    const std::string ppa_stage = "PPA(" + std::to_string(spec.threshold) + ")";
    const std::string pca_stage = "PCA(" + std::to_string(spec.target_dim) + ")";
    switch (spec.method) {
        case Method::kAlgo:
            return ppa_stage + " → center → " + pca_stage + " → " + ppa_stage;
        case Method::kPca:
            return "center → " + pca_stage;
        case Method::kPpaPca:
            return ppa_stage + " → center → " + pca_stage;
        case Method::kPcaPpa:
            return "center → " + pca_stage + " → " + ppa_stage;
        case Method::kPpaOnly:
            return ppa_stage;
    }
    throw ArgError("describe: unknown method");
}

}  // namespace embred
