#include "embred/postprocess.hpp"

#include <string>

#include "embred/errors.hpp"
#include "kernels.hpp"

namespace embred {

EmbeddingMatrix eliminate_top_components(const EmbeddingMatrix& m, const PcaModel& model,
                                         Eigen::Index top_d) {
    if (m.dim() != model.input_dim())
        throw ArgError("eliminate_top_components: matrix dim " + std::to_string(m.dim()) +
                       " does not match model dim " + std::to_string(model.input_dim()));
    if (top_d < 0 || top_d > model.component_count())
        throw ArgError("eliminate_top_components: top_d = " + std::to_string(top_d) +
                       " out of range [0, " + std::to_string(model.component_count()) + "]");
    if (top_d == 0) return m;
    return {m.vocab(), detail::remove_projections(m.data(), model.components.topRows(top_d))};
}

EmbeddingMatrix ppa(const EmbeddingMatrix& m, Eigen::Index d_threshold) {
    if (d_threshold < 0 || d_threshold > m.dim())
        throw ArgError("ppa: threshold D = " + std::to_string(d_threshold) +
                       " out of range [0, " + std::to_string(m.dim()) + "]");
    if (m.rows() < 2) throw ArgError("ppa: need at least 2 rows");

    const Eigen::VectorXd mean = column_mean(m.data());
    if (d_threshold == 0) return {m.vocab(), detail::centered_to_float(m.data(), mean)};

    // Fit on the exact binary64 centered data; rounding to storage precision
    // happens once, after the projections are removed.
    const detail::CovarianceEig eig =
        detail::covariance_eig(detail::accumulate_covariance(m.data(), mean));
    return {m.vocab(), detail::center_and_remove_projections(
                           m.data(), mean, eig.components.topRows(d_threshold))};
}

double residual_energy(const EmbeddingMatrix& m, const PcaModel& model, Eigen::Index top_d) {
    if (m.dim() != model.input_dim())
        throw ArgError("residual_energy: matrix dim " + std::to_string(m.dim()) +
                       " does not match model dim " + std::to_string(model.input_dim()));
    if (top_d < 0 || top_d > model.component_count())
        throw ArgError("residual_energy: top_d = " + std::to_string(top_d) +
                       " out of range [0, " + std::to_string(model.component_count()) + "]");
    if (top_d == 0) return 0.0;
    return detail::max_abs_projection(m.data(), model.components.topRows(top_d));
}

}  // namespace embred
