#include "embred/pca.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <string>
#include <string_view>

#include "embred/errors.hpp"
#include "kernels.hpp"

namespace embred {

Eigen::VectorXd column_mean(const MatrixRowsF& data) {
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(data.cols());
    for (Eigen::Index r = 0; r < data.rows(); r += detail::kBlockRows) {
        const Eigen::Index n = std::min(detail::kBlockRows, data.rows() - r);
        sum += data.middleRows(r, n).cast<double>().colwise().sum();
    }
    return sum / static_cast<double>(data.rows());
}

std::pair<EmbeddingMatrix, Eigen::VectorXd> center(const EmbeddingMatrix& m) {
    Eigen::VectorXd mean = column_mean(m.data());
    EmbeddingMatrix centered(m.vocab(), detail::centered_to_float(m.data(), mean));
    return {std::move(centered), std::move(mean)};
}

PcaModel fit_pca(const EmbeddingMatrix& m, Eigen::Index k) {
    const Eigen::Index d = m.dim();
    if (m.rows() < 2) throw ArgError("fit_pca: need at least 2 rows");
    if (k < 1 || k > std::min(m.rows(), d))
        throw ArgError("fit_pca: k = " + std::to_string(k) + " out of range [1, " +
                       std::to_string(std::min(m.rows(), d)) + "]");

    PcaModel model;
    model.mean = column_mean(m.data());
    const detail::CovarianceEig eig =
        detail::covariance_eig(detail::accumulate_covariance(m.data(), model.mean));

    // Ratios are normalized over all d eigenvalues; rank-deficient inputs just
    // contribute ~0 tails. Tiny negative eigenvalues are round-off from an
    // exact zero.
    Eigen::VectorXd ratios = eig.values.cwiseMax(0.0);
    const double total = ratios.sum();
    if (total < 1e-12)
        ratios.setZero();
    else
        ratios /= total;

    model.components = eig.components.topRows(k);
    model.explained_variance_ratio = ratios.head(k);
    return model;
}

EmbeddingMatrix transform(const EmbeddingMatrix& m, const PcaModel& model, Eigen::Index n) {
    if (m.dim() != model.input_dim())
        throw ArgError("transform: matrix dim " + std::to_string(m.dim()) +
                       " does not match model dim " + std::to_string(model.input_dim()));
    if (n < 1 || n > model.component_count())
        throw ArgError("transform: n = " + std::to_string(n) + " out of range [1, " +
                       std::to_string(model.component_count()) + "]");
    return {m.vocab(), detail::project_rows(m.data(), model.mean, model.components.topRows(n))};
}

std::vector<VarianceEntry> variance_report(const EmbeddingMatrix& m, Eigen::Index top_k) {
    const Eigen::Index full = std::min(m.rows(), m.dim());
    if (top_k < 1 || top_k > full)
        throw ArgError("variance_report: top_k = " + std::to_string(top_k) +
                       " out of range [1, " + std::to_string(full) + "]");
    const PcaModel model = fit_pca(m, full);
    std::vector<VarianceEntry> entries;
    entries.reserve(static_cast<std::size_t>(top_k));
    for (Eigen::Index i = 0; i < top_k; ++i)
        entries.push_back({static_cast<int>(i) + 1, model.explained_variance_ratio(i)});
    return entries;
}

void write_variance_csv(std::ostream& out, const std::vector<VarianceEntry>& entries) {
    out << "component,fraction\n";
    char buf[64];
    for (const VarianceEntry& e : entries) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), e.fraction);
        if (ec != std::errc()) throw IoError("write_variance_csv: formatting failed");
        out << e.component << ',' << std::string_view(buf, ptr) << '\n';
    }
}

}  // namespace embred
