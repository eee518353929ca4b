#include "kernels.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "embred/errors.hpp"

namespace embred::detail {

namespace {

inline Eigen::Index block_end(Eigen::Index start, Eigen::Index rows) {
    return std::min(start + kBlockRows, rows);
}

}  // namespace

MatrixRowsF centered_to_float(const MatrixRowsF& x, const Eigen::VectorXd& mean) {
    MatrixRowsF out(x.rows(), x.cols());
    for (Eigen::Index r = 0; r < x.rows(); r = block_end(r, x.rows())) {
        const Eigen::Index n = block_end(r, x.rows()) - r;
        out.middleRows(r, n) =
            (x.middleRows(r, n).cast<double>().rowwise() - mean.transpose()).cast<float>();
    }
    return out;
}

Eigen::MatrixXd accumulate_covariance(const MatrixRowsF& x, const Eigen::VectorXd& mean) {
    const Eigen::Index d = x.cols();
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index r = 0; r < x.rows(); r = block_end(r, x.rows())) {
        const Eigen::Index n = block_end(r, x.rows()) - r;
        const Eigen::MatrixXd block =
            x.middleRows(r, n).cast<double>().rowwise() - mean.transpose();
        cov.noalias() += block.transpose() * block;
    }
    cov /= static_cast<double>(x.rows() - 1);
    // GEMM round-off can leave the product asymmetric in the last bit.
    cov = ((cov + cov.transpose()) * 0.5).eval();
    return cov;
}

MatrixRowsF project_rows(const MatrixRowsF& x, const Eigen::VectorXd& mean,
                         const Eigen::MatrixXd& basis) {
    MatrixRowsF out(x.rows(), basis.rows());
    for (Eigen::Index r = 0; r < x.rows(); r = block_end(r, x.rows())) {
        const Eigen::Index n = block_end(r, x.rows()) - r;
        const Eigen::MatrixXd block =
            x.middleRows(r, n).cast<double>().rowwise() - mean.transpose();
        out.middleRows(r, n) = (block * basis.transpose()).cast<float>();
    }
    return out;
}

MatrixRowsF remove_projections(const MatrixRowsF& x, const Eigen::MatrixXd& basis) {
    MatrixRowsF out(x.rows(), x.cols());
    for (Eigen::Index r = 0; r < x.rows(); r = block_end(r, x.rows())) {
        const Eigen::Index n = block_end(r, x.rows()) - r;
        const Eigen::MatrixXd block = x.middleRows(r, n).cast<double>();
        out.middleRows(r, n) = (block - (block * basis.transpose()) * basis).cast<float>();
    }
    return out;
}

MatrixRowsF center_and_remove_projections(const MatrixRowsF& x, const Eigen::VectorXd& mean,
                                          const Eigen::MatrixXd& basis) {
    MatrixRowsF out(x.rows(), x.cols());
    for (Eigen::Index r = 0; r < x.rows(); r = block_end(r, x.rows())) {
        const Eigen::Index n = block_end(r, x.rows()) - r;
        const Eigen::MatrixXd block =
            x.middleRows(r, n).cast<double>().rowwise() - mean.transpose();
        out.middleRows(r, n) = (block - (block * basis.transpose()) * basis).cast<float>();
    }
    return out;
}

double max_abs_projection(const MatrixRowsF& x, const Eigen::MatrixXd& basis) {
    if (basis.rows() == 0) return 0.0;
    double worst = 0.0;
    for (Eigen::Index r = 0; r < x.rows(); r = block_end(r, x.rows())) {
        const Eigen::Index n = block_end(r, x.rows()) - r;
        const Eigen::MatrixXd proj = x.middleRows(r, n).cast<double>() * basis.transpose();
        worst = std::max(worst, proj.cwiseAbs().maxCoeff());
    }
    return worst;
}

CovarianceEig covariance_eig(const Eigen::MatrixXd& cov) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success)
        throw NumericError("covariance eigendecomposition did not converge");

    CovarianceEig out;
    // Solver returns ascending eigenvalues; flip to descending.
    out.values = solver.eigenvalues().reverse();
    out.components = solver.eigenvectors().rowwise().reverse().transpose();
    for (Eigen::Index i = 0; i < out.components.rows(); ++i) {
        Eigen::Index best = 0;
        for (Eigen::Index j = 1; j < out.components.cols(); ++j)
            if (std::abs(out.components(i, j)) > std::abs(out.components(i, best))) best = j;
        if (out.components(i, best) < 0.0) out.components.row(i) *= -1.0;
    }
    return out;
}

}  // namespace embred::detail
