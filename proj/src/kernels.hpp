// Internal numerical kernels: binary32 storage in, binary64 arithmetic inside,
// binary32 storage out. Fixed block boundaries and sequential accumulation
// keep every result bit-stable across runs.
#pragma once

#include <Eigen/Core>

#include "embred/embedding.hpp"

namespace embred::detail {

inline constexpr Eigen::Index kBlockRows = 4096;

// x - mean, rounded back to binary32.
MatrixRowsF centered_to_float(const MatrixRowsF& x, const Eigen::VectorXd& mean);

// Sample covariance of (x - mean) with the (rows - 1) divisor.
Eigen::MatrixXd accumulate_covariance(const MatrixRowsF& x, const Eigen::VectorXd& mean);

// (x - mean) * basis^T for a (k x d) row basis.
MatrixRowsF project_rows(const MatrixRowsF& x, const Eigen::VectorXd& mean,
                         const Eigen::MatrixXd& basis);

// x - (x * basis^T) * basis.
MatrixRowsF remove_projections(const MatrixRowsF& x, const Eigen::MatrixXd& basis);

// (x - mean) - ((x - mean) * basis^T) * basis, centered and projected away in
// one pass so no intermediate rounding reaches the basis subtraction.
MatrixRowsF center_and_remove_projections(const MatrixRowsF& x, const Eigen::VectorXd& mean,
                                          const Eigen::MatrixXd& basis);

// max |x * basis^T| over all entries.
double max_abs_projection(const MatrixRowsF& x, const Eigen::MatrixXd& basis);

// Eigendecomposition of a symmetric covariance: descending eigenvalues, rows
// of `components` are the corresponding unit eigenvectors with the
// largest-magnitude entry made positive (ties keep the lowest index).
struct CovarianceEig {
    Eigen::VectorXd values;
    Eigen::MatrixXd components;
};

CovarianceEig covariance_eig(const Eigen::MatrixXd& cov);

}  // namespace embred::detail
