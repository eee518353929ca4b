#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <utility>
#include <vector>

#include "embred/embedding.hpp"

namespace embred {

// Principal directions of a centered embedding matrix, strongest first.
struct PcaModel {
    Eigen::VectorXd mean;                      // column means of the fitted input
    Eigen::MatrixXd components;                // k x d, rows orthonormal
    Eigen::VectorXd explained_variance_ratio;  // k fractions in [0, 1], non-increasing

    Eigen::Index input_dim() const { return mean.size(); }
    Eigen::Index component_count() const { return components.rows(); }
};

// Column means, accumulated in binary64.
Eigen::VectorXd column_mean(const MatrixRowsF& data);

// Subtracts the column means from every row. Returns the centered matrix and
// the mean that was removed.
std::pair<EmbeddingMatrix, Eigen::VectorXd> center(const EmbeddingMatrix& m);

// Eigendecomposition of the d x d sample covariance ((rows-1) divisor) of the
// centered data. Components carry a deterministic sign: the largest-magnitude
// entry of each is positive. Variance ratios are normalized over all d
// eigenvalues, so a k = d model's ratios sum to 1.
PcaModel fit_pca(const EmbeddingMatrix& m, Eigen::Index k);

// Projects (row - model.mean) onto the first n components. Output dim = n.
EmbeddingMatrix transform(const EmbeddingMatrix& m, const PcaModel& model, Eigen::Index n);

struct VarianceEntry {
    int component;  // 1-based
    double fraction;
};

// First top_k explained-variance fractions of a full-dimension fit.
std::vector<VarianceEntry> variance_report(const EmbeddingMatrix& m, Eigen::Index top_k);

// CSV with header `component,fraction`.
void write_variance_csv(std::ostream& out, const std::vector<VarianceEntry>& entries);

}  // namespace embred
