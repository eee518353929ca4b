#pragma once

#include "embred/embedding.hpp"
#include "embred/pca.hpp"

namespace embred {

// Removes each row's projection onto the first top_d rows of model.components:
// v -> v - sum_i (u_i . v) u_i. Rows are expected to be centered already.
EmbeddingMatrix eliminate_top_components(const EmbeddingMatrix& m, const PcaModel& model,
                                         Eigen::Index top_d);

// The post-processing transform: subtract the mean, fit PCA on the centered
// data, eliminate the top d_threshold components from every vector. The PCA
// fit always happens on this call's own input. d_threshold = 0 degenerates to
// plain centering.
EmbeddingMatrix ppa(const EmbeddingMatrix& m, Eigen::Index d_threshold);

// Largest |u_i . v| over all rows v of m and the first top_d components of
// model; ~0 after the components were eliminated.
double residual_energy(const EmbeddingMatrix& m, const PcaModel& model, Eigen::Index top_d);

}  // namespace embred
