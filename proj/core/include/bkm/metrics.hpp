#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bkm/cluster_state.hpp"

namespace bkm {

/// Mean squared distance of samples to their assigned centroid,
/// (1/n) * sum_i ||C_label[i] - x_i||^2, computed as the direct sum.
/// Equals (E - score) / n to relative 1e-9 for any valid state.
double average_distortion(const ClusterState& state);

/// Size-weighted, log-c-normalized class impurity of the partition:
///
///   sum_r (n_r/n) * (-1/log c) * sum_i (n_r^i/n_r) * log(n_r^i/n_r)
///
/// with 0*log 0 = 0. Values lie in [0, 1]; 0 means every cluster is
/// class-pure, lower is better.
double entropy(const ClusterState& state, std::span<const int> class_ids,
               int class_count);

/// entropy() using the dataset's own class ids. Throws MissingLabelsError
/// when the dataset has none.
double entropy(const ClusterState& state);

/// Fraction of queries whose true nearest neighbor appears in the first R
/// entries of the corresponding ranked result list.
double recall_at(const std::vector<std::vector<int>>& results,
                 std::span<const int> true_nn, int R);

}  // namespace bkm
