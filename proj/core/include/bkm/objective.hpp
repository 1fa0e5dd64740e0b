#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "bkm/cluster_state.hpp"

namespace bkm {

/// Exact change of the objective from relocating one sample.
struct MoveGain {
    std::size_t sample = 0;
    int from = -1;
    int to = -1;
    double delta = 0.0;
    /// State revision the gain was computed against.
    std::uint64_t revision = 0;
};

/// sum_r D_r'D_r / n_r, recomputed from the stored composite vectors.
/// Maximizing this is equivalent to minimizing the clustering distortion
/// since n * distortion + score = E with E constant.
double objective_score(const ClusterState& state);

/// Exact score change from moving sample i to cluster v, in O(d):
///
///   delta = (D_v+x)'(D_v+x)/(n_v+1) + (D_u-x)'(D_u-x)/(n_u-1)
///         -  D_v'D_v/n_v            -  D_u'D_u/n_u
///
/// expanded over the cached self inner products and two fresh dot products
/// x'D_u, x'D_v. The state is not modified.
///
/// Throws SameClusterError when v is already the sample's cluster and
/// WouldEmptyClusterError when the source cluster has a single member.
MoveGain move_gain(const ClusterState& state, std::size_t i, int v);

/// Applies a previously computed gain: relocates the sample and bumps the
/// cached score by exactly g.delta. Throws StaleGainError when the state
/// has changed since g was computed.
void apply_move(ClusterState& state, const MoveGain& g);

/// Highest-gain candidate with delta > 0, or nullopt when no candidate
/// improves the score. Ties break toward the lowest cluster id. The
/// sample's own cluster is filtered out of the candidate list.
std::optional<MoveGain> best_move(const ClusterState& state, std::size_t i,
                                  std::span<const int> candidates);

/// best_move over all k clusters.
std::optional<MoveGain> best_move(const ClusterState& state, std::size_t i);

}  // namespace bkm
