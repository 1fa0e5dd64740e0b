#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "bkm/cluster_state.hpp"
#include "bkm/clusterer.hpp"
#include "bkm/config.hpp"
#include "bkm/dataset.hpp"
#include "bkm/objective.hpp"

namespace bkm {

/// Candidate-seek strategy: `best` scans all (or the pruned) candidates and
/// takes the maximum gain, `fast` accepts the first positive gain in
/// seeded-random candidate order.
enum class BkmSeek { best, fast };

/// Optional per-run instrumentation.
struct RunHooks {
    /// Called after every accepted move with the gain and the cached score
    /// it produced.
    std::function<void(const MoveGain&, double score_after)> on_move;
};

/// k distinct uniform-random sample indices.
std::vector<std::size_t> random_seeds(const Dataset& ds, int k,
                                      std::mt19937_64& rng);

/// k-means++ D^2 seeding: the first seed is uniform, each further seed is
/// drawn with probability proportional to its squared distance to the
/// nearest already-chosen seed. `preset` pins leading seeds (used by tests
/// to fix the first draw).
std::vector<std::size_t> kpp_seeds(const Dataset& ds, int k,
                                   std::mt19937_64& rng,
                                   std::span<const std::size_t> preset = {});

/// Initial label array for the three init modes:
///  - none: uniformly random labels; the first k samples of a random
///    permutation pre-claim one label each so no cluster starts empty
///  - rnd:  k distinct random samples become seeds, every sample labeled by
///    its nearest seed
///  - kpp:  k-means++ seeding, then nearest-seed assignment
std::vector<int> init_labels(const Dataset& ds, int k, InitMode mode,
                             std::uint64_t seed);
std::vector<int> init_labels(const Dataset& ds, int k, InitMode mode,
                             std::mt19937_64& rng);

/// Ids of the k0 clusters whose centroids are nearest to sample i in
/// squared l2 distance, plus the sample's own cluster when not already
/// among them. Returned in ascending id order.
std::vector<int> prune_candidates(const ClusterState& state, std::size_t i,
                                  int k0);

/// One fast-variant pass: samples visited in seeded-random order, candidates
/// examined in seeded-random order, the first positive gain applied
/// immediately. Returns the number of accepted moves.
std::int64_t bkm_pass_fast(ClusterState& state, std::mt19937_64& rng);

/// Pass loop shared by the direct k-way run and the refinement stage:
/// repeats passes until one accepts zero moves (single-move local
/// optimality) or cfg.max_passes is reached. Per-pass distortion, accepted
/// moves and gain evaluations are logged; composites are refreshed from the
/// labels at every pass end to bound drift.
IterationLog bkm_optimize(ClusterState& state, const ClusterConfig& cfg,
                          std::mt19937_64& rng,
                          const RunHooks* hooks = nullptr);

/// Direct k-way run: init per cfg.init, then bkm_optimize. cfg.algorithm
/// selects the best (bkm) or fast (bkm-fast) seek.
ClusterResult bkm_cluster(const Dataset& ds, const ClusterConfig& cfg,
                          const RunHooks* hooks = nullptr);

}  // namespace bkm
