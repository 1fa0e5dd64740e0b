#pragma once

#include <cstdint>
#include <functional>

#include "bkm/cluster_state.hpp"
#include "bkm/config.hpp"

namespace bkm {

struct ClusterResult {
    ClusterState state;
    IterationLog log;
};

/// Injectable clusterer: runs some algorithm on a dataset with the given
/// cluster count and seed. Used to plug any method into bisecting splits
/// and product-quantizer training.
using Clusterer =
    std::function<ClusterResult(const Dataset&, int k, std::uint64_t seed)>;

/// Dispatches on cfg.algorithm over all direct k-way methods.
ClusterResult run_clusterer(const Dataset& ds, const ClusterConfig& cfg);

/// Wraps a config prototype as a Clusterer; k and seed are overridden per
/// call, everything else is taken from the prototype.
Clusterer make_clusterer(const ClusterConfig& proto);

}  // namespace bkm
