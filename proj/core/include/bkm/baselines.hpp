#pragma once

#include "bkm/clusterer.hpp"
#include "bkm/config.hpp"
#include "bkm/dataset.hpp"

namespace bkm {

// Reference clusterers. All of them produce a valid ClusterState (no empty
// clusters; see repair_empty_clusters) and a per-pass IterationLog whose
// distortion column is the average squared distance of samples to their
// assigned representative. For these centroid-based methods the
// gain_evaluations column counts point-to-centroid distance evaluations.

/// Classic assign/recompute iteration. Seeds are k distinct random samples
/// (init rnd; init none is treated the same) or k-means++ seeds (init kpp).
/// Stops at the exact fixed point (a pass with zero label changes) or at
/// max_passes. Empty clusters are repaired deterministically.
ClusterResult lloyd(const Dataset& ds, const ClusterConfig& cfg);

/// Lloyd iteration from a caller-supplied initial assignment.
ClusterResult lloyd_from_labels(const Dataset& ds, std::vector<int> labels,
                                const ClusterConfig& cfg);

/// k-means++ seeding followed by Lloyd iteration.
ClusterResult kmeanspp(const Dataset& ds, const ClusterConfig& cfg);

/// Mini-batch k-means: each pass assigns a uniform sample of
/// ceil(minibatch_fraction * n) points and updates centroids with
/// per-centroid running-average rates (1 / assignment count). A final full
/// assignment pass labels all points.
ClusterResult minibatch(const Dataset& ds, const ClusterConfig& cfg);

/// Online learning vector quantization: per sample visit the nearest
/// centroid c is pulled toward the sample, c += eta * (x - c). The rate is
/// constant within a pass, eta(p) = max(lvq_rate0 - lvq_decay * p, 0).
ClusterResult lvq(const Dataset& ds, const ClusterConfig& cfg);

/// Reassigns, for each empty cluster, the member of the largest cluster
/// that lies farthest from its centroid (ties toward the lowest ids).
/// Deterministic; terminates since every repair shrinks a cluster of
/// size >= 2 by one.
void repair_empty_clusters(const Dataset& ds, std::vector<int>& labels, int k);

}  // namespace bkm
