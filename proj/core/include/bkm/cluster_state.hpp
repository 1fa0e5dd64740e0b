#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bkm/dataset.hpp"

namespace bkm {

/// The live partition: per-sample labels, per-cluster composite vectors
/// D_r = sum of member rows, cluster sizes n_r, and the cached objective
/// score sum_r D_r'D_r / n_r.
///
/// Centroids C_r = D_r / n_r are derived on demand, never stored. The state
/// keeps a reference to the dataset it was built over; the dataset must
/// outlive the state. Exactly one logical thread may mutate a state at a
/// time.
class ClusterState {
public:
    ClusterState(const Dataset& ds, std::vector<int> labels, int k);

    const Dataset& dataset() const { return *ds_; }
    int k() const { return k_; }
    std::size_t n() const { return labels_.size(); }
    int d() const { return ds_->d(); }

    int label(std::size_t i) const { return labels_[i]; }
    const std::vector<int>& labels() const { return labels_; }

    std::span<const double> composite(int r) const {
        return {composite_.data() + static_cast<std::size_t>(r) * d(),
                static_cast<std::size_t>(d())};
    }
    /// Cached D_r'D_r, maintained incrementally (hot path of gain
    /// evaluation).
    double composite_sq(int r) const { return composite_sq_[r]; }
    std::int64_t size(int r) const { return sizes_[r]; }
    const std::vector<std::int64_t>& sizes() const { return sizes_; }

    /// Cached objective value, updated by exactly the accepted gain on each
    /// move and refreshed from scratch by refresh().
    double score() const { return score_; }

    /// Bumped on every mutation; gains carry the revision they were
    /// computed against so stale applications can be rejected.
    std::uint64_t revision() const { return revision_; }

    /// Relocates sample i to cluster `to`, updating label, composites,
    /// sizes and cached inner products incrementally and adding `delta`
    /// to the cached score. Callers are expected to have validated the
    /// move; this only enforces the structural preconditions.
    void move_sample(std::size_t i, int to, double delta);

    /// Recomputes composites, cached inner products and score from the
    /// labels, bounding incremental drift. Called at the end of each
    /// optimization pass.
    void refresh();

private:
    const Dataset* ds_;
    int k_;
    std::vector<int> labels_;
    std::vector<double> composite_;       // k x d, row-major
    std::vector<double> composite_sq_;    // k
    std::vector<std::int64_t> sizes_;     // k
    double score_ = 0.0;
    std::uint64_t revision_ = 0;
};

/// Builds a state from scratch: composites, sizes and score recomputed from
/// the labels. Throws BadLabelError for a label outside [0, k) and
/// EmptyClusterError when some cluster id has no members.
ClusterState build_state(const Dataset& ds, std::vector<int> labels, int k);

/// C_r = D_r / n_r.
std::vector<double> centroid(const ClusterState& state, int r);

/// Recomputes every invariant of the state from the dataset and labels and
/// throws Error on any violation beyond `rel_tol`. Used by tests and the
/// harness-uniformity checks.
void validate_state(const ClusterState& state, double rel_tol = 1e-9);

}  // namespace bkm
