#include "bkm/cluster_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bkm/errors.hpp"

namespace bkm {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool rel_close(double a, double b, double tol) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    return std::fabs(a - b) <= tol * scale;
}

}  // namespace

ClusterState::ClusterState(const Dataset& ds, std::vector<int> labels, int k)
    : ds_(&ds), k_(k), labels_(std::move(labels)) {
    if (k_ < 1) throw Error("cluster count must be >= 1");
    if (labels_.size() != ds.n()) {
        throw BadLabelError("label array length " + std::to_string(labels_.size()) +
                            " does not match n=" + std::to_string(ds.n()));
    }
    composite_.assign(static_cast<std::size_t>(k_) * ds.d(), 0.0);
    composite_sq_.assign(k_, 0.0);
    sizes_.assign(k_, 0);
    refresh();
}

void ClusterState::move_sample(std::size_t i, int to, double delta) {
    const int from = labels_[i];
    const int d = ds_->d();
    auto x = ds_->row(i);

    double* du = composite_.data() + static_cast<std::size_t>(from) * d;
    double* dv = composite_.data() + static_cast<std::size_t>(to) * d;
    double xdu = 0.0, xdv = 0.0;
    for (int j = 0; j < d; ++j) {
        xdu += x[j] * du[j];
        xdv += x[j] * dv[j];
        du[j] -= x[j];
        dv[j] += x[j];
    }
    const double xx = ds_->row_norm_sq(i);
    composite_sq_[from] += xx - 2.0 * xdu;
    composite_sq_[to] += xx + 2.0 * xdv;
    sizes_[from] -= 1;
    sizes_[to] += 1;
    labels_[i] = to;
    score_ += delta;
    ++revision_;
}

void ClusterState::refresh() {
    const int d = ds_->d();
    std::fill(composite_.begin(), composite_.end(), 0.0);
    std::fill(sizes_.begin(), sizes_.end(), std::int64_t{0});
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const int r = labels_[i];
        if (r < 0 || r >= k_) {
            throw BadLabelError("label " + std::to_string(r) + " of sample " +
                                std::to_string(i) + " outside [0, " +
                                std::to_string(k_) + ")");
        }
        auto x = ds_->row(i);
        double* dst = composite_.data() + static_cast<std::size_t>(r) * d;
        for (int j = 0; j < d; ++j) dst[j] += x[j];
        sizes_[r] += 1;
    }
    score_ = 0.0;
    for (int r = 0; r < k_; ++r) {
        if (sizes_[r] == 0) {
            throw EmptyClusterError("cluster " + std::to_string(r) +
                                    " has no members");
        }
        composite_sq_[r] = dot(composite(r), composite(r));
        score_ += composite_sq_[r] / static_cast<double>(sizes_[r]);
    }
    ++revision_;
}

ClusterState build_state(const Dataset& ds, std::vector<int> labels, int k) {
    return ClusterState(ds, std::move(labels), k);
}

std::vector<double> centroid(const ClusterState& state, int r) {
    if (r < 0 || r >= state.k()) {
        throw std::out_of_range("cluster id " + std::to_string(r) +
                                " outside [0, " + std::to_string(state.k()) + ")");
    }
    auto c = state.composite(r);
    std::vector<double> out(c.begin(), c.end());
    const double inv = 1.0 / static_cast<double>(state.size(r));
    for (double& v : out) v *= inv;
    return out;
}

void validate_state(const ClusterState& state, double rel_tol) {
    const Dataset& ds = state.dataset();
    const int k = state.k();
    const int d = ds.d();

    std::vector<double> comp(static_cast<std::size_t>(k) * d, 0.0);
    std::vector<std::int64_t> sizes(k, 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        const int r = state.label(i);
        if (r < 0 || r >= k) throw BadLabelError("label out of range");
        auto x = ds.row(i);
        double* dst = comp.data() + static_cast<std::size_t>(r) * d;
        for (int j = 0; j < d; ++j) dst[j] += x[j];
        sizes[r] += 1;
    }

    std::int64_t total = 0;
    double score = 0.0;
    for (int r = 0; r < k; ++r) {
        if (sizes[r] == 0) throw EmptyClusterError("empty cluster " + std::to_string(r));
        if (sizes[r] != state.size(r)) {
            throw Error("stored size of cluster " + std::to_string(r) +
                        " disagrees with labels");
        }
        total += sizes[r];
        std::span<const double> rebuilt{comp.data() + static_cast<std::size_t>(r) * d,
                                        static_cast<std::size_t>(d)};
        auto stored = state.composite(r);
        double norm = 0.0, diff = 0.0;
        for (int j = 0; j < d; ++j) {
            norm += rebuilt[j] * rebuilt[j];
            const double e = rebuilt[j] - stored[j];
            diff += e * e;
        }
        if (std::sqrt(diff) > rel_tol * std::max(1.0, std::sqrt(norm))) {
            throw Error("stored composite of cluster " + std::to_string(r) +
                        " drifted from labels");
        }
        const double sq = dot(rebuilt, rebuilt);
        if (!rel_close(sq, state.composite_sq(r), rel_tol)) {
            throw Error("cached composite inner product of cluster " +
                        std::to_string(r) + " drifted");
        }
        score += sq / static_cast<double>(sizes[r]);
    }
    if (total != static_cast<std::int64_t>(ds.n())) {
        throw Error("cluster sizes do not sum to n");
    }
    if (!rel_close(score, state.score(), rel_tol)) {
        throw Error("cached score drifted from labels");
    }
}

}  // namespace bkm
