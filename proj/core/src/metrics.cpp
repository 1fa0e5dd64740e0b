#include "bkm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bkm/errors.hpp"

namespace bkm {

double average_distortion(const ClusterState& state) {
    const Dataset& ds = state.dataset();
    const int d = ds.d();
    const int k = state.k();

    std::vector<double> centroids(static_cast<std::size_t>(k) * d);
    for (int r = 0; r < k; ++r) {
        auto c = state.composite(r);
        const double inv = 1.0 / static_cast<double>(state.size(r));
        double* dst = centroids.data() + static_cast<std::size_t>(r) * d;
        for (int j = 0; j < d; ++j) dst[j] = c[j] * inv;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < ds.n(); ++i) {
        auto x = ds.row(i);
        const double* c = centroids.data() +
                          static_cast<std::size_t>(state.label(i)) * d;
        for (int j = 0; j < d; ++j) {
            const double e = c[j] - x[j];
            total += e * e;
        }
    }
    return total / static_cast<double>(ds.n());
}

double entropy(const ClusterState& state, std::span<const int> class_ids,
               int class_count) {
    if (class_count < 2) throw Error("entropy requires at least 2 classes");
    if (class_ids.size() != state.n()) {
        throw MissingLabelsError("class id list length does not match n");
    }
    const int k = state.k();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(k) * class_count, 0);
    for (std::size_t i = 0; i < state.n(); ++i) {
        const int c = class_ids[i];
        if (c < 0 || c >= class_count) {
            throw Error("class id " + std::to_string(c) + " outside [0, " +
                        std::to_string(class_count) + ")");
        }
        counts[static_cast<std::size_t>(state.label(i)) * class_count + c] += 1;
    }
    const double inv_logc = 1.0 / std::log(static_cast<double>(class_count));
    double total = 0.0;
    for (int r = 0; r < k; ++r) {
        const double nr = static_cast<double>(state.size(r));
        double h = 0.0;
        for (int c = 0; c < class_count; ++c) {
            const auto cnt = counts[static_cast<std::size_t>(r) * class_count + c];
            if (cnt == 0) continue;
            const double p = static_cast<double>(cnt) / nr;
            h -= p * std::log(p);
        }
        total += (nr / static_cast<double>(state.n())) * h * inv_logc;
    }
    return total;
}

double entropy(const ClusterState& state) {
    const Dataset& ds = state.dataset();
    return entropy(state, ds.class_ids(), ds.class_count());
}

double recall_at(const std::vector<std::vector<int>>& results,
                 std::span<const int> true_nn, int R) {
    if (results.size() != true_nn.size()) {
        throw Error("result list count does not match query count");
    }
    std::size_t hits = 0;
    for (std::size_t q = 0; q < results.size(); ++q) {
        const auto& list = results[q];
        if (static_cast<int>(list.size()) < R) {
            throw Error("result list of query " + std::to_string(q) +
                        " is shorter than R=" + std::to_string(R));
        }
        const auto end = list.begin() + R;
        if (std::find(list.begin(), end, true_nn[q]) != end) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(results.size());
}

}  // namespace bkm
