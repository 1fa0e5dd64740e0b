#include "bkm/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "bkm/boost_kmeans.hpp"
#include "bkm/errors.hpp"

namespace bkm {

namespace {

using clock = std::chrono::steady_clock;

double ms_since(clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

double l2_sq(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double e = a[i] - b[i];
        s += e * e;
    }
    return s;
}

std::span<const double> center_row(const std::vector<double>& centers, int r,
                                   int d) {
    return {centers.data() + static_cast<std::size_t>(r) * d,
            static_cast<std::size_t>(d)};
}

int nearest_center(const Dataset& ds, std::size_t i,
                   const std::vector<double>& centers, int k) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int r = 0; r < k; ++r) {
        const double d2 = l2_sq(ds.row(i), center_row(centers, r, ds.d()));
        if (d2 < best_d) {
            best_d = d2;
            best = r;
        }
    }
    return best;
}

/// Average squared distance to the nearest of the current centers.
double center_distortion(const Dataset& ds, const std::vector<double>& centers,
                         int k) {
    double total = 0.0;
    for (std::size_t i = 0; i < ds.n(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < k; ++r) {
            best = std::min(best, l2_sq(ds.row(i), center_row(centers, r, ds.d())));
        }
        total += best;
    }
    return total / static_cast<double>(ds.n());
}

/// Average squared distance to the assigned cluster mean, via the
/// composite identity (E - sum_r D_r'D_r/n_r) / n.
double partition_distortion(const Dataset& ds, const std::vector<int>& labels,
                            int k) {
    const int d = ds.d();
    std::vector<double> comp(static_cast<std::size_t>(k) * d, 0.0);
    std::vector<std::int64_t> sizes(k, 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        auto x = ds.row(i);
        double* dst = comp.data() + static_cast<std::size_t>(labels[i]) * d;
        for (int j = 0; j < d; ++j) dst[j] += x[j];
        sizes[labels[i]] += 1;
    }
    double score = 0.0;
    for (int r = 0; r < k; ++r) {
        if (sizes[r] == 0) continue;
        double sq = 0.0;
        const double* c = comp.data() + static_cast<std::size_t>(r) * d;
        for (int j = 0; j < d; ++j) sq += c[j] * c[j];
        score += sq / static_cast<double>(sizes[r]);
    }
    return (ds.energy() - score) / static_cast<double>(ds.n());
}

std::vector<double> means_of(const Dataset& ds, const std::vector<int>& labels,
                             int k) {
    const int d = ds.d();
    std::vector<double> centers(static_cast<std::size_t>(k) * d, 0.0);
    std::vector<std::int64_t> sizes(k, 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        auto x = ds.row(i);
        double* dst = centers.data() + static_cast<std::size_t>(labels[i]) * d;
        for (int j = 0; j < d; ++j) dst[j] += x[j];
        sizes[labels[i]] += 1;
    }
    for (int r = 0; r < k; ++r) {
        if (sizes[r] == 0) continue;
        const double inv = 1.0 / static_cast<double>(sizes[r]);
        double* dst = centers.data() + static_cast<std::size_t>(r) * d;
        for (int j = 0; j < d; ++j) dst[j] *= inv;
    }
    return centers;
}

std::vector<double> seed_centers(const Dataset& ds, const ClusterConfig& cfg,
                                 std::mt19937_64& rng) {
    const auto seeds = cfg.init == InitMode::kpp
                           ? kpp_seeds(ds, cfg.k, rng)
                           : random_seeds(ds, cfg.k, rng);
    std::vector<double> centers;
    centers.reserve(static_cast<std::size_t>(cfg.k) * ds.d());
    for (std::size_t s : seeds) {
        auto r = ds.row(s);
        centers.insert(centers.end(), r.begin(), r.end());
    }
    return centers;
}

}  // namespace

void repair_empty_clusters(const Dataset& ds, std::vector<int>& labels, int k) {
    const int d = ds.d();
    while (true) {
        std::vector<std::int64_t> sizes(k, 0);
        for (int l : labels) sizes[l] += 1;
        int empty = -1;
        for (int r = 0; r < k; ++r) {
            if (sizes[r] == 0) {
                empty = r;
                break;
            }
        }
        if (empty < 0) return;

        int largest = 0;
        for (int r = 1; r < k; ++r) {
            if (sizes[r] > sizes[largest]) largest = r;
        }
        std::vector<double> mean(d, 0.0);
        for (std::size_t i = 0; i < ds.n(); ++i) {
            if (labels[i] != largest) continue;
            auto x = ds.row(i);
            for (int j = 0; j < d; ++j) mean[j] += x[j];
        }
        for (int j = 0; j < d; ++j) mean[j] /= static_cast<double>(sizes[largest]);

        std::size_t farthest = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < ds.n(); ++i) {
            if (labels[i] != largest) continue;
            const double d2 = l2_sq(ds.row(i), mean);
            if (d2 > far_d) {
                far_d = d2;
                farthest = i;
            }
        }
        labels[farthest] = empty;
    }
}

ClusterResult lloyd_from_labels(const Dataset& ds, std::vector<int> labels,
                                const ClusterConfig& cfg) {
    const int k = cfg.k;
    const std::size_t n = ds.n();
    IterationLog log;
    for (int pass = 1; pass <= cfg.max_passes; ++pass) {
        const auto t0 = clock::now();
        const auto centers = means_of(ds, labels, k);
        std::int64_t moves = 0;
        std::vector<int> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = nearest_center(ds, i, centers, k);
            if (next[i] != labels[i]) ++moves;
        }
        repair_empty_clusters(ds, next, k);
        if (moves == 0) {
            // Recount after repair so a repaired pass never reads as a
            // fixed point.
            for (std::size_t i = 0; i < n; ++i)
                if (next[i] != labels[i]) ++moves;
        }
        labels = std::move(next);
        log.entries.push_back({pass, partition_distortion(ds, labels, k), moves,
                               static_cast<std::int64_t>(n) * k, ms_since(t0)});
        if (moves == 0) break;
    }
    return {build_state(ds, std::move(labels), k), std::move(log)};
}

ClusterResult lloyd(const Dataset& ds, const ClusterConfig& cfg) {
    validate_config(cfg, ds);
    std::mt19937_64 rng(cfg.seed);
    const auto centers = seed_centers(ds, cfg, rng);
    std::vector<int> labels(ds.n());
    for (std::size_t i = 0; i < ds.n(); ++i) {
        labels[i] = nearest_center(ds, i, centers, cfg.k);
    }
    repair_empty_clusters(ds, labels, cfg.k);
    return lloyd_from_labels(ds, std::move(labels), cfg);
}

ClusterResult kmeanspp(const Dataset& ds, const ClusterConfig& cfg) {
    ClusterConfig c = cfg;
    c.init = InitMode::kpp;
    return lloyd(ds, c);
}

ClusterResult minibatch(const Dataset& ds, const ClusterConfig& cfg) {
    validate_config(cfg, ds);
    const int k = cfg.k;
    const int d = ds.d();
    const std::size_t n = ds.n();
    std::mt19937_64 rng(cfg.seed);

    std::vector<double> centers = seed_centers(ds, cfg, rng);
    std::vector<std::int64_t> counts(k, 0);
    std::vector<int> prev(n, -1);
    const auto batch_size = static_cast<std::size_t>(
        std::ceil(cfg.minibatch_fraction * static_cast<double>(n)));

    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});

    IterationLog log;
    for (int pass = 1; pass <= cfg.max_passes; ++pass) {
        const auto t0 = clock::now();
        for (std::size_t j = 0; j < batch_size; ++j) {
            const std::size_t pick =
                j + std::uniform_int_distribution<std::size_t>(0, n - 1 - j)(rng);
            std::swap(pool[j], pool[pick]);
        }
        std::int64_t moves = 0;
        if (cfg.minibatch_pass_end_update) {
            std::vector<double> sums(static_cast<std::size_t>(k) * d, 0.0);
            std::vector<std::int64_t> assigned(k, 0);
            for (std::size_t j = 0; j < batch_size; ++j) {
                const std::size_t i = pool[j];
                const int c = nearest_center(ds, i, centers, k);
                if (c != prev[i]) ++moves;
                prev[i] = c;
                auto x = ds.row(i);
                double* dst = sums.data() + static_cast<std::size_t>(c) * d;
                for (int jj = 0; jj < d; ++jj) dst[jj] += x[jj];
                assigned[c] += 1;
            }
            for (int r = 0; r < k; ++r) {
                if (assigned[r] == 0) continue;
                const double inv = 1.0 / static_cast<double>(assigned[r]);
                double* dst = centers.data() + static_cast<std::size_t>(r) * d;
                const double* s = sums.data() + static_cast<std::size_t>(r) * d;
                for (int jj = 0; jj < d; ++jj) dst[jj] = s[jj] * inv;
            }
        } else {
            for (std::size_t j = 0; j < batch_size; ++j) {
                const std::size_t i = pool[j];
                const int c = nearest_center(ds, i, centers, k);
                if (c != prev[i]) ++moves;
                prev[i] = c;
                counts[c] += 1;
                const double eta = 1.0 / static_cast<double>(counts[c]);
                auto x = ds.row(i);
                double* dst = centers.data() + static_cast<std::size_t>(c) * d;
                for (int jj = 0; jj < d; ++jj) dst[jj] += eta * (x[jj] - dst[jj]);
            }
        }
        log.entries.push_back({pass, center_distortion(ds, centers, k), moves,
                               static_cast<std::int64_t>(batch_size) * k,
                               ms_since(t0)});
    }

    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = nearest_center(ds, i, centers, k);
    repair_empty_clusters(ds, labels, k);
    return {build_state(ds, std::move(labels), k), std::move(log)};
}

ClusterResult lvq(const Dataset& ds, const ClusterConfig& cfg) {
    validate_config(cfg, ds);
    const int k = cfg.k;
    const int d = ds.d();
    const std::size_t n = ds.n();
    std::mt19937_64 rng(cfg.seed);

    std::vector<double> centers = seed_centers(ds, cfg, rng);
    std::vector<int> prev(n, -1);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    IterationLog log;
    for (int pass = 1; pass <= cfg.max_passes; ++pass) {
        const auto t0 = clock::now();
        const double eta = std::max(
            cfg.lvq_rate0 - cfg.lvq_decay * static_cast<double>(pass - 1), 0.0);
        std::shuffle(order.begin(), order.end(), rng);
        std::int64_t moves = 0;
        for (std::size_t i : order) {
            const int c = nearest_center(ds, i, centers, k);
            if (c != prev[i]) ++moves;
            prev[i] = c;
            if (eta > 0.0) {
                auto x = ds.row(i);
                double* dst = centers.data() + static_cast<std::size_t>(c) * d;
                for (int j = 0; j < d; ++j) dst[j] += eta * (x[j] - dst[j]);
            }
        }
        log.entries.push_back({pass, center_distortion(ds, centers, k), moves,
                               static_cast<std::int64_t>(n) * k, ms_since(t0)});
        if (eta == 0.0) break;  // centroids frozen from here on
    }

    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = nearest_center(ds, i, centers, k);
    repair_empty_clusters(ds, labels, k);
    return {build_state(ds, std::move(labels), k), std::move(log)};
}

}  // namespace bkm
