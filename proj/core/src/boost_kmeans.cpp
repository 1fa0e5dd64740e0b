#include "bkm/boost_kmeans.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "bkm/errors.hpp"

namespace bkm {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double l2_sq(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double e = a[i] - b[i];
        s += e * e;
    }
    return s;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Nearest-seed assignment with ties to the lowest seed id; each seed
/// sample is then pinned to its own cluster so none starts empty.
std::vector<int> assign_to_seeds(const Dataset& ds,
                                 std::span<const std::size_t> seeds) {
    std::vector<int> labels(ds.n());
    for (std::size_t i = 0; i < ds.n(); ++i) {
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < seeds.size(); ++j) {
            const double d2 = l2_sq(ds.row(i), ds.row(seeds[j]));
            if (d2 < best_d) {
                best_d = d2;
                best = static_cast<int>(j);
            }
        }
        labels[i] = best;
    }
    for (std::size_t j = 0; j < seeds.size(); ++j)
        labels[seeds[j]] = static_cast<int>(j);
    return labels;
}

struct PassStats {
    std::int64_t moves = 0;
    std::int64_t gain_evals = 0;
};

/// One optimization pass. `k0` enables pruned candidate search; pass it as
/// 0 for the full scan.
PassStats run_pass(ClusterState& st, std::mt19937_64& rng, BkmSeek seek,
                   int k0, const RunHooks* hooks) {
    const std::size_t n = st.n();
    const int k = st.k();
    PassStats stats;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> cands;
    for (std::size_t i : order) {
        const int u = st.label(i);
        if (st.size(u) < 2) continue;

        if (seek == BkmSeek::best && k0 == 0) {
            std::optional<MoveGain> best;
            for (int v = 0; v < k; ++v) {
                if (v == u) continue;
                MoveGain g = move_gain(st, i, v);
                ++stats.gain_evals;
                if (g.delta > 0.0 && (!best || g.delta > best->delta)) best = g;
            }
            if (best) {
                apply_move(st, *best);
                ++stats.moves;
                if (hooks && hooks->on_move) hooks->on_move(*best, st.score());
            }
            continue;
        }

        if (k0 > 0) {
            cands = prune_candidates(st, i, k0);
        } else {
            cands.resize(k);
            std::iota(cands.begin(), cands.end(), 0);
        }

        if (seek == BkmSeek::best) {
            std::optional<MoveGain> best;
            for (int v : cands) {
                if (v == u) continue;
                MoveGain g = move_gain(st, i, v);
                ++stats.gain_evals;
                if (g.delta > 0.0 && (!best || g.delta > best->delta)) best = g;
            }
            if (best) {
                apply_move(st, *best);
                ++stats.moves;
                if (hooks && hooks->on_move) hooks->on_move(*best, st.score());
            }
        } else {
            std::shuffle(cands.begin(), cands.end(), rng);
            for (int v : cands) {
                if (v == u) continue;
                MoveGain g = move_gain(st, i, v);
                ++stats.gain_evals;
                if (g.delta > 0.0) {
                    apply_move(st, g);
                    ++stats.moves;
                    if (hooks && hooks->on_move) hooks->on_move(g, st.score());
                    break;
                }
            }
        }
    }
    return stats;
}

}  // namespace

std::vector<std::size_t> random_seeds(const Dataset& ds, int k,
                                      std::mt19937_64& rng) {
    std::vector<std::size_t> pool(ds.n());
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    // Partial Fisher-Yates: only the first k draws are needed.
    for (int j = 0; j < k; ++j) {
        const std::size_t pick =
            j + std::uniform_int_distribution<std::size_t>(0, pool.size() - 1 - j)(rng);
        std::swap(pool[j], pool[pick]);
    }
    pool.resize(k);
    return pool;
}

std::vector<std::size_t> kpp_seeds(const Dataset& ds, int k,
                                   std::mt19937_64& rng,
                                   std::span<const std::size_t> preset) {
    const std::size_t n = ds.n();
    std::vector<std::size_t> seeds(preset.begin(), preset.end());
    std::vector<double> mind(n, std::numeric_limits<double>::infinity());

    auto absorb = [&](std::size_t s) {
        for (std::size_t i = 0; i < n; ++i) {
            const double d2 = l2_sq(ds.row(i), ds.row(s));
            if (d2 < mind[i]) mind[i] = d2;
        }
    };
    for (std::size_t s : seeds) absorb(s);

    if (seeds.empty()) {
        seeds.push_back(uniform_index(rng, n));
        absorb(seeds.back());
    }
    while (static_cast<int>(seeds.size()) < k) {
        double total = 0.0;
        for (double v : mind) total += v;
        std::size_t next = n;
        if (total > 0.0) {
            const double target =
                std::uniform_real_distribution<double>(0.0, total)(rng);
            double cum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                cum += mind[i];
                if (cum > target) {
                    next = i;
                    break;
                }
            }
            if (next == n) {             // fp underrun at the tail
                for (std::size_t i = n; i-- > 0;) {
                    if (mind[i] > 0.0) {
                        next = i;
                        break;
                    }
                }
            }
        } else {
            // Every point coincides with a seed: fall back to a uniform
            // draw over the not-yet-chosen indices.
            std::vector<std::size_t> open;
            for (std::size_t i = 0; i < n; ++i) {
                if (std::find(seeds.begin(), seeds.end(), i) == seeds.end())
                    open.push_back(i);
            }
            next = open[uniform_index(rng, open.size())];
        }
        seeds.push_back(next);
        absorb(next);
    }
    return seeds;
}

std::vector<int> init_labels(const Dataset& ds, int k, InitMode mode,
                             std::mt19937_64& rng) {
    if (k < 1 || static_cast<std::size_t>(k) > ds.n()) {
        throw ConfigError("init_labels requires 1 <= k <= n");
    }
    switch (mode) {
        case InitMode::none: {
            std::vector<std::size_t> perm(ds.n());
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> labels(ds.n());
            std::uniform_int_distribution<int> any(0, k - 1);
            for (std::size_t j = 0; j < ds.n(); ++j) {
                labels[perm[j]] =
                    j < static_cast<std::size_t>(k) ? static_cast<int>(j) : any(rng);
            }
            return labels;
        }
        case InitMode::rnd:
            return assign_to_seeds(ds, random_seeds(ds, k, rng));
        case InitMode::kpp:
            return assign_to_seeds(ds, kpp_seeds(ds, k, rng));
    }
    throw ConfigError("unknown init mode");
}

std::vector<int> init_labels(const Dataset& ds, int k, InitMode mode,
                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return init_labels(ds, k, mode, rng);
}

std::vector<int> prune_candidates(const ClusterState& state, std::size_t i,
                                  int k0) {
    const int k = state.k();
    if (k0 < 1 || k0 > k) throw ConfigError("prune_candidates requires 1 <= k0 <= k");
    const int u = state.label(i);

    auto x = state.dataset().row(i);
    const double xx = state.dataset().row_norm_sq(i);
    std::vector<std::pair<double, int>> dist(k);
    for (int r = 0; r < k; ++r) {
        const double nr = static_cast<double>(state.size(r));
        const double xc = dot(x, state.composite(r)) / nr;
        dist[r] = {xx - 2.0 * xc + state.composite_sq(r) / (nr * nr), r};
    }
    if (k0 < k) {
        std::nth_element(dist.begin(), dist.begin() + (k0 - 1), dist.end());
        dist.resize(k0);
    }
    std::vector<int> out;
    out.reserve(k0 + 1);
    bool has_own = false;
    for (const auto& [d2, r] : dist) {
        out.push_back(r);
        has_own |= (r == u);
    }
    if (!has_own) out.push_back(u);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t bkm_pass_fast(ClusterState& state, std::mt19937_64& rng) {
    return run_pass(state, rng, BkmSeek::fast, 0, nullptr).moves;
}

IterationLog bkm_optimize(ClusterState& state, const ClusterConfig& cfg,
                          std::mt19937_64& rng, const RunHooks* hooks) {
    const BkmSeek seek =
        cfg.algorithm == Algorithm::bkm_fast ? BkmSeek::fast : BkmSeek::best;
    const double energy = state.dataset().energy();
    const double inv_n = 1.0 / static_cast<double>(state.n());

    IterationLog log;
    for (int pass = 1; pass <= cfg.max_passes; ++pass) {
        const auto t0 = std::chrono::steady_clock::now();
        // Pruning with k0 >= k selects every cluster anyway; keep the
        // full-scan path so the two configurations run identically.
        const int k0 = (cfg.k0 && *cfg.k0 < state.k() &&
                        pass >= cfg.k0_start_pass)
                           ? *cfg.k0
                           : 0;
        const PassStats stats = run_pass(state, rng, seek, k0, hooks);
        state.refresh();
        const auto t1 = std::chrono::steady_clock::now();
        log.entries.push_back(
            {pass, (energy - state.score()) * inv_n, stats.moves,
             stats.gain_evals,
             std::chrono::duration<double, std::milli>(t1 - t0).count()});
        if (stats.moves == 0) break;
    }
    return log;
}

ClusterResult bkm_cluster(const Dataset& ds, const ClusterConfig& cfg,
                          const RunHooks* hooks) {
    validate_config(cfg, ds);
    std::mt19937_64 rng(cfg.seed);
    ClusterState state =
        build_state(ds, init_labels(ds, cfg.k, cfg.init, rng), cfg.k);
    IterationLog log = bkm_optimize(state, cfg, rng, hooks);
    return {std::move(state), std::move(log)};
}

}  // namespace bkm
