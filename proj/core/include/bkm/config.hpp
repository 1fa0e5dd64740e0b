#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace bkm {

class Dataset;

enum class Algorithm { bkm, bkm_fast, lloyd, kmeanspp, minibatch, lvq };
enum class InitMode { none, rnd, kpp };
enum class SplitPriority { size, intra_distance };

const char* to_string(Algorithm a);
const char* to_string(InitMode m);
Algorithm algorithm_from_string(const std::string& s);
InitMode init_mode_from_string(const std::string& s);

/// Run configuration shared by every clusterer.
struct ClusterConfig {
    Algorithm algorithm = Algorithm::bkm;
    InitMode init = InitMode::none;
    int k = 2;
    std::uint64_t seed = 0;
    int max_passes = 130;

    /// Candidate pruning width; disabled when unset.
    std::optional<int> k0;
    /// First 1-based pass at which pruning is active. Early passes move
    /// samples far, so pruning starts after pass 2 by default.
    int k0_start_pass = 3;

    double minibatch_fraction = 0.10;
    double lvq_rate0 = 0.01;
    double lvq_decay = 4e-4;
    /// Testing mode: apply mini-batch centroid updates only at pass end
    /// (batch means) instead of per-point running averages.
    bool minibatch_pass_end_update = false;

    SplitPriority split_priority = SplitPriority::size;
    /// Bisect disjoint clusters concurrently; pop order then depends on
    /// completion interleaving, so runs are no longer deterministic.
    bool parallel_bisect = false;
};

/// Throws ConfigError unless 2 <= k <= n, k0 (if set) in [1, k],
/// 0 < minibatch_fraction <= 1 and max_passes >= 1.
void validate_config(const ClusterConfig& cfg, const Dataset& ds);

/// One per-pass record of an iterative run.
struct PassEntry {
    int pass = 0;
    double distortion = 0.0;
    std::int64_t moves_accepted = 0;
    std::int64_t gain_evaluations = 0;
    double elapsed_ms = 0.0;
};

struct IterationLog {
    std::vector<PassEntry> entries;

    std::int64_t total_moves() const {
        std::int64_t s = 0;
        for (const auto& e : entries) s += e.moves_accepted;
        return s;
    }
    std::int64_t total_gain_evaluations() const {
        std::int64_t s = 0;
        for (const auto& e : entries) s += e.gain_evaluations;
        return s;
    }
    double total_elapsed_ms() const {
        double s = 0.0;
        for (const auto& e : entries) s += e.elapsed_ms;
        return s;
    }
    int passes() const { return static_cast<int>(entries.size()); }
};

}  // namespace bkm
