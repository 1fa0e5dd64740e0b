#include "bkm/objective.hpp"

#include <string>

#include "bkm/errors.hpp"

namespace bkm {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

double objective_score(const ClusterState& state) {
    double score = 0.0;
    for (int r = 0; r < state.k(); ++r) {
        auto c = state.composite(r);
        score += dot(c, c) / static_cast<double>(state.size(r));
    }
    return score;
}

MoveGain move_gain(const ClusterState& state, std::size_t i, int v) {
    const int u = state.label(i);
    if (u == v) {
        throw SameClusterError("sample " + std::to_string(i) +
                               " is already in cluster " + std::to_string(v));
    }
    const std::int64_t nu = state.size(u);
    if (nu < 2) {
        throw WouldEmptyClusterError("moving sample " + std::to_string(i) +
                                     " would empty cluster " + std::to_string(u));
    }
    const std::int64_t nv = state.size(v);
    auto x = state.dataset().row(i);
    const double xx = state.dataset().row_norm_sq(i);
    const double xdu = dot(x, state.composite(u));
    const double xdv = dot(x, state.composite(v));

    const double after = (state.composite_sq(v) + 2.0 * xdv + xx) /
                             static_cast<double>(nv + 1) +
                         (state.composite_sq(u) - 2.0 * xdu + xx) /
                             static_cast<double>(nu - 1);
    const double before = state.composite_sq(v) / static_cast<double>(nv) +
                          state.composite_sq(u) / static_cast<double>(nu);
    return MoveGain{i, u, v, after - before, state.revision()};
}

void apply_move(ClusterState& state, const MoveGain& g) {
    if (g.revision != state.revision()) {
        throw StaleGainError("gain for sample " + std::to_string(g.sample) +
                             " was computed against revision " +
                             std::to_string(g.revision) + ", state is at " +
                             std::to_string(state.revision()));
    }
    state.move_sample(g.sample, g.to, g.delta);
}

std::optional<MoveGain> best_move(const ClusterState& state, std::size_t i,
                                  std::span<const int> candidates) {
    const int u = state.label(i);
    if (state.size(u) < 2) return std::nullopt;
    std::optional<MoveGain> best;
    for (int v : candidates) {
        if (v == u) continue;
        MoveGain g = move_gain(state, i, v);
        if (g.delta <= 0.0) continue;
        if (!best || g.delta > best->delta ||
            (g.delta == best->delta && g.to < best->to)) {
            best = g;
        }
    }
    return best;
}

std::optional<MoveGain> best_move(const ClusterState& state, std::size_t i) {
    const int u = state.label(i);
    if (state.size(u) < 2) return std::nullopt;
    std::optional<MoveGain> best;
    for (int v = 0; v < state.k(); ++v) {
        if (v == u) continue;
        MoveGain g = move_gain(state, i, v);
        if (g.delta <= 0.0) continue;
        if (!best || g.delta > best->delta) best = g;
    }
    return best;
}

}  // namespace bkm
