#include "bkm/config.hpp"

#include "bkm/dataset.hpp"
#include "bkm/errors.hpp"

namespace bkm {

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::bkm: return "bkm";
        case Algorithm::bkm_fast: return "bkm-fast";
        case Algorithm::lloyd: return "lloyd";
        case Algorithm::kmeanspp: return "kmeanspp";
        case Algorithm::minibatch: return "minibatch";
        case Algorithm::lvq: return "lvq";
    }
    return "?";
}

const char* to_string(InitMode m) {
    switch (m) {
        case InitMode::none: return "none";
        case InitMode::rnd: return "rnd";
        case InitMode::kpp: return "kpp";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "bkm") return Algorithm::bkm;
    if (s == "bkm-fast") return Algorithm::bkm_fast;
    if (s == "lloyd") return Algorithm::lloyd;
    if (s == "kmeanspp") return Algorithm::kmeanspp;
    if (s == "minibatch") return Algorithm::minibatch;
    if (s == "lvq") return Algorithm::lvq;
    throw ConfigError("unknown algorithm: " + s);
}

InitMode init_mode_from_string(const std::string& s) {
    if (s == "none") return InitMode::none;
    if (s == "rnd") return InitMode::rnd;
    if (s == "kpp") return InitMode::kpp;
    throw ConfigError("unknown init mode: " + s);
}

void validate_config(const ClusterConfig& cfg, const Dataset& ds) {
    if (cfg.k < 2 || static_cast<std::size_t>(cfg.k) > ds.n()) {
        throw ConfigError("k must satisfy 2 <= k <= n, got k=" +
                          std::to_string(cfg.k) + " n=" + std::to_string(ds.n()));
    }
    if (cfg.k0 && (*cfg.k0 < 1 || *cfg.k0 > cfg.k)) {
        throw ConfigError("k0 must satisfy 1 <= k0 <= k, got k0=" +
                          std::to_string(*cfg.k0));
    }
    if (cfg.minibatch_fraction <= 0.0 || cfg.minibatch_fraction > 1.0) {
        throw ConfigError("minibatch_fraction must be in (0, 1]");
    }
    if (cfg.max_passes < 1) throw ConfigError("max_passes must be >= 1");
    if (cfg.k0_start_pass < 1) throw ConfigError("k0_start_pass must be >= 1");
}

}  // namespace bkm
