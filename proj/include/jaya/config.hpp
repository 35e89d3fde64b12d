#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "jaya/errors.hpp"
#include "jaya/types.hpp"

namespace jaya {

struct EarlyStop {
    double tolerance = 1e-3;
    int patience = 10;
};

/// Shared solver settings. The algorithm itself is parameter-free; everything
/// here is run control, not tuning.
struct SolverConfig {
    int pop_size = 50;
    int max_iter = 0; // required, >= 1
    Sense sense = Sense::minimize;
    std::optional<std::uint64_t> seed;
    bool adaptive_pop = false;
    std::optional<int> min_pop; // defaults to ceil(pop_size / 2), floor 2
    std::optional<int> max_pop; // defaults to 2 * pop_size
    std::optional<EarlyStop> early_stop;
    int workers = 0; // 0 = all available cores
};

inline int resolved_min_pop(const SolverConfig& cfg) {
    if (cfg.min_pop) return *cfg.min_pop;
    return cfg.pop_size < 4 ? 2 : (cfg.pop_size + 1) / 2;
}

inline int resolved_max_pop(const SolverConfig& cfg) {
    return cfg.max_pop ? *cfg.max_pop : 2 * cfg.pop_size;
}

inline void validate(const SolverConfig& cfg) {
    if (cfg.pop_size < 2)
        throw InvalidConfigError("pop_size must be at least 2, got " +
                                 std::to_string(cfg.pop_size));
    if (cfg.max_iter < 1)
        throw InvalidConfigError("max_iter must be at least 1, got " +
                                 std::to_string(cfg.max_iter));
    if (cfg.workers < 0) throw InvalidConfigError("workers must be nonnegative");
    if (cfg.adaptive_pop) {
        const int lo = resolved_min_pop(cfg), hi = resolved_max_pop(cfg);
        if (lo < 2) throw InvalidConfigError("min_pop must be at least 2");
        if (lo > cfg.pop_size || cfg.pop_size > hi)
            throw InvalidConfigError("adaptive population needs min_pop <= pop_size <= max_pop");
    }
    if (cfg.early_stop) {
        if (!(cfg.early_stop->tolerance > 0.0) || !std::isfinite(cfg.early_stop->tolerance))
            throw InvalidConfigError("early-stop tolerance must be positive and finite");
        if (cfg.early_stop->patience < 1)
            throw InvalidConfigError("early-stop patience must be at least 1");
    }
}

/// Configured seed, or fresh entropy when none was given.
inline std::uint64_t resolve_seed(const SolverConfig& cfg) {
    if (cfg.seed) return *cfg.seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

} // namespace jaya
