#pragma once

#include <functional>
#include <vector>

#include "jaya/bounds.hpp"
#include "jaya/config.hpp"
#include "jaya/constraints.hpp"
#include "jaya/population.hpp"
#include "jaya/types.hpp"

namespace jaya {

/// Objective in the user's scale. Must be pure and finite on the box;
/// evaluations may run on parallel workers.
using Objective = std::function<double(const Vector&)>;

struct IterationRecord {
    int iteration;         // 1-based
    double best_penalized; // minimize-form penalized best after this iteration
    int pop_size;          // population size used during this iteration
};

struct RunResult {
    Vector best_x;
    double best_value = 0.0; // raw objective at best_x, user scale, unpenalized
    std::vector<IterationRecord> history;
    int iterations_run = 0;
    bool stopped_early = false;
    long evaluations = 0; // objective calls made (pop_size * (1 + iterations) when non-adaptive)
};

/// True iff the best value improved by less than `tolerance` over the last
/// `patience` iterations: best[t - patience] - best[t] < tolerance, where t
/// is the latest entry. Needs at least patience + 1 entries to fire.
bool early_stop_check(const std::vector<double>& best_history, double tolerance, int patience);

/// Grows the population by ceil(10 %) with fresh uniform samples when
/// improvement has stalled, otherwise shrinks by ceil(10 %) by dropping the
/// worst-penalized members (ties drop the higher index, so the current best
/// is never removed). Sizes stay within [min_pop, max_pop]; inserted members
/// are unevaluated.
Population adapt_population(Population pop, bool improved_recently, const SolverConfig& cfg,
                            RngStream& rng);

/// Single-objective Jaya. Per iteration: evaluate any unevaluated members
/// (parallelizable batch), then sweep the population in index order; each
/// member proposes one move against the population's current best and worst,
/// and the proposal replaces the member iff its penalized value is strictly
/// better. Best and worst are refreshed after every acceptance, so the sweep
/// is sequential; all random draws come from one serial stream and results
/// never depend on the worker count.
RunResult jaya(const Objective& objective, const Bounds& bounds, const ConstraintSet& constraints,
               const SolverConfig& cfg);

} // namespace jaya
