#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "jaya/bounds.hpp"
#include "jaya/errors.hpp"
#include "jaya/rng.hpp"
#include "jaya/types.hpp"

namespace jaya {

/// One decision vector plus cached evaluation results.
///
/// `raw_objectives` stays empty until the candidate is evaluated; afterwards
/// it holds one entry per objective, in the user's scale (never negated).
/// `penalized` is the scalar used for comparisons: raw + weight * violation
/// in single-objective mode (minimize-form), or the bare constraint-violation
/// magnitude in multi-objective mode.
struct Candidate {
    Vector x;
    Vector raw_objectives;
    double penalized = std::numeric_limits<double>::quiet_NaN();

    bool evaluated() const { return raw_objectives.size() > 0; }
};

struct Population {
    Bounds bounds;
    std::vector<Candidate> members;
    int generation = 0;
};

/// Samples pop_size candidates uniformly inside the box.
///
/// Draw order is frozen: member-major, variable-minor, one uniform per
/// coordinate, x[i] = lower[i] + u * (upper[i] - lower[i]).
inline Population initialize_population(const Bounds& bounds, int pop_size, RngStream& rng) {
    validate(bounds);
    if (pop_size < 2)
        throw InvalidConfigError("population size must be at least 2, got " +
                                 std::to_string(pop_size));
    Population pop{bounds, {}, 0};
    pop.members.reserve(static_cast<std::size_t>(pop_size));
    const Index n = bounds.n_var();
    for (int m = 0; m < pop_size; ++m) {
        Candidate c;
        c.x.resize(n);
        for (Index i = 0; i < n; ++i)
            c.x[i] = bounds.lower[i] + rng.uniform() * (bounds.upper[i] - bounds.lower[i]);
        pop.members.push_back(std::move(c));
    }
    return pop;
}

/// Indices of the best and worst members by penalized value.
/// Ties break to the lowest index so trajectories are deterministic.
inline std::pair<std::size_t, std::size_t> select_best_worst(const Population& pop, Sense sense) {
    const double flip = sense_sign(sense);
    std::size_t best = 0, worst = 0;
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        const Candidate& c = pop.members[i];
        if (!c.evaluated())
            throw EvaluationOrderError("select_best_worst: member " + std::to_string(i) +
                                       " has not been evaluated");
        const double key = flip * c.penalized;
        if (key < flip * pop.members[best].penalized) best = i;
        if (key > flip * pop.members[worst].penalized) worst = i;
    }
    return {best, worst};
}

} // namespace jaya
