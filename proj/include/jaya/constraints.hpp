#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "jaya/errors.hpp"
#include "jaya/types.hpp"

namespace jaya {

/// Inequality constraint: feasible iff g(x) <= 0. Must be pure.
using ConstraintFn = std::function<double(const Vector&)>;

/// Static quadratic exterior penalty. Equality constraints are expressed as
/// two inequalities by the caller.
struct ConstraintSet {
    std::vector<ConstraintFn> constraints;
    double penalty_weight = 1e6;
};

/// Total violation measure: sum_j max(0, g_j(x))^2. Zero exactly on the
/// feasible set. A constraint returning NaN/inf aborts the run; silently
/// distorting the search would hide user-function bugs.
inline double violation(const Vector& x, const ConstraintSet& cs) {
    double total = 0.0;
    for (std::size_t j = 0; j < cs.constraints.size(); ++j) {
        const double g = cs.constraints[j](x);
        if (!std::isfinite(g))
            throw NonFiniteConstraintError(
                "constraint " + std::to_string(j) + " returned a non-finite value", j);
        if (g > 0.0) total += g * g;
    }
    return total;
}

/// Penalized fitness from an already-computed violation measure.
inline double penalized_value(double raw, double violation_measure, double penalty_weight) {
    return raw + penalty_weight * violation_measure;
}

/// Penalized fitness: raw + weight * violation(x). `raw` must already be in
/// minimize form (maximize-sense objectives are negated before this), so the
/// penalty always worsens fitness.
inline double penalize(double raw, const Vector& x, const ConstraintSet& cs) {
    return penalized_value(raw, violation(x, cs), cs.penalty_weight);
}

} // namespace jaya
