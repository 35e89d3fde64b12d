#pragma once

#include <string>

#include "jaya/errors.hpp"
#include "jaya/types.hpp"

namespace jaya {

/// Per-variable search box. lower[i] == upper[i] pins a variable.
struct Bounds {
    Vector lower;
    Vector upper;

    Index n_var() const { return lower.size(); }

    bool contains(const Vector& x) const {
        return x.size() == n_var() && (x.array() >= lower.array()).all() &&
               (x.array() <= upper.array()).all();
    }
};

inline Bounds make_box(double lo, double hi, Index n) {
    return {Vector::Constant(n, lo), Vector::Constant(n, hi)};
}

inline void validate(const Bounds& b) {
    if (b.lower.size() != b.upper.size())
        throw InvalidBoundsError("bounds: lower has " + std::to_string(b.lower.size()) +
                                 " entries, upper has " + std::to_string(b.upper.size()));
    if (b.lower.size() < 1) throw InvalidBoundsError("bounds: need at least one variable");
    if (!b.lower.allFinite() || !b.upper.allFinite())
        throw InvalidBoundsError("bounds: limits must be finite");
    if ((b.lower.array() > b.upper.array()).any())
        throw InvalidBoundsError("bounds: lower[i] > upper[i] for some variable");
}

/// Projects every coordinate onto [lower[i], upper[i]].
template <typename Derived>
Vector clamp(const Eigen::MatrixBase<Derived>& x, const Bounds& b) {
    return x.cwiseMax(b.lower).cwiseMin(b.upper);
}

} // namespace jaya
