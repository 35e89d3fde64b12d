#pragma once

#include <concepts>
#include <string>

#include "jaya/bounds.hpp"
#include "jaya/errors.hpp"
#include "jaya/types.hpp"

namespace jaya {

template <typename R>
concept UniformSource = requires(R r) {
    { r.uniform() } -> std::convertible_to<double>;
};

/// The raw Jaya move, element-wise over any Eigen expressions:
///
///   x_new = x_old + r1 .* (x_best - x_old) - r2 .* (x_worst - x_old)
///
/// Each coordinate steps toward the best solution and away from the worst.
/// No clamping here; callers project the result back into the box.
template <typename D1, typename D2, typename D3, typename D4, typename D5>
auto jaya_step(const Eigen::MatrixBase<D1>& x_old, const Eigen::MatrixBase<D2>& x_best,
               const Eigen::MatrixBase<D3>& x_worst, const Eigen::MatrixBase<D4>& r1,
               const Eigen::MatrixBase<D5>& r2) {
    return (x_old.array() + r1.array() * (x_best.array() - x_old.array()) -
            r2.array() * (x_worst.array() - x_old.array()))
        .matrix();
}

/// Moves one candidate toward the best and away from the worst, then clamps
/// into the box. One fresh (r1, r2) pair is drawn per coordinate, in index
/// order (r1 first); golden values depend on this order.
template <UniformSource Rng>
Vector jaya_update(const Vector& x_old, const Vector& x_best, const Vector& x_worst,
                   const Bounds& bounds, Rng& rng) {
    const Index n = bounds.n_var();
    if (x_old.size() != n || x_best.size() != n || x_worst.size() != n)
        throw DimensionError("jaya_update: vector sizes " + std::to_string(x_old.size()) + "/" +
                             std::to_string(x_best.size()) + "/" + std::to_string(x_worst.size()) +
                             " do not all match n_var = " + std::to_string(n));
    Vector r1(n), r2(n);
    for (Index i = 0; i < n; ++i) {
        r1[i] = rng.uniform();
        r2[i] = rng.uniform();
    }
    return clamp(jaya_step(x_old, x_best, x_worst, r1, r2), bounds);
}

} // namespace jaya
