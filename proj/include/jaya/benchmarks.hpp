#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "jaya/bounds.hpp"
#include "jaya/config.hpp"
#include "jaya/errors.hpp"
#include "jaya/single_objective.hpp"
#include "jaya/types.hpp"

namespace jaya::bench {

/// sum x_i^2, minimum 0 at the origin.
template <typename Derived>
typename Derived::Scalar sphere(const Eigen::MatrixBase<Derived>& x) {
    return x.squaredNorm();
}

/// 10 n + sum [x_i^2 - 10 cos(2 pi x_i)], minimum 0 at the origin.
template <typename Derived>
typename Derived::Scalar rastrigin(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    return 10 * static_cast<Scalar>(x.size()) +
           (x.array().square() - 10 * (two_pi * x.array()).cos()).sum();
}

/// sum_{i<n} [100 (x_{i+1} - x_i^2)^2 + (x_i - 1)^2], minimum 0 at all ones.
template <typename Derived>
typename Derived::Scalar rosenbrock(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    if (x.size() < 2)
        throw DimensionError("rosenbrock needs at least 2 variables, got " +
                             std::to_string(x.size()));
    Scalar total = 0;
    for (Index i = 0; i + 1 < x.size(); ++i) {
        const Scalar a = x(i + 1) - x(i) * x(i);
        const Scalar b = x(i) - 1;
        total += 100 * a * a + b * b;
    }
    return total;
}

/// -20 exp(-0.2 sqrt(mean x^2)) - exp(mean cos(2 pi x)) + 20 + e, minimum 0
/// at the origin (floating point leaves ~4.4e-16 there).
template <typename Derived>
typename Derived::Scalar ackley(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    const Scalar n = static_cast<Scalar>(x.size());
    const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    using std::exp, std::sqrt;
    return -20 * exp(Scalar(-0.2) * sqrt(x.squaredNorm() / n)) -
           exp((two_pi * x.array()).cos().sum() / n) + 20 + std::numbers::e_v<Scalar>;
}

/// 1 + sum x_i^2 / 4000 - prod cos(x_i / sqrt(i)), 1-based i in the product;
/// minimum 0 at the origin.
template <typename Derived>
typename Derived::Scalar griewank(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    Scalar product = 1;
    for (Index i = 0; i < x.size(); ++i)
        product *= std::cos(x(i) / std::sqrt(static_cast<Scalar>(i + 1)));
    return 1 + x.squaredNorm() / 4000 - product;
}

struct BenchmarkProblem {
    std::string name;
    Objective f;
    Bounds default_bounds;
    double known_optimum_value = 0.0;
    Vector known_optimum_x;
};

/// Builds a named benchmark in dimension n. Registration verifies
/// |f(x*) - optimum| <= 1e-12 and throws otherwise.
BenchmarkProblem make_benchmark(const std::string& name, Index n);

const std::vector<std::string>& benchmark_names();

struct MultiBenchmark {
    std::string name;
    std::vector<Objective> objectives;
    Bounds default_bounds;
};

/// Named multi-objective demo problems: "two-sphere" (sum x^2 vs
/// sum (x - 2)^2 on [-5, 5]^n) and "axes" ((x_1, x_2) on [0, 1]^n).
MultiBenchmark make_multi_benchmark(const std::string& name, Index n);

const std::vector<std::string>& multi_benchmark_names();

struct SuiteRow {
    std::string problem;
    int n_var;
    int pop_size;
    int max_iter;
    std::uint64_t seed; // actual seed fed to the solver
    double achieved;
    long evaluations;
    bool stopped_early;
};

struct SuiteSummary {
    std::string problem;
    double best;
    double median;
    double worst;
    long total_evaluations;
};

struct SuiteReport {
    std::vector<SuiteRow> rows; // problem-major, repetition-minor
    std::vector<SuiteSummary> summaries;
};

/// Runs `jaya` once per (problem, seed) pair on each problem's default box.
/// Per-run seeds are mix_seed(seeds[rep], problem_index) so every run has
/// its own reproducible stream. Solver errors are rethrown annotated with
/// the problem name.
SuiteReport run_suite(const std::vector<BenchmarkProblem>& problems, const SolverConfig& cfg,
                      const std::vector<std::uint64_t>& seeds);

} // namespace jaya::bench
