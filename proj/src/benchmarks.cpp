#include "jaya/benchmarks.hpp"

#include <algorithm>
#include <cmath>

#include "jaya/parallel.hpp"
#include "jaya/rng.hpp"

namespace jaya::bench {

namespace {

BenchmarkProblem checked(BenchmarkProblem p) {
    const double at_optimum = p.f(p.known_optimum_x);
    if (std::abs(at_optimum - p.known_optimum_value) > 1e-12)
        throw Error("benchmark " + p.name + ": value at registered optimum is " +
                    std::to_string(at_optimum));
    return p;
}

} // namespace

BenchmarkProblem make_benchmark(const std::string& name, Index n) {
    if (n < 1) throw InvalidConfigError("benchmark dimension must be positive");
    if (name == "sphere")
        return checked({name, [](const Vector& x) { return sphere(x); },
                        make_box(-5.12, 5.12, n), 0.0, Vector::Zero(n)});
    if (name == "rastrigin")
        return checked({name, [](const Vector& x) { return rastrigin(x); },
                        make_box(-5.12, 5.12, n), 0.0, Vector::Zero(n)});
    if (name == "rosenbrock") {
        if (n < 2) throw DimensionError("rosenbrock needs at least 2 variables");
        return checked({name, [](const Vector& x) { return rosenbrock(x); }, make_box(-5, 10, n),
                        0.0, Vector::Ones(n)});
    }
    if (name == "ackley")
        return checked({name, [](const Vector& x) { return ackley(x); },
                        make_box(-32.768, 32.768, n), 0.0, Vector::Zero(n)});
    if (name == "griewank")
        return checked({name, [](const Vector& x) { return griewank(x); },
                        make_box(-600, 600, n), 0.0, Vector::Zero(n)});
    throw InvalidConfigError("unknown benchmark problem: " + name);
}

const std::vector<std::string>& benchmark_names() {
    static const std::vector<std::string> names = {"sphere", "rastrigin", "rosenbrock", "ackley",
                                                   "griewank"};
    return names;
}

MultiBenchmark make_multi_benchmark(const std::string& name, Index n) {
    if (n < 1) throw InvalidConfigError("benchmark dimension must be positive");
    if (name == "two-sphere")
        return {name,
                {[](const Vector& x) { return sphere(x); },
                 [](const Vector& x) { return sphere((x.array() - 2.0).matrix()); }},
                make_box(-5, 5, n)};
    if (name == "axes") {
        if (n < 2) throw DimensionError("axes needs at least 2 variables");
        return {name,
                {[](const Vector& x) { return x[0]; }, [](const Vector& x) { return x[1]; }},
                make_box(0, 1, n)};
    }
    throw InvalidConfigError("unknown multi-objective problem: " + name);
}

const std::vector<std::string>& multi_benchmark_names() {
    static const std::vector<std::string> names = {"two-sphere", "axes"};
    return names;
}

SuiteReport run_suite(const std::vector<BenchmarkProblem>& problems, const SolverConfig& cfg,
                      const std::vector<std::uint64_t>& seeds) {
    if (problems.empty()) throw InvalidConfigError("benchmark suite: no problems selected");
    if (seeds.empty()) throw InvalidConfigError("benchmark suite: no seeds given");
    SuiteReport report;
    report.rows.resize(problems.size() * seeds.size());

    // Runs are independent (each has its own derived seed), so they can
    // execute on parallel workers; each row lands in its own slot.
    SolverConfig run_base = cfg;
    run_base.workers = 1;
    parallel_for(report.rows.size(), cfg.workers, [&](std::size_t run) {
        const std::size_t pi = run / seeds.size();
        const std::size_t si = run % seeds.size();
        const BenchmarkProblem& problem = problems[pi];
        SolverConfig run_cfg = run_base;
        run_cfg.seed = mix_seed(seeds[si], pi);
        try {
            const RunResult r = jaya(problem.f, problem.default_bounds, {}, run_cfg);
            report.rows[run] = {problem.name, static_cast<int>(problem.default_bounds.n_var()),
                                run_cfg.pop_size, run_cfg.max_iter, *run_cfg.seed,
                                r.best_value, r.evaluations, r.stopped_early};
        } catch (const std::exception& e) {
            throw Error(problem.name + ": " + e.what());
        }
    });

    for (std::size_t pi = 0; pi < problems.size(); ++pi) {
        std::vector<double> sorted;
        long total_evals = 0;
        for (std::size_t si = 0; si < seeds.size(); ++si) {
            const SuiteRow& row = report.rows[pi * seeds.size() + si];
            sorted.push_back(row.achieved);
            total_evals += row.evaluations;
        }
        std::sort(sorted.begin(), sorted.end());
        const std::size_t m = sorted.size();
        const double median = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
        report.summaries.push_back(
            {problems[pi].name, sorted.front(), median, sorted.back(), total_evals});
    }
    return report;
}

} // namespace jaya::bench
