#include <doctest.h>

#include <cmath>
#include <mutex>

#include "jaya/benchmarks.hpp"
#include "jaya/multi_objective.hpp"
#include "support.hpp"

using namespace jaya;

TEST_SUITE_BEGIN("multi_objective");

namespace {

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

SolverConfig multi_config(int pop, int iters, std::uint64_t seed) {
    SolverConfig cfg;
    cfg.pop_size = pop;
    cfg.max_iter = iters;
    cfg.seed = seed;
    cfg.workers = 1;
    return cfg;
}

} // namespace

TEST_CASE("dominates") {
    CHECK(dominates(vec2(1, 1), vec2(2, 2)));
    CHECK_FALSE(dominates(vec2(1, 3), vec2(3, 1)));
    CHECK_FALSE(dominates(vec2(3, 1), vec2(1, 3)));
    CHECK_FALSE(dominates(vec2(1, 2), vec2(1, 2)));
    CHECK(dominates(vec2(1, 2), vec2(1, 3))); // equal allowed if strict somewhere
    CHECK_THROWS_AS(dominates(Vector::Zero(2), Vector::Zero(3)), DimensionError);
}

TEST_CASE("dominates is irreflexive and antisymmetric") {
    RngStream rng(15);
    for (int i = 0; i < 200; ++i) {
        Vector a(3), b(3);
        for (Index k = 0; k < 3; ++k) {
            a[k] = rng.uniform();
            b[k] = rng.uniform();
        }
        CHECK_FALSE(dominates(a, a));
        if (dominates(a, b)) CHECK_FALSE(dominates(b, a));
    }
}

TEST_CASE("pareto_filter examples") {
    CHECK(pareto_filter({vec2(1, 1)}) == std::vector<std::size_t>{0});
    CHECK(pareto_filter({vec2(1, 3), vec2(3, 1), vec2(2, 2), vec2(4, 4)}) ==
          std::vector<std::size_t>{0, 1, 2});
    CHECK(pareto_filter({vec2(0, 0), vec2(0, 0)}) == std::vector<std::size_t>{0, 1});
    CHECK(pareto_filter({}).empty());
}

TEST_CASE("pareto_filter matches the all-pairs oracle") {
    RngStream rng(123);
    for (int inst = 0; inst < 200; ++inst) {
        const std::size_t n = 1 + rng.uniform_index(100);
        const Index k = 2 + static_cast<Index>(rng.uniform_index(3));
        std::vector<Vector> pts;
        pts.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Vector v(k);
            for (Index d = 0; d < k; ++d) v[d] = std::floor(rng.uniform() * 8.0);
            pts.push_back(v);
        }
        CHECK(pareto_filter(pts) == test::brute_force_front(pts));
    }
}

TEST_CASE("pareto_filter output is mutually non-dominated") {
    RngStream rng(9);
    std::vector<Vector> pts;
    for (int i = 0; i < 60; ++i) pts.push_back(vec2(rng.uniform(), rng.uniform()));
    const auto front = pareto_filter(pts);
    for (std::size_t a : front)
        for (std::size_t b : front)
            if (a != b) CHECK_FALSE(dominates(pts[a], pts[b]));
}

TEST_CASE("archive purges infeasible entries at the first feasible point") {
    ParetoArchive archive(1e6);
    archive.insert(vec2(0, 0), vec2(1, 9), 1.0); // penalized keys are incomparable
    archive.insert(vec2(1, 0), vec2(9, 1), 1.0);
    CHECK_FALSE(archive.has_feasible());
    CHECK(archive.size() == 2);
    archive.insert(vec2(2, 0), vec2(50, 50), 0.0);
    CHECK(archive.has_feasible());
    CHECK(archive.size() == 1); // infeasible entries gone despite better objectives
    archive.insert(vec2(3, 0), vec2(1, 1), 1.0);
    CHECK(archive.size() == 1); // infeasible no longer admitted, even when dominating
}

TEST_CASE("archive skips re-evaluated duplicates but keeps distinct ties") {
    ParetoArchive archive(1e6);
    archive.insert(vec2(1, 1), vec2(3, 3), 0.0);
    archive.insert(vec2(1, 1), vec2(3, 3), 0.0); // same x
    CHECK(archive.size() == 1);
    archive.insert(vec2(2, 2), vec2(3, 3), 0.0); // different x, equal objectives
    CHECK(archive.size() == 2);
}

TEST_CASE("archive capacity evicts the most crowded entry") {
    ParetoArchive archive(1e6, 3);
    archive.insert(vec2(0, 0), vec2(0.0, 10.0), 0.0);
    archive.insert(vec2(1, 0), vec2(10.0, 0.0), 0.0);
    archive.insert(vec2(2, 0), vec2(5.0, 5.0), 0.0);
    archive.insert(vec2(3, 0), vec2(5.2, 4.8), 0.0); // crowds the middle
    CHECK(archive.size() == 3);
    bool has_low = false, has_high = false;
    for (const FrontEntry& e : archive.entries()) {
        if (e.objectives == vec2(0.0, 10.0)) has_low = true;
        if (e.objectives == vec2(10.0, 0.0)) has_high = true;
    }
    CHECK(has_low);
    CHECK(has_high);
}

TEST_CASE("archive ideal point tracks per-objective minima") {
    ParetoArchive archive(1e6);
    archive.insert(vec2(0, 0), vec2(1, 5), 0.0);
    archive.insert(vec2(1, 0), vec2(4, 2), 0.0);
    CHECK(archive.ideal_point() == vec2(1, 2));
}

TEST_CASE("jaya_multi rejects single-objective input") {
    CHECK_THROWS_AS(jaya_multi({[](const Vector& x) { return x.squaredNorm(); }},
                               make_box(-1, 1, 2), {}, multi_config(10, 5, 1)),
                    WrongSolverError);
}

TEST_CASE("duplicated objective collapses the front to the best point") {
    const Objective f = [](const Vector& x) { return x.squaredNorm(); };
    const MultiRunResult r =
        jaya_multi({f, f}, make_box(-5, 5, 2), {}, multi_config(20, 60, 3));
    REQUIRE(!r.front.empty());
    double lo = 1e300, hi = -1e300;
    for (const FrontEntry& e : r.front) {
        lo = std::min(lo, e.objectives[0]);
        hi = std::max(hi, e.objectives[0]);
    }
    CHECK(hi - lo <= 1e-6);
}

TEST_CASE("independent axis objectives drive the ideal point to zero") {
    const bench::MultiBenchmark p = bench::make_multi_benchmark("axes", 2);
    const MultiRunResult r =
        jaya_multi(p.objectives, p.default_bounds, {}, multi_config(20, 100, 11));
    const Vector ideal = r.history.back().ideal_point;
    CHECK(ideal[0] <= 0.01);
    CHECK(ideal[1] <= 0.01);
}

TEST_CASE("ideal point is non-increasing per coordinate") {
    const bench::MultiBenchmark p = bench::make_multi_benchmark("two-sphere", 3);
    const MultiRunResult r =
        jaya_multi(p.objectives, p.default_bounds, {}, multi_config(20, 50, 19));
    for (std::size_t i = 1; i < r.history.size(); ++i)
        for (Index k = 0; k < 2; ++k)
            CHECK(r.history[i].ideal_point[k] <= r.history[i - 1].ideal_point[k]);
}

TEST_CASE("archive soundness against every evaluated point") {
    std::vector<Vector> evaluated;
    std::mutex guard;
    const Objective f1 = [&](const Vector& x) {
        std::scoped_lock lock(guard);
        evaluated.push_back(x);
        return x.squaredNorm();
    };
    const Objective f2 = [](const Vector& x) { return (x.array() - 2.0).matrix().squaredNorm(); };
    const MultiRunResult r = jaya_multi({f1, f2}, make_box(-5, 5, 2), {}, multi_config(10, 20, 7));

    const Objective g2 = f2;
    for (const FrontEntry& e : r.front)
        for (const Vector& x : evaluated) {
            Vector obj = vec2(x.squaredNorm(), g2(x));
            CHECK_FALSE(dominates(obj, e.objectives));
        }
}

TEST_CASE("front entries reproduce their stored objectives bit-exactly") {
    const bench::MultiBenchmark p = bench::make_multi_benchmark("two-sphere", 3);
    const MultiRunResult r =
        jaya_multi(p.objectives, p.default_bounds, {}, multi_config(15, 40, 23));
    for (const FrontEntry& e : r.front) {
        CHECK(e.objectives[0] == p.objectives[0](e.x));
        CHECK(e.objectives[1] == p.objectives[1](e.x));
    }
}

TEST_CASE("front is mutually non-dominated and history front sizes are recorded") {
    const bench::MultiBenchmark p = bench::make_multi_benchmark("two-sphere", 2);
    const MultiRunResult r =
        jaya_multi(p.objectives, p.default_bounds, {}, multi_config(12, 30, 29));
    for (const FrontEntry& a : r.front)
        for (const FrontEntry& b : r.front)
            if (&a != &b) CHECK_FALSE(dominates(a.objectives, b.objectives));
    CHECK(static_cast<int>(r.history.size()) == r.iterations_run);
    CHECK(r.history.back().front_size == static_cast<int>(r.front.size()));
}

TEST_CASE("results are identical across worker counts") {
    const bench::MultiBenchmark p = bench::make_multi_benchmark("two-sphere", 3);
    SolverConfig one = multi_config(12, 25, 31);
    SolverConfig many = one;
    many.workers = 3;
    const MultiRunResult r1 = jaya_multi(p.objectives, p.default_bounds, {}, one);
    const MultiRunResult r3 = jaya_multi(p.objectives, p.default_bounds, {}, many);
    REQUIRE(r1.front.size() == r3.front.size());
    for (std::size_t i = 0; i < r1.front.size(); ++i) {
        CHECK(r1.front[i].x == r3.front[i].x);
        CHECK(r1.front[i].objectives == r3.front[i].objectives);
    }
}

TEST_CASE("constrained multi run keeps only feasible front entries") {
    // feasible iff x0 >= 1
    ConstraintSet cs;
    cs.constraints.push_back([](const Vector& x) { return 1.0 - x[0]; });
    const Objective f1 = [](const Vector& x) { return x.squaredNorm(); };
    const Objective f2 = [](const Vector& x) { return (x.array() - 3.0).matrix().squaredNorm(); };
    const MultiRunResult r = jaya_multi({f1, f2}, make_box(0, 5, 2), cs, multi_config(15, 40, 37));
    CHECK(r.feasible_found);
    for (const FrontEntry& e : r.front) CHECK(e.x[0] >= 1.0);
}

TEST_CASE("multi-objective early stopping fires on a flat problem") {
    SolverConfig cfg = multi_config(10, 50, 41);
    cfg.early_stop = EarlyStop{1e-3, 5};
    const MultiRunResult r = jaya_multi({[](const Vector&) { return 1.0; },
                                         [](const Vector&) { return 2.0; }},
                                        make_box(-1, 1, 2), {}, cfg);
    CHECK(r.stopped_early);
    CHECK(r.iterations_run == 6);
}

TEST_SUITE_END();
