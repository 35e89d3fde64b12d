#include <doctest.h>

#include "jaya/bounds.hpp"
#include "jaya/population.hpp"
#include "jaya/rng.hpp"
#include "jaya/update.hpp"
#include "support.hpp"

using namespace jaya;

TEST_SUITE_BEGIN("core");

// First draws of the documented generator (SplitMix64, top 53 bits), frozen
// from an independent reference implementation.
TEST_CASE("rng golden sequence for seed 42") {
    RngStream rng(42);
    CHECK(rng.uniform() == 0.7415648787718233);
    CHECK(rng.uniform() == 0.1599103928769201);
    CHECK(rng.uniform() == 0.27860113025513866);
    CHECK(rng.uniform() == 0.34419071652363753);
}

TEST_CASE("rng determinism and range") {
    RngStream a(123456789), b(123456789);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    RngStream c(1), d(2);
    CHECK(c.next_u64() != d.next_u64());
}

TEST_CASE("uniform_index stays in range") {
    RngStream rng(7);
    for (int i = 0; i < 200; ++i) CHECK(rng.uniform_index(13) < 13);
}

TEST_CASE("bounds validation") {
    CHECK_NOTHROW(validate(make_box(-5, 5, 3)));
    CHECK_NOTHROW(validate(make_box(0, 0, 1))); // pinned variable
    Bounds mismatched{Vector::Zero(2), Vector::Zero(3)};
    CHECK_THROWS_AS(validate(mismatched), InvalidBoundsError);
    Bounds empty{Vector(0), Vector(0)};
    CHECK_THROWS_AS(validate(empty), InvalidBoundsError);
    Bounds inverted{Vector::Ones(2), Vector::Zero(2)};
    CHECK_THROWS_AS(validate(inverted), InvalidBoundsError);
    Bounds infinite = make_box(-5, 5, 2);
    infinite.upper[1] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate(infinite), InvalidBoundsError);
}

TEST_CASE("clamp projects onto the box") {
    Vector x(1);
    x << 7.0;
    CHECK(clamp(x, make_box(-5, 5, 1))[0] == 5.0);

    Vector y(2);
    y << -9.0, 0.0;
    const Vector yc = clamp(y, make_box(-5, 5, 2));
    CHECK(yc[0] == -5.0);
    CHECK(yc[1] == 0.0);

    Vector z(3);
    z << 1.0, 2.0, 3.0;
    CHECK(clamp(z, make_box(-5, 5, 3)) == z);
}

TEST_CASE("initialize_population degenerate box") {
    RngStream rng(9);
    const Population pop = initialize_population(make_box(0, 0, 2), 2, rng);
    REQUIRE(pop.members.size() == 2);
    for (const Candidate& c : pop.members) {
        CHECK(c.x == Vector::Zero(2));
        CHECK_FALSE(c.evaluated());
    }
    CHECK(pop.generation == 0);
}

TEST_CASE("initialize_population stays inside the box") {
    RngStream rng(11);
    const Bounds b = make_box(-5, 5, 3);
    const Population pop = initialize_population(b, 20, rng);
    REQUIRE(pop.members.size() == 20);
    for (const Candidate& c : pop.members) CHECK(b.contains(c.x));
}

// Golden fill values frozen from the reference generator: member-major,
// variable-minor, x = lower + u * (upper - lower).
TEST_CASE("initialize_population golden values, one variable") {
    RngStream rng(42);
    const Population pop = initialize_population(make_box(-1, 1, 1), 3, rng);
    CHECK(pop.members[0].x[0] == 0.4831297575436466);
    CHECK(pop.members[1].x[0] == -0.6801792142461598);
    CHECK(pop.members[2].x[0] == -0.4427977394897227);
}

TEST_CASE("initialize_population draw order is member-major") {
    RngStream rng(42);
    const Population pop = initialize_population(make_box(-1, 1, 2), 2, rng);
    CHECK(pop.members[0].x[0] == 0.4831297575436466);
    CHECK(pop.members[0].x[1] == -0.6801792142461598);
    CHECK(pop.members[1].x[0] == -0.4427977394897227);
    CHECK(pop.members[1].x[1] == -0.31161856695272494);
}

TEST_CASE("initialize_population rejects bad input") {
    RngStream rng(1);
    CHECK_THROWS_AS(initialize_population(make_box(0, 1, 2), 1, rng), InvalidConfigError);
    Bounds bad{Vector::Ones(2), Vector::Zero(2)};
    CHECK_THROWS_AS(initialize_population(bad, 4, rng), InvalidBoundsError);
}

namespace {

Population evaluated_population(const std::vector<double>& penalized) {
    Population pop{make_box(-1, 1, 1), {}, 0};
    for (double p : penalized) {
        Candidate c;
        c.x = Vector::Zero(1);
        c.raw_objectives = Vector::Constant(1, p);
        c.penalized = p;
        pop.members.push_back(c);
    }
    return pop;
}

} // namespace

TEST_CASE("select_best_worst") {
    const Population pop = evaluated_population({3.0, 1.0, 2.0});
    CHECK(select_best_worst(pop, Sense::minimize) == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(select_best_worst(pop, Sense::maximize) == std::pair<std::size_t, std::size_t>{0, 1});

    const Population tied = evaluated_population({2.0, 2.0, 5.0});
    CHECK(select_best_worst(tied, Sense::minimize) == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("select_best_worst requires evaluated members") {
    Population pop = evaluated_population({1.0, 2.0});
    pop.members[1].raw_objectives.resize(0);
    CHECK_THROWS_AS(select_best_worst(pop, Sense::minimize), EvaluationOrderError);
}

TEST_CASE("jaya_update with zero randomness is the identity") {
    test::SeqRng zero{{0.0}};
    Vector x(3), best(3), worst(3);
    x << 1.0, -2.0, 3.0;
    best << 0.0, 0.0, 0.0;
    worst << 4.0, 4.0, 4.0;
    CHECK(jaya_update(x, best, worst, make_box(-5, 5, 3), zero) == x);
}

TEST_CASE("jaya_update at the origin stays at the origin") {
    RngStream rng(5);
    const Vector zero2 = Vector::Zero(2);
    CHECK(jaya_update(zero2, zero2, zero2, make_box(-5, 5, 2), rng) == zero2);
}

// Hand evaluation: 1 + 0.5*(2 - 1) - 0.25*(-3 - 1) = 2.5
TEST_CASE("jaya_update pinned-randomness value") {
    test::SeqRng rng{{0.5, 0.25}};
    Vector x(1), best(1), worst(1);
    x << 1.0;
    best << 2.0;
    worst << -3.0;
    CHECK(jaya_update(x, best, worst, make_box(-5, 5, 1), rng)[0] == 2.5);
}

TEST_CASE("jaya_update clamps into the box") {
    test::SeqRng rng{{0.0, 1.0}}; // full step away from the worst
    Vector x(1), best(1), worst(1);
    x << 4.0;
    best << 4.0;
    worst << -5.0;
    // 4 + 0 - 1*(-5 - 4) = 13 -> clamped to 5
    CHECK(jaya_update(x, best, worst, make_box(-5, 5, 1), rng)[0] == 5.0);
}

TEST_CASE("jaya_update dimension mismatch") {
    RngStream rng(1);
    CHECK_THROWS_AS(jaya_update(Vector::Zero(2), Vector::Zero(3), Vector::Zero(3),
                                make_box(-1, 1, 3), rng),
                    DimensionError);
}

TEST_CASE("jaya_update draws one pair per coordinate in index order") {
    test::SeqRng rng{{0.5, 0.0, 0.0, 0.5}};
    Vector x(2), best(2), worst(2);
    x << 0.0, 0.0;
    best << 1.0, 1.0;
    worst << -1.0, -1.0;
    const Vector out = jaya_update(x, best, worst, make_box(-5, 5, 2), rng);
    CHECK(out[0] == 0.5);  // r1 = 0.5, r2 = 0
    CHECK(out[1] == 0.5);  // r1 = 0, r2 = 0.5 pushes away from -1
}

TEST_SUITE_END();
