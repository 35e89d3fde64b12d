#include <doctest.h>

#include "jaya/energy.hpp"

using namespace jaya;
using namespace jaya::energy;

TEST_SUITE_BEGIN("energy");

namespace {

EnergyModelFactors zero_factors() {
    EnergyModelFactors f;
    f.emission_factors.setZero();
    f.cost_factors.setZero();
    f.reliability_weights.setZero();
    f.intermittency_penalty = 0.0;
    return f;
}

} // namespace

TEST_CASE("emissions model") {
    const EnergyMix any{17, 23, 31, 12};
    CHECK(emissions_model(any, zero_factors()) == 0.0);

    EnergyModelFactors f = zero_factors();
    f.emission_factors << 1, 2, 3, 4;
    const EnergyMix even{25, 25, 25, 25};
    CHECK(emissions_model(even, f) == 250.0);

    EnergyModelFactors doubled = f;
    doubled.emission_factors *= 2.0;
    CHECK(emissions_model(even, doubled) == 2.0 * emissions_model(even, f));
}

TEST_CASE("cost model") {
    const EnergyMix any{11, 19, 29, 37};
    CHECK(cost_model(any, zero_factors()) == 0.0);

    EnergyModelFactors f = zero_factors();
    f.cost_factors << 4, 3, 2, 1;
    // 10*4 + 10*3 + 10*2 + 40*1
    CHECK(cost_model(EnergyMix{10, 10, 10, 40}, f) == 130.0);

    EnergyModelFactors doubled = f;
    doubled.cost_factors *= 2.0;
    CHECK(cost_model(any, doubled) == 2.0 * cost_model(any, f));
}

TEST_CASE("reliability model") {
    CHECK(reliability_model(EnergyMix{10, 20, 30, 40}, zero_factors()) == 0.0);

    const EnergyModelFactors f = EnergyModelFactors::defaults();
    const double lower_hydro = reliability_model(EnergyMix{20, 20, 25, 20}, f);
    const double higher_hydro = reliability_model(EnergyMix{20, 20, 35, 20}, f);
    CHECK(higher_hydro > lower_hydro);

    // hydro/storage-heavy beats wind/solar-heavy under the shipped defaults
    CHECK(reliability_model(EnergyMix{10, 10, 40, 40}, f) >
          reliability_model(EnergyMix{40, 40, 10, 10}, f));
}

TEST_CASE("mix round-trips through vectors") {
    const EnergyMix m{12, 34, 21, 18};
    const EnergyMix back = EnergyMix::from_vector(m.to_vector());
    CHECK(back.wind == m.wind);
    CHECK(back.solar == m.solar);
    CHECK(back.hydro == m.hydro);
    CHECK(back.storage == m.storage);
    CHECK(energy_bounds().contains(m.to_vector()));
}

TEST_CASE("short default-shaped run yields only feasible front entries") {
    EnergyCaseConfig cfg = EnergyCaseConfig::defaults();
    cfg.solver.pop_size = 30;
    cfg.solver.max_iter = 25;
    cfg.solver.min_pop = 15;
    cfg.solver.max_pop = 60;
    const MultiRunResult r = run_energy_case(cfg);
    CHECK(r.feasible_found);
    REQUIRE(!r.front.empty());
    for (const FrontEntry& e : r.front) {
        CHECK(e.x.minCoeff() >= 10.0);
        CHECK(e.x.maxCoeff() <= 40.0);
        CHECK(e.x.sum() >= 70.0);
    }
}

TEST_CASE("front entries re-evaluate to their stored objective values") {
    EnergyCaseConfig cfg = EnergyCaseConfig::defaults();
    cfg.solver.pop_size = 20;
    cfg.solver.max_iter = 15;
    cfg.solver.min_pop = 10;
    cfg.solver.max_pop = 40;
    const MultiRunResult r = run_energy_case(cfg);
    for (const FrontEntry& e : r.front) {
        const EnergyMix mix = EnergyMix::from_vector(e.x);
        CHECK(e.objectives[0] == emissions_model(mix, cfg.factors));
        CHECK(e.objectives[1] == cost_model(mix, cfg.factors));
        CHECK(e.objectives[2] == -reliability_model(mix, cfg.factors));
    }
}

TEST_CASE("impossible total-share constraint collapses to the all-40 corner") {
    EnergyCaseConfig cfg = EnergyCaseConfig::defaults();
    cfg.min_total_share = 160.0; // only (40,40,40,40) satisfies it
    const MultiRunResult r = run_energy_case(cfg);
    if (r.feasible_found) {
        REQUIRE(!r.front.empty());
        for (const FrontEntry& e : r.front) CHECK(e.x == Vector::Constant(4, 40.0));
    } else {
        for (const FrontEntry& e : r.front) CHECK(e.x.sum() < 160.0);
    }
}

TEST_SUITE_END();
