#include "jaya/energy.hpp"

namespace jaya::energy {

double emissions_model(const EnergyMix& mix, const EnergyModelFactors& factors) {
    return mix.to_vector().dot(factors.emission_factors);
}

double cost_model(const EnergyMix& mix, const EnergyModelFactors& factors) {
    return mix.to_vector().dot(factors.cost_factors);
}

double reliability_model(const EnergyMix& mix, const EnergyModelFactors& factors) {
    return mix.to_vector().dot(factors.reliability_weights) -
           factors.intermittency_penalty * (mix.wind + mix.solar);
}

Bounds energy_bounds() { return make_box(10.0, 40.0, 4); }

EnergyCaseConfig EnergyCaseConfig::defaults() {
    EnergyCaseConfig cfg;
    cfg.solver.pop_size = 100;
    cfg.solver.max_iter = 100;
    cfg.solver.adaptive_pop = true;
    cfg.solver.min_pop = 50;
    cfg.solver.max_pop = 200;
    cfg.solver.early_stop = EarlyStop{1e-3, 30};
    cfg.solver.seed = 1;
    return cfg;
}

MultiRunResult run_energy_case(const EnergyCaseConfig& cfg) {
    const EnergyModelFactors factors = cfg.factors;
    const std::vector<Objective> objectives = {
        [factors](const Vector& x) { return emissions_model(EnergyMix::from_vector(x), factors); },
        [factors](const Vector& x) { return cost_model(EnergyMix::from_vector(x), factors); },
        [factors](const Vector& x) {
            return -reliability_model(EnergyMix::from_vector(x), factors);
        },
    };
    ConstraintSet constraints;
    const double min_total = cfg.min_total_share;
    constraints.constraints.push_back(
        [min_total](const Vector& x) { return min_total - x.sum(); });
    return jaya_multi(objectives, energy_bounds(), constraints, cfg.solver);
}

} // namespace jaya::energy
