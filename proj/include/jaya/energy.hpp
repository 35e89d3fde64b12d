#pragma once

#include "jaya/bounds.hpp"
#include "jaya/config.hpp"
#include "jaya/multi_objective.hpp"
#include "jaya/types.hpp"

namespace jaya::energy {

/// Percentage contribution of each renewable source. These four shares are
/// the decision variables of the bundled case study.
struct EnergyMix {
    double wind;
    double solar;
    double hydro;
    double storage;

    static EnergyMix from_vector(const Vector& x) { return {x[0], x[1], x[2], x[3]}; }
    Vector to_vector() const {
        Vector v(4);
        v << wind, solar, hydro, storage;
        return v;
    }
};

/// Linear model coefficients for the three objectives. The shipped defaults
/// are illustrative, not an energy-science claim: wind and solar carry the
/// lowest emission intensities, hydro and storage carry the highest
/// reliability weights, hydro is the most expensive source, and intermittent
/// sources (wind + solar) pay a reliability penalty. All of them can be
/// overridden from the run config file.
struct EnergyModelFactors {
    Eigen::Vector4d emission_factors;    // emissions per share point
    Eigen::Vector4d cost_factors;        // capital + operational per share point
    Eigen::Vector4d reliability_weights; // stability contribution per share point
    double intermittency_penalty;        // applied to (wind + solar)

    static EnergyModelFactors defaults() {
        EnergyModelFactors f;
        f.emission_factors << 0.11, 0.17, 0.24, 0.48;
        f.cost_factors << 3.0, 2.5, 5.0, 4.0;
        f.reliability_weights << 0.20, 0.25, 0.90, 0.85;
        f.intermittency_penalty = 0.35;
        return f;
    }
};

/// Total emissions: dot(shares, emission_factors). Minimized.
double emissions_model(const EnergyMix& mix, const EnergyModelFactors& factors);

/// Total cost: dot(shares, cost_factors). Minimized.
double cost_model(const EnergyMix& mix, const EnergyModelFactors& factors);

/// Composite reliability index: dot(shares, reliability_weights) minus
/// intermittency_penalty * (wind + solar). Higher is better; the solver
/// maximizes it by minimizing its negation.
double reliability_model(const EnergyMix& mix, const EnergyModelFactors& factors);

/// [10, 40] percent per source.
Bounds energy_bounds();

struct EnergyCaseConfig {
    SolverConfig solver;            // defaults mirror the bundled scenario
    EnergyModelFactors factors = EnergyModelFactors::defaults();
    double min_total_share = 70.0;  // total renewable contribution must exceed this

    static EnergyCaseConfig defaults();
};

/// Runs jaya_multi on [emissions, cost, -reliability] over the share box with
/// the total-contribution constraint. Front objectives are stored in that
/// internal order; reporting flips the reliability sign back.
MultiRunResult run_energy_case(const EnergyCaseConfig& cfg = EnergyCaseConfig::defaults());

} // namespace jaya::energy
