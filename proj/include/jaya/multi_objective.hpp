#pragma once

#include <optional>
#include <vector>

#include "jaya/bounds.hpp"
#include "jaya/config.hpp"
#include "jaya/constraints.hpp"
#include "jaya/pareto.hpp"
#include "jaya/single_objective.hpp"
#include "jaya/types.hpp"

namespace jaya {

struct MultiIterationRecord {
    int iteration;
    int front_size;
    Vector ideal_point; // per-objective minima over feasible evaluations so far
};

struct MultiRunResult {
    std::vector<FrontEntry> front;
    std::vector<FrontEntry> final_population;
    int iterations_run = 0;
    std::vector<MultiIterationRecord> history;
    bool stopped_early = false;
    long evaluations = 0;     // candidate evaluations (all objectives count as one)
    bool feasible_found = false;
};

/// Multi-objective Jaya with Pareto-front tracking. Every objective is
/// minimized; maximize a quantity by passing its negation.
///
/// Same generational skeleton as the scalar solver, with: best drawn
/// uniformly from the population's non-dominated (rank-0) members and worst
/// drawn uniformly from the members dominated by the most others (best is
/// drawn first, both from the serial stream); acceptance by dominance with a
/// strict violation tie-break for incomparable pairs; and an external archive
/// of every evaluated feasible point, kept non-dominated. Dominance inside
/// the population uses penalized vectors (violation added to every
/// objective). Early stopping fires when every coordinate of the ideal point
/// improved by less than the tolerance over `patience` iterations.
MultiRunResult jaya_multi(const std::vector<Objective>& objectives, const Bounds& bounds,
                          const ConstraintSet& constraints, const SolverConfig& cfg,
                          std::optional<std::size_t> front_capacity = std::nullopt);

} // namespace jaya
