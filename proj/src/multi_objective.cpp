#include "jaya/multi_objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "jaya/parallel.hpp"
#include "jaya/update.hpp"

namespace jaya {

namespace {

struct MultiEvaluation {
    Vector raw;
    double viol = 0.0;
};

std::string format_point(const Vector& x) {
    std::ostringstream os;
    os << "[";
    for (Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << "]";
    return os.str();
}

std::vector<MultiEvaluation> evaluate_points(const std::vector<const Vector*>& points,
                                             const std::vector<Objective>& objectives,
                                             const ConstraintSet& cs, int workers) {
    std::vector<MultiEvaluation> out(points.size());
    parallel_for(points.size(), workers, [&](std::size_t i) {
        out[i].raw.resize(static_cast<Index>(objectives.size()));
        for (std::size_t k = 0; k < objectives.size(); ++k)
            out[i].raw[static_cast<Index>(k)] = objectives[k](*points[i]);
        out[i].viol = violation(*points[i], cs);
    });
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!out[i].raw.allFinite())
            throw NonFiniteObjectiveError(
                "objective returned a non-finite value at x = " + format_point(*points[i]),
                *points[i]);
    return out;
}

Vector penalized_vector(const Candidate& c, double weight) {
    return c.raw_objectives.array() + weight * c.penalized; // penalized == violation here
}

std::vector<int> domination_counts(const std::vector<Vector>& keys) {
    std::vector<int> counts(keys.size(), 0);
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = 0; j < keys.size(); ++j)
            if (i != j && dominates(keys[j], keys[i])) ++counts[i];
    return counts;
}

/// Ideal-point progress over the adaptation window; mirrors the scalar
/// solver's rule with the per-coordinate criterion used for early stopping.
bool recently_improved(const std::vector<MultiIterationRecord>& history,
                       const SolverConfig& cfg) {
    const int window = cfg.early_stop ? (cfg.early_stop->patience + 1) / 2 : 5;
    if (static_cast<int>(history.size()) <= window) return true;
    const std::size_t t = history.size() - 1;
    const Vector& then = history[t - static_cast<std::size_t>(window)].ideal_point;
    const Vector& now = history[t].ideal_point;
    for (Index k = 0; k < now.size(); ++k) {
        const double gain = then[k] - now[k];
        if (cfg.early_stop ? gain >= cfg.early_stop->tolerance : gain > 0.0) return true;
    }
    return false;
}

bool ideal_converged(const std::vector<MultiIterationRecord>& history, double tolerance,
                     int patience) {
    if (static_cast<int>(history.size()) < patience + 1) return false;
    const std::size_t t = history.size() - 1;
    const Vector& then = history[t - static_cast<std::size_t>(patience)].ideal_point;
    const Vector& now = history[t].ideal_point;
    for (Index k = 0; k < now.size(); ++k)
        if (!(then[k] - now[k] < tolerance)) return false; // NaN (inf - inf) blocks stopping
    return true;
}

/// Shrinks by dropping the most-dominated members (ties: larger violation,
/// then higher index); grows exactly like the scalar solver.
Population adapt_population_multi(Population pop, bool improved_recently, const SolverConfig& cfg,
                                  RngStream& rng, double weight) {
    const int size = static_cast<int>(pop.members.size());
    const int step = (size + 9) / 10;
    if (!improved_recently) {
        const int target = std::min(resolved_max_pop(cfg), size + step);
        const Index n = pop.bounds.n_var();
        for (int m = size; m < target; ++m) {
            Candidate c;
            c.x.resize(n);
            for (Index i = 0; i < n; ++i)
                c.x[i] = pop.bounds.lower[i] +
                         rng.uniform() * (pop.bounds.upper[i] - pop.bounds.lower[i]);
            pop.members.push_back(std::move(c));
        }
        return pop;
    }
    const int target = std::max(resolved_min_pop(cfg), size - step);
    const int drop = size - target;
    if (drop <= 0) return pop;
    std::vector<Vector> keys;
    keys.reserve(pop.members.size());
    for (const Candidate& c : pop.members) keys.push_back(penalized_vector(c, weight));
    const std::vector<int> counts = domination_counts(keys);
    std::vector<std::size_t> order(pop.members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        if (pop.members[a].penalized != pop.members[b].penalized)
            return pop.members[a].penalized > pop.members[b].penalized;
        return a > b;
    });
    std::vector<bool> dropped(pop.members.size(), false);
    for (int k = 0; k < drop; ++k) dropped[order[static_cast<std::size_t>(k)]] = true;
    std::vector<Candidate> kept;
    kept.reserve(pop.members.size() - static_cast<std::size_t>(drop));
    for (std::size_t i = 0; i < pop.members.size(); ++i)
        if (!dropped[i]) kept.push_back(std::move(pop.members[i]));
    pop.members = std::move(kept);
    return pop;
}

} // namespace

MultiRunResult jaya_multi(const std::vector<Objective>& objectives, const Bounds& bounds,
                          const ConstraintSet& constraints, const SolverConfig& cfg,
                          std::optional<std::size_t> front_capacity) {
    if (objectives.size() < 2)
        throw WrongSolverError("jaya_multi needs at least 2 objectives; use jaya() for "
                               "single-objective problems");
    validate(bounds);
    validate(cfg);
    const auto n_obj = static_cast<Index>(objectives.size());
    const double weight = constraints.penalty_weight;
    RngStream rng(resolve_seed(cfg));

    ParetoArchive archive(weight, front_capacity);
    Vector ideal = Vector::Constant(n_obj, std::numeric_limits<double>::infinity());
    Population pop = initialize_population(bounds, cfg.pop_size, rng);
    long evaluations = 0;

    auto record = [&](const Vector& x, const Vector& raw, double viol) {
        archive.insert(x, raw, viol);
        if (viol == 0.0) ideal = ideal.cwiseMin(raw);
    };

    auto evaluate_members = [&](const std::vector<std::size_t>& idx) {
        std::vector<const Vector*> pts;
        pts.reserve(idx.size());
        for (std::size_t i : idx) pts.push_back(&pop.members[i].x);
        const auto evals = evaluate_points(pts, objectives, constraints, cfg.workers);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            Candidate& c = pop.members[idx[j]];
            c.raw_objectives = evals[j].raw;
            c.penalized = evals[j].viol;
            record(c.x, c.raw_objectives, c.penalized);
        }
        evaluations += static_cast<long>(idx.size());
    };

    MultiRunResult result;

    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        std::vector<std::size_t> fresh;
        for (std::size_t i = 0; i < pop.members.size(); ++i)
            if (!pop.members[i].evaluated()) fresh.push_back(i);
        if (!fresh.empty()) evaluate_members(fresh);

        const std::size_t size = pop.members.size();
        std::vector<Vector> keys;
        keys.reserve(size);
        for (const Candidate& c : pop.members) keys.push_back(penalized_vector(c, weight));
        const std::vector<int> counts = domination_counts(keys);

        std::vector<std::size_t> rank0;
        int max_count = 0;
        for (std::size_t i = 0; i < size; ++i) {
            if (counts[i] == 0) rank0.push_back(i);
            max_count = std::max(max_count, counts[i]);
        }
        std::vector<std::size_t> most_dominated;
        for (std::size_t i = 0; i < size; ++i)
            if (counts[i] == max_count) most_dominated.push_back(i);

        // Best first, then worst, from the serial stream.
        const Vector x_best = pop.members[rank0[rng.uniform_index(rank0.size())]].x;
        const Vector x_worst =
            pop.members[most_dominated[rng.uniform_index(most_dominated.size())]].x;

        std::vector<Vector> proposals(size);
        for (std::size_t i = 0; i < size; ++i)
            proposals[i] = jaya_update(pop.members[i].x, x_best, x_worst, bounds, rng);

        std::vector<const Vector*> pts(size);
        for (std::size_t i = 0; i < size; ++i) pts[i] = &proposals[i];
        const auto evals = evaluate_points(pts, objectives, constraints, cfg.workers);
        evaluations += static_cast<long>(size);
        for (std::size_t i = 0; i < size; ++i) record(proposals[i], evals[i].raw, evals[i].viol);

        for (std::size_t i = 0; i < size; ++i) {
            Candidate& c = pop.members[i];
            const Vector key_new = evals[i].raw.array() + weight * evals[i].viol;
            const bool better = dominates(key_new, keys[i]) ||
                                (!dominates(keys[i], key_new) && evals[i].viol < c.penalized);
            if (better) {
                c.x = std::move(proposals[i]);
                c.raw_objectives = evals[i].raw;
                c.penalized = evals[i].viol;
            }
        }
        pop.generation = iter;

        result.history.push_back({iter, static_cast<int>(archive.size()), ideal});
        result.iterations_run = iter;

        if (cfg.early_stop &&
            ideal_converged(result.history, cfg.early_stop->tolerance, cfg.early_stop->patience)) {
            result.stopped_early = true;
            break;
        }
        if (cfg.adaptive_pop && iter < cfg.max_iter)
            pop = adapt_population_multi(std::move(pop),
                                         recently_improved(result.history, cfg), cfg, rng, weight);
    }

    result.front = archive.entries();
    result.feasible_found = archive.has_feasible();
    result.final_population.reserve(pop.members.size());
    for (const Candidate& c : pop.members)
        result.final_population.push_back({c.x, c.raw_objectives});
    result.evaluations = evaluations;
    return result;
}

} // namespace jaya
