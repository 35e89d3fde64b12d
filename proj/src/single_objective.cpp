#include "jaya/single_objective.hpp"

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

std::string format_point(const Vector& x) {
    std::ostringstream os;
    os << "[";
    for (Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << "]";
    return os.str();
}

struct Evaluation {
    double raw = 0.0;  // user scale
    double viol = 0.0; // violation measure
};

/// Evaluates objective + constraints for each point on up to `workers`
/// threads, then verifies finiteness serially in index order so the reported
/// error does not depend on thread scheduling.
std::vector<Evaluation> evaluate_points(const std::vector<const Vector*>& points,
                                        const Objective& objective, const ConstraintSet& cs,
                                        int workers) {
    std::vector<Evaluation> out(points.size());
    parallel_for(points.size(), workers, [&](std::size_t i) {
        out[i].raw = objective(*points[i]);
        out[i].viol = violation(*points[i], cs);
    });
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!std::isfinite(out[i].raw))
            throw NonFiniteObjectiveError(
                "objective returned a non-finite value at x = " + format_point(*points[i]),
                *points[i]);
    return out;
}

/// Aggregate improvement over the adaptation window. Stalled means the best
/// penalized value moved by less than the early-stop tolerance over the last
/// ceil(patience / 2) iterations; without early stopping the window is 5
/// iterations and any strict improvement counts as progress.
bool recently_improved(const std::vector<double>& best_history, const SolverConfig& cfg) {
    const int window = cfg.early_stop ? (cfg.early_stop->patience + 1) / 2 : 5;
    if (static_cast<int>(best_history.size()) <= window) return true;
    const std::size_t t = best_history.size() - 1;
    const double gain = best_history[t - static_cast<std::size_t>(window)] - best_history[t];
    return cfg.early_stop ? gain >= cfg.early_stop->tolerance : gain > 0.0;
}

} // namespace

bool early_stop_check(const std::vector<double>& best_history, double tolerance, int patience) {
    if (static_cast<int>(best_history.size()) < patience + 1) return false;
    const std::size_t t = best_history.size() - 1;
    return best_history[t - static_cast<std::size_t>(patience)] - best_history[t] < tolerance;
}

Population adapt_population(Population pop, bool improved_recently, const SolverConfig& cfg,
                            RngStream& rng) {
    const int size = static_cast<int>(pop.members.size());
    const int step = (size + 9) / 10; // ceil(10 %)
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
    for (std::size_t i = 0; i < pop.members.size(); ++i)
        if (!pop.members[i].evaluated())
            throw EvaluationOrderError("adapt_population: member " + std::to_string(i) +
                                       " has not been evaluated");
    std::vector<std::size_t> order(pop.members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pop.members[a].penalized != pop.members[b].penalized)
            return pop.members[a].penalized > pop.members[b].penalized;
        return a > b; // drop the later duplicate, keep the earlier (incl. the best)
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

RunResult jaya(const Objective& objective, const Bounds& bounds, const ConstraintSet& constraints,
               const SolverConfig& cfg) {
    validate(bounds);
    validate(cfg);
    const double flip = sense_sign(cfg.sense);
    RngStream rng(resolve_seed(cfg));

    Population pop = initialize_population(bounds, cfg.pop_size, rng);
    long evaluations = 0;

    // Writes raw/violation results into the listed members.
    auto evaluate_members = [&](const std::vector<std::size_t>& idx) {
        std::vector<const Vector*> pts;
        pts.reserve(idx.size());
        for (std::size_t i : idx) pts.push_back(&pop.members[i].x);
        const auto evals = evaluate_points(pts, objective, constraints, cfg.workers);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            Candidate& c = pop.members[idx[j]];
            c.raw_objectives = Vector::Constant(1, evals[j].raw);
            c.penalized =
                penalized_value(flip * evals[j].raw, evals[j].viol, constraints.penalty_weight);
        }
        evaluations += static_cast<long>(idx.size());
    };

    RunResult result;
    std::vector<double> best_history;
    Candidate best_ever;
    double best_ever_pen = std::numeric_limits<double>::infinity();

    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        std::vector<std::size_t> fresh;
        for (std::size_t i = 0; i < pop.members.size(); ++i)
            if (!pop.members[i].evaluated()) fresh.push_back(i);
        if (!fresh.empty()) evaluate_members(fresh);

        const std::size_t size = pop.members.size();
        // Sequential sweep: best/worst are looked up again for every member,
        // so an accepted improvement steers the rest of the iteration.
        for (std::size_t i = 0; i < size; ++i) {
            const auto [best_idx, worst_idx] = select_best_worst(pop, Sense::minimize);
            Vector proposal = jaya_update(pop.members[i].x, pop.members[best_idx].x,
                                          pop.members[worst_idx].x, bounds, rng);
            const double raw = objective(proposal);
            ++evaluations;
            if (!std::isfinite(raw))
                throw NonFiniteObjectiveError(
                    "objective returned a non-finite value at x = " + format_point(proposal),
                    proposal);
            const double pen = penalized_value(flip * raw, violation(proposal, constraints),
                                               constraints.penalty_weight);
            Candidate& c = pop.members[i];
            if (pen < c.penalized) {
                c.x = std::move(proposal);
                c.raw_objectives = Vector::Constant(1, raw);
                c.penalized = pen;
            }
        }
        pop.generation = iter;

        std::size_t cur_best = 0;
        for (std::size_t i = 1; i < size; ++i)
            if (pop.members[i].penalized < pop.members[cur_best].penalized) cur_best = i;
        const double cur_best_pen = pop.members[cur_best].penalized;
        if (cur_best_pen < best_ever_pen) {
            best_ever = pop.members[cur_best];
            best_ever_pen = cur_best_pen;
        }
        best_history.push_back(cur_best_pen);
        result.history.push_back({iter, cur_best_pen, static_cast<int>(size)});
        result.iterations_run = iter;

        if (cfg.early_stop &&
            early_stop_check(best_history, cfg.early_stop->tolerance, cfg.early_stop->patience)) {
            result.stopped_early = true;
            break;
        }
        if (cfg.adaptive_pop && iter < cfg.max_iter)
            pop = adapt_population(std::move(pop), recently_improved(best_history, cfg), cfg, rng);
    }

    result.best_x = best_ever.x;
    result.best_value = best_ever.raw_objectives[0];
    result.evaluations = evaluations;
    return result;
}

} // namespace jaya
