#pragma once

#include <cstddef>
#include <vector>

#include "jaya/pareto.hpp"
#include "jaya/single_objective.hpp"
#include "jaya/types.hpp"

namespace jaya::test {

/// Plays back a fixed sequence of uniforms, repeating the last one.
struct SeqRng {
    std::vector<double> values;
    std::size_t next = 0;

    double uniform() {
        if (values.empty()) return 0.0;
        const double v = values[next];
        if (next + 1 < values.size()) ++next;
        return v;
    }
};

/// All-pairs dominance oracle, independent of pareto_filter's incremental
/// structure: index i survives iff no j dominates it.
inline std::vector<std::size_t> brute_force_front(const std::vector<Vector>& points) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j)
            if (j != i && dominates(points[j], points[i])) dominated = true;
        if (!dominated) out.push_back(i);
    }
    return out;
}

inline bool non_increasing(const std::vector<IterationRecord>& history) {
    for (std::size_t i = 1; i < history.size(); ++i)
        if (history[i].best_penalized > history[i - 1].best_penalized) return false;
    return true;
}

} // namespace jaya::test
