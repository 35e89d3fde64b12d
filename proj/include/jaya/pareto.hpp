#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jaya/errors.hpp"
#include "jaya/types.hpp"

namespace jaya {

/// True iff a dominates b: a[k] <= b[k] everywhere and a[k] < b[k] somewhere.
/// Minimize sense on every coordinate; equal vectors never dominate.
template <typename DA, typename DB>
bool dominates(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    if (a.size() != b.size())
        throw DimensionError("dominates: objective vectors of size " + std::to_string(a.size()) +
                             " and " + std::to_string(b.size()));
    bool strict = false;
    for (Index k = 0; k < a.size(); ++k) {
        if (a(k) > b(k)) return false;
        if (a(k) < b(k)) strict = true;
    }
    return strict;
}

/// Indices (ascending) of the non-dominated subset. Duplicates of a
/// non-dominated vector are all retained.
std::vector<std::size_t> pareto_filter(const std::vector<Vector>& points);

struct FrontEntry {
    Vector x;
    Vector objectives; // raw values, user scale
};

/// Archive of the non-dominated set over everything ever inserted.
///
/// Admission is feasible-first: infeasible points are accepted only until the
/// first feasible point arrives, at which moment all infeasible entries are
/// purged and only feasible points are admitted from then on. While the
/// archive holds infeasible points, dominance is computed on penalized
/// vectors (raw + weight * violation on every coordinate). Re-inserting an x
/// already present is a no-op; distinct points with equal objectives are all
/// kept. An optional capacity evicts the most crowded entry (smallest
/// nearest-neighbour distance in objective space).
class ParetoArchive {
  public:
    explicit ParetoArchive(double violation_weight,
                           std::optional<std::size_t> capacity = std::nullopt)
        : weight_(violation_weight), capacity_(capacity) {}

    void insert(const Vector& x, const Vector& objectives, double violation_measure);

    bool has_feasible() const { return has_feasible_; }
    std::size_t size() const { return items_.size(); }

    /// Per-objective minima over the current entries.
    Vector ideal_point() const;

    std::vector<FrontEntry> entries() const;

  private:
    struct Item {
        Vector x;
        Vector raw;
        double viol;
        Vector key; // raw + weight * viol, the dominance comparand
    };

    void evict_most_crowded();

    double weight_;
    std::optional<std::size_t> capacity_;
    bool has_feasible_ = false;
    std::vector<Item> items_;
};

} // namespace jaya
