#include "jaya/pareto.hpp"

#include <algorithm>
#include <limits>

namespace jaya {

std::vector<std::size_t> pareto_filter(const std::vector<Vector>& points) {
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j : front) {
            if (dominates(points[j], points[i])) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        std::erase_if(front, [&](std::size_t j) { return dominates(points[i], points[j]); });
        front.push_back(i);
    }
    return front; // insertion order keeps indices ascending
}

void ParetoArchive::insert(const Vector& x, const Vector& objectives, double violation_measure) {
    const bool feasible = violation_measure == 0.0;
    if (!feasible && has_feasible_) return;
    if (feasible && !has_feasible_) {
        items_.clear();
        has_feasible_ = true;
    }
    const Vector key = objectives.array() + weight_ * violation_measure;
    for (const Item& it : items_) {
        if (dominates(it.key, key)) return;
        if (it.x.size() == x.size() && it.x == x) return; // re-evaluated point
    }
    std::erase_if(items_, [&](const Item& it) { return dominates(key, it.key); });
    items_.push_back({x, objectives, violation_measure, key});
    if (capacity_ && items_.size() > *capacity_) evict_most_crowded();
}

void ParetoArchive::evict_most_crowded() {
    while (capacity_ && items_.size() > *capacity_ && items_.size() > 1) {
        std::size_t victim = 0;
        double victim_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < items_.size(); ++i) {
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < items_.size(); ++j)
                if (j != i) nearest = std::min(nearest, (items_[i].key - items_[j].key).norm());
            if (nearest < victim_dist) {
                victim_dist = nearest;
                victim = i;
            }
        }
        items_.erase(items_.begin() + static_cast<std::ptrdiff_t>(victim));
    }
}

Vector ParetoArchive::ideal_point() const {
    if (items_.empty()) return {};
    Vector ideal = items_.front().raw;
    for (const Item& it : items_) ideal = ideal.cwiseMin(it.raw);
    return ideal;
}

std::vector<FrontEntry> ParetoArchive::entries() const {
    std::vector<FrontEntry> out;
    out.reserve(items_.size());
    for (const Item& it : items_) out.push_back({it.x, it.raw});
    return out;
}

} // namespace jaya
