#pragma once

#include <Eigen/Core>

namespace jaya {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Sense { minimize, maximize };

/// +1 for minimize, -1 for maximize. All internal comparisons are
/// minimize-form; maximization negates the objective before anything else.
constexpr double sense_sign(Sense s) { return s == Sense::minimize ? 1.0 : -1.0; }

} // namespace jaya
