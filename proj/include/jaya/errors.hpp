#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "jaya/types.hpp"

namespace jaya {

/// Base class for every error the library raises.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidConfigError : Error {
    using Error::Error;
};

struct InvalidBoundsError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

/// Raised when an operation needs evaluated candidates but finds unset ones.
struct EvaluationOrderError : Error {
    using Error::Error;
};

/// An objective returned NaN/inf. Carries the offending point; the run aborts
/// rather than treating the value as +inf.
struct NonFiniteObjectiveError : Error {
    NonFiniteObjectiveError(const std::string& what, Vector offending_x)
        : Error(what), x(std::move(offending_x)) {}
    Vector x;
};

/// A constraint function returned NaN/inf (or threw). Identifies which one.
struct NonFiniteConstraintError : Error {
    NonFiniteConstraintError(const std::string& what, std::size_t index)
        : Error(what), constraint_index(index) {}
    std::size_t constraint_index;
};

/// Raised by the multi-objective solver when given fewer than two objectives.
struct WrongSolverError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace jaya
