#pragma once

// Parameter-free population-based optimization: the Jaya update rule with
// constraint penalties, adaptive population sizing, early stopping, Pareto
// front tracking, and deterministic parallel evaluation.

#include "jaya/benchmarks.hpp"
#include "jaya/bounds.hpp"
#include "jaya/config.hpp"
#include "jaya/constraints.hpp"
#include "jaya/energy.hpp"
#include "jaya/errors.hpp"
#include "jaya/io.hpp"
#include "jaya/multi_objective.hpp"
#include "jaya/pareto.hpp"
#include "jaya/population.hpp"
#include "jaya/rng.hpp"
#include "jaya/single_objective.hpp"
#include "jaya/types.hpp"
#include "jaya/update.hpp"
