#pragma once

#include <filesystem>
#include <string>

#include "jaya/benchmarks.hpp"
#include "jaya/bounds.hpp"
#include "jaya/config.hpp"
#include "jaya/multi_objective.hpp"
#include "jaya/single_objective.hpp"

namespace jaya::io {

enum class OutputFormat { csv, json_lines };

/// Doubles are printed with 17 significant digits so that reading a value
/// back reproduces the exact bits.
std::string format_float(double v);

/// Columns: iteration, best_penalized, pop_size. Header always present.
void write_history(const RunResult& result, const std::filesystem::path& path,
                   OutputFormat format = OutputFormat::csv);

/// Columns: iteration, front_size, ideal_1..ideal_k.
void write_history(const MultiRunResult& result, const std::filesystem::path& path,
                   OutputFormat format = OutputFormat::csv);

/// Columns: x1..xn, f1..fk.
void write_front(const MultiRunResult& result, const std::filesystem::path& path,
                 OutputFormat format = OutputFormat::csv);

/// Columns: problem, n_var, pop_size, max_iter, seed, achieved, evaluations,
/// stopped_early. One row per run.
void write_suite(const bench::SuiteReport& report, const std::filesystem::path& path,
                 OutputFormat format = OutputFormat::csv);

/// Columns: wind, solar, hydro, storage, total, emissions, cost, reliability.
/// Reliability is reported positive (the solver minimizes its negation).
void write_energy_front(const MultiRunResult& result, const std::filesystem::path& path,
                        OutputFormat format = OutputFormat::csv);

/// Text block with population size, iteration count, variable limits, and
/// the best solution with its objective value.
std::string summarize(const RunResult& result, const Bounds& bounds, const SolverConfig& cfg);

/// Multi-objective variant: reports front size and the ideal point.
std::string summarize(const MultiRunResult& result, const Bounds& bounds,
                      const SolverConfig& cfg);

/// Plain-text suite table with best/median/worst per problem.
std::string summarize(const bench::SuiteReport& report);

} // namespace jaya::io
