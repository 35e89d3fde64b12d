#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "jaya/config.hpp"
#include "jaya/energy.hpp"
#include "jaya/io.hpp"

namespace jaya::cli {

enum class Mode { benchmark_suite, single, multi, energy_case };

/// Fully-resolved run description: one mode, a validated solver config, and
/// output settings.
struct RunConfig {
    Mode mode;
    std::string problem; // "all" selects every suite problem
    int n_var = 2;
    SolverConfig solver;
    int repetitions = 10; // suite runs per problem
    std::filesystem::path out_dir = ".";
    io::OutputFormat format = io::OutputFormat::csv;
    energy::EnergyModelFactors factors = energy::EnergyModelFactors::defaults();
    double min_total_share = 70.0;
};

/// One source of settings (a config file or the command line), with nothing
/// filled in by default. Later sources override earlier ones field by field.
struct RawOptions {
    std::optional<std::string> mode;
    std::optional<std::string> problem;
    std::optional<int> n_var;
    std::optional<int> pop_size;
    std::optional<int> max_iter;
    std::optional<std::uint64_t> seed;
    std::optional<bool> adaptive_pop;
    std::optional<int> min_pop;
    std::optional<int> max_pop;
    std::optional<double> tolerance;
    std::optional<int> patience;
    std::optional<std::string> out_dir;
    std::optional<std::string> format;
    std::optional<int> workers;
    std::optional<int> repetitions;
    std::optional<Eigen::Vector4d> emission_factors;
    std::optional<Eigen::Vector4d> cost_factors;
    std::optional<Eigen::Vector4d> reliability_weights;
    std::optional<double> intermittency_penalty;
    std::optional<double> min_total_share;
};

/// Parses a `key = value` config file. Keys mirror the solver argument names
/// (popSize, maxiter, n_var, adaptive_pop, ...); '#' starts a comment.
/// Unknown or duplicate keys raise an invalid-config error naming the key.
RawOptions parse_config_file(const std::filesystem::path& path);

/// Merges file-sourced and flag-sourced options (flags win), applies the
/// documented defaults, and validates the result. Missing required fields
/// are reported together in one error.
RunConfig resolve_options(const RawOptions& file, const RawOptions& flags);

/// Runs the configured mode, writes output files into out_dir, and returns
/// the summary text that the CLI prints.
std::string dispatch(const RunConfig& cfg);

} // namespace jaya::cli
