#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jaya/run_config.hpp"

namespace {

// CLI11 fills these; only flags the user actually passed become overrides.
struct FlagValues {
    std::string mode, problem, out_dir, format, config_path;
    int n_var = 0, pop_size = 0, max_iter = 0, min_pop = 0, max_pop = 0, patience = 0,
        workers = 0, repetitions = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    bool adaptive_pop = false;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jaya optimizer: parameter-free single- and multi-objective "
                 "population search"};
    FlagValues v;
    auto* mode = app.add_option("--mode", v.mode,
                                "benchmark-suite | single | multi | energy-case");
    auto* problem = app.add_option("--problem", v.problem,
                                   "problem name (or comma list / 'all' for the suite)");
    auto* n_var = app.add_option("--n-var", v.n_var, "number of decision variables");
    auto* pop_size = app.add_option("--pop-size", v.pop_size, "population size (default 50)");
    auto* max_iter = app.add_option("--max-iter", v.max_iter, "maximum iterations");
    auto* seed = app.add_option("--seed", v.seed, "seed for reproducible runs");
    auto* adaptive = app.add_flag("--adaptive-pop", v.adaptive_pop,
                                  "enable dynamic population sizing");
    auto* min_pop = app.add_option("--min-pop", v.min_pop, "adaptive lower population limit");
    auto* max_pop = app.add_option("--max-pop", v.max_pop, "adaptive upper population limit");
    auto* tolerance = app.add_option("--tolerance", v.tolerance, "early-stop tolerance");
    auto* patience = app.add_option("--patience", v.patience, "early-stop patience");
    auto* out_dir = app.add_option("--out-dir", v.out_dir, "output directory (default .)");
    auto* format = app.add_option("--format", v.format, "csv (default) | json-lines");
    auto* config = app.add_option("--config", v.config_path, "config file (flags override it)");
    auto* workers = app.add_option("--workers", v.workers,
                                   "parallel evaluation threads (default: all cores)");
    auto* repetitions = app.add_option("--repetitions", v.repetitions,
                                       "suite runs per problem (default 10)");
    CLI11_PARSE(app, argc, argv);

    try {
        jaya::cli::RawOptions file;
        if (*config) file = jaya::cli::parse_config_file(v.config_path);

        jaya::cli::RawOptions flags;
        if (*mode) flags.mode = v.mode;
        if (*problem) flags.problem = v.problem;
        if (*n_var) flags.n_var = v.n_var;
        if (*pop_size) flags.pop_size = v.pop_size;
        if (*max_iter) flags.max_iter = v.max_iter;
        if (*seed) flags.seed = v.seed;
        if (*adaptive) flags.adaptive_pop = true;
        if (*min_pop) flags.min_pop = v.min_pop;
        if (*max_pop) flags.max_pop = v.max_pop;
        if (*tolerance) flags.tolerance = v.tolerance;
        if (*patience) flags.patience = v.patience;
        if (*out_dir) flags.out_dir = v.out_dir;
        if (*format) flags.format = v.format;
        if (*workers) flags.workers = v.workers;
        if (*repetitions) flags.repetitions = v.repetitions;

        const jaya::cli::RunConfig cfg = jaya::cli::resolve_options(file, flags);
        std::cout << jaya::cli::dispatch(cfg);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
