#include "jaya/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "jaya/benchmarks.hpp"

namespace jaya::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

int parse_int(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw InvalidConfigError("config key " + key + ": expected an integer, got '" + text +
                                 "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw InvalidConfigError("config key " + key + ": expected a nonnegative integer, got '" +
                                 text + "'");
    }
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw InvalidConfigError("config key " + key + ": expected a number, got '" + text + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw InvalidConfigError("config key " + key + ": expected true/false, got '" + text + "'");
}

Eigen::Vector4d parse_vec4(const std::string& key, const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_double(key, trim(item)));
    if (values.size() != 4)
        throw InvalidConfigError("config key " + key + ": expected 4 comma-separated values " +
                                 "(wind, solar, hydro, storage), got " +
                                 std::to_string(values.size()));
    return Eigen::Vector4d(values[0], values[1], values[2], values[3]);
}

Mode parse_mode(const std::string& text) {
    if (text == "benchmark-suite") return Mode::benchmark_suite;
    if (text == "single") return Mode::single;
    if (text == "multi") return Mode::multi;
    if (text == "energy-case") return Mode::energy_case;
    throw InvalidConfigError(
        "mode must be one of benchmark-suite|single|multi|energy-case, got '" + text + "'");
}

io::OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return io::OutputFormat::csv;
    if (text == "json-lines") return io::OutputFormat::json_lines;
    throw InvalidConfigError("format must be csv or json-lines, got '" + text + "'");
}

template <typename T>
void overlay(std::optional<T>& into, const std::optional<T>& from) {
    if (from) into = from;
}

RawOptions merged(const RawOptions& file, const RawOptions& flags) {
    RawOptions m = file;
    overlay(m.mode, flags.mode);
    overlay(m.problem, flags.problem);
    overlay(m.n_var, flags.n_var);
    overlay(m.pop_size, flags.pop_size);
    overlay(m.max_iter, flags.max_iter);
    overlay(m.seed, flags.seed);
    overlay(m.adaptive_pop, flags.adaptive_pop);
    overlay(m.min_pop, flags.min_pop);
    overlay(m.max_pop, flags.max_pop);
    overlay(m.tolerance, flags.tolerance);
    overlay(m.patience, flags.patience);
    overlay(m.out_dir, flags.out_dir);
    overlay(m.format, flags.format);
    overlay(m.workers, flags.workers);
    overlay(m.repetitions, flags.repetitions);
    overlay(m.emission_factors, flags.emission_factors);
    overlay(m.cost_factors, flags.cost_factors);
    overlay(m.reliability_weights, flags.reliability_weights);
    overlay(m.intermittency_penalty, flags.intermittency_penalty);
    overlay(m.min_total_share, flags.min_total_share);
    return m;
}

std::vector<std::string> split_csv_names(const std::string& text) {
    std::vector<std::string> names;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string name = trim(item);
        if (!name.empty()) names.push_back(name);
    }
    return names;
}

} // namespace

RawOptions parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file: " + path.string());
    RawOptions opts;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidConfigError("config line " + std::to_string(line_no) +
                                     ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second)
            throw InvalidConfigError("duplicate config key: " + key);
        if (key == "mode") opts.mode = value;
        else if (key == "problem") opts.problem = value;
        else if (key == "n_var") opts.n_var = parse_int(key, value);
        else if (key == "popSize") opts.pop_size = parse_int(key, value);
        else if (key == "maxiter") opts.max_iter = parse_int(key, value);
        else if (key == "seed") opts.seed = parse_u64(key, value);
        else if (key == "adaptive_pop") opts.adaptive_pop = parse_bool(key, value);
        else if (key == "min_pop") opts.min_pop = parse_int(key, value);
        else if (key == "max_pop") opts.max_pop = parse_int(key, value);
        else if (key == "tolerance") opts.tolerance = parse_double(key, value);
        else if (key == "patience") opts.patience = parse_int(key, value);
        else if (key == "out_dir") opts.out_dir = value;
        else if (key == "format") opts.format = value;
        else if (key == "workers") opts.workers = parse_int(key, value);
        else if (key == "repetitions") opts.repetitions = parse_int(key, value);
        else if (key == "emission_factors") opts.emission_factors = parse_vec4(key, value);
        else if (key == "cost_factors") opts.cost_factors = parse_vec4(key, value);
        else if (key == "reliability_weights") opts.reliability_weights = parse_vec4(key, value);
        else if (key == "intermittency_penalty")
            opts.intermittency_penalty = parse_double(key, value);
        else if (key == "min_total_share") opts.min_total_share = parse_double(key, value);
        else throw InvalidConfigError("unknown config key: " + key);
    }
    return opts;
}

RunConfig resolve_options(const RawOptions& file, const RawOptions& flags) {
    const RawOptions opts = merged(file, flags);
    std::vector<std::string> missing;
    if (!opts.mode) missing.push_back("mode (benchmark-suite|single|multi|energy-case)");
    if (opts.mode && (*opts.mode == "single" || *opts.mode == "multi")) {
        if (!opts.problem) missing.push_back("problem");
        if (!opts.max_iter) missing.push_back("maxiter");
        if (!opts.n_var) missing.push_back("n_var");
    }
    if (!missing.empty()) {
        std::string what = "missing required fields:";
        for (const std::string& m : missing) what += " " + m + ";";
        what.pop_back();
        throw InvalidConfigError(what);
    }

    RunConfig cfg;
    cfg.mode = parse_mode(*opts.mode);
    if (opts.problem) cfg.problem = *opts.problem;
    if (opts.n_var) cfg.n_var = *opts.n_var;
    if (opts.pop_size) cfg.solver.pop_size = *opts.pop_size;
    if (opts.max_iter) cfg.solver.max_iter = *opts.max_iter;
    if (opts.seed) cfg.solver.seed = *opts.seed;
    if (opts.adaptive_pop) cfg.solver.adaptive_pop = *opts.adaptive_pop;
    if (opts.min_pop) cfg.solver.min_pop = *opts.min_pop;
    if (opts.max_pop) cfg.solver.max_pop = *opts.max_pop;
    if (opts.tolerance || opts.patience) {
        EarlyStop es;
        if (opts.tolerance) es.tolerance = *opts.tolerance;
        if (opts.patience) es.patience = *opts.patience;
        cfg.solver.early_stop = es;
    }
    if (opts.workers) cfg.solver.workers = *opts.workers;
    if (opts.repetitions) cfg.repetitions = *opts.repetitions;
    if (opts.out_dir) cfg.out_dir = *opts.out_dir;
    if (opts.format) cfg.format = parse_format(*opts.format);
    if (opts.emission_factors) cfg.factors.emission_factors = *opts.emission_factors;
    if (opts.cost_factors) cfg.factors.cost_factors = *opts.cost_factors;
    if (opts.reliability_weights) cfg.factors.reliability_weights = *opts.reliability_weights;
    if (opts.intermittency_penalty)
        cfg.factors.intermittency_penalty = *opts.intermittency_penalty;
    if (opts.min_total_share) cfg.min_total_share = *opts.min_total_share;

    switch (cfg.mode) {
    case Mode::benchmark_suite:
        if (cfg.problem.empty()) cfg.problem = "all";
        if (!opts.max_iter) cfg.solver.max_iter = 500;
        if (cfg.repetitions < 1) throw InvalidConfigError("repetitions must be at least 1");
        if (cfg.problem != "all")
            for (const std::string& name : split_csv_names(cfg.problem))
                bench::make_benchmark(name, cfg.n_var); // existence check
        break;
    case Mode::single:
        bench::make_benchmark(cfg.problem, cfg.n_var);
        break;
    case Mode::multi:
        bench::make_multi_benchmark(cfg.problem, cfg.n_var);
        break;
    case Mode::energy_case: {
        const energy::EnergyCaseConfig defaults = energy::EnergyCaseConfig::defaults();
        if (!opts.pop_size) cfg.solver.pop_size = defaults.solver.pop_size;
        if (!opts.max_iter) cfg.solver.max_iter = defaults.solver.max_iter;
        if (!opts.adaptive_pop) cfg.solver.adaptive_pop = defaults.solver.adaptive_pop;
        if (!opts.min_pop) cfg.solver.min_pop = defaults.solver.min_pop;
        if (!opts.max_pop) cfg.solver.max_pop = defaults.solver.max_pop;
        if (!opts.tolerance && !opts.patience) cfg.solver.early_stop = defaults.solver.early_stop;
        if (!opts.seed) cfg.solver.seed = defaults.solver.seed;
        cfg.n_var = 4;
        break;
    }
    }
    validate(cfg.solver);
    return cfg;
}

std::string dispatch(const RunConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec || !std::filesystem::is_directory(cfg.out_dir))
        throw IoError("output directory is not writable: " + cfg.out_dir.string());
    const char* csv_ext = cfg.format == io::OutputFormat::csv ? ".csv" : ".jsonl";

    switch (cfg.mode) {
    case Mode::single: {
        const bench::BenchmarkProblem problem = bench::make_benchmark(cfg.problem, cfg.n_var);
        const RunResult result = jaya(problem.f, problem.default_bounds, {}, cfg.solver);
        io::write_history(result, cfg.out_dir / (std::string("history") + csv_ext), cfg.format);
        return io::summarize(result, problem.default_bounds, cfg.solver);
    }
    case Mode::multi: {
        const bench::MultiBenchmark problem = bench::make_multi_benchmark(cfg.problem, cfg.n_var);
        const MultiRunResult result =
            jaya_multi(problem.objectives, problem.default_bounds, {}, cfg.solver);
        io::write_history(result, cfg.out_dir / (std::string("history") + csv_ext), cfg.format);
        io::write_front(result, cfg.out_dir / (std::string("front") + csv_ext), cfg.format);
        return io::summarize(result, problem.default_bounds, cfg.solver);
    }
    case Mode::benchmark_suite: {
        std::vector<bench::BenchmarkProblem> problems;
        const std::vector<std::string> names = cfg.problem == "all"
                                                   ? bench::benchmark_names()
                                                   : split_csv_names(cfg.problem);
        for (const std::string& name : names)
            problems.push_back(bench::make_benchmark(name, cfg.n_var));
        const std::uint64_t base = cfg.solver.seed.value_or(1);
        std::vector<std::uint64_t> seeds;
        for (int i = 0; i < cfg.repetitions; ++i) seeds.push_back(base + static_cast<std::uint64_t>(i));
        const bench::SuiteReport report = bench::run_suite(problems, cfg.solver, seeds);
        io::write_suite(report, cfg.out_dir / (std::string("suite") + csv_ext), cfg.format);
        return io::summarize(report);
    }
    case Mode::energy_case: {
        energy::EnergyCaseConfig ecfg = energy::EnergyCaseConfig::defaults();
        ecfg.solver = cfg.solver;
        ecfg.factors = cfg.factors;
        ecfg.min_total_share = cfg.min_total_share;
        const MultiRunResult result = energy::run_energy_case(ecfg);
        io::write_history(result, cfg.out_dir / (std::string("history") + csv_ext), cfg.format);
        io::write_energy_front(result, cfg.out_dir / (std::string("front") + csv_ext),
                               cfg.format);
        return io::summarize(result, energy::energy_bounds(), ecfg.solver);
    }
    }
    throw InvalidConfigError("unreachable mode");
}

} // namespace jaya::cli
