#include "jaya/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace jaya::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

/// Emits rows either as CSV with a header or as one JSON object per line.
class RowWriter {
  public:
    RowWriter(const std::filesystem::path& path, OutputFormat format,
              std::vector<std::string> columns)
        : path_(path), format_(format), columns_(std::move(columns)), out_(open_out(path)) {
        if (format_ == OutputFormat::csv) {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                out_ << (i ? "," : "") << columns_[i];
            out_ << "\n";
        }
    }

    void done() { finish(out_, path_); }

    RowWriter& value(double v) { return cell(format_float(v), v); }
    RowWriter& value(long v) { return cell(std::to_string(v), v); }
    RowWriter& value(int v) { return cell(std::to_string(v), v); }
    RowWriter& value(std::uint64_t v) { return cell(std::to_string(v), v); }
    RowWriter& value(bool v) { return cell(v ? "true" : "false", v); }
    RowWriter& value(const std::string& v) { return cell(v, v); }

    void end_row() {
        if (format_ == OutputFormat::csv) {
            out_ << "\n";
        } else {
            out_ << row_.dump() << "\n";
            row_.clear();
        }
        col_ = 0;
    }

  private:
    template <typename T>
    RowWriter& cell(const std::string& text, const T& v) {
        if (format_ == OutputFormat::csv) {
            out_ << (col_ ? "," : "") << text;
        } else {
            row_[columns_.at(col_)] = v;
        }
        ++col_;
        return *this;
    }

    std::filesystem::path path_;
    OutputFormat format_;
    std::vector<std::string> columns_;
    std::ofstream out_;
    ordered_json row_ = ordered_json::object();
    std::size_t col_ = 0;
};

std::vector<std::string> numbered_columns(const std::string& stem, Index count) {
    std::vector<std::string> cols;
    cols.reserve(static_cast<std::size_t>(count));
    for (Index i = 0; i < count; ++i) cols.push_back(stem + std::to_string(i + 1));
    return cols;
}

} // namespace

std::string format_float(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_history(const RunResult& result, const std::filesystem::path& path,
                   OutputFormat format) {
    RowWriter w(path, format, {"iteration", "best_penalized", "pop_size"});
    for (const IterationRecord& rec : result.history) {
        w.value(rec.iteration).value(rec.best_penalized).value(rec.pop_size);
        w.end_row();
    }
    w.done();
}

void write_history(const MultiRunResult& result, const std::filesystem::path& path,
                   OutputFormat format) {
    const Index k = result.history.empty() ? 0 : result.history.front().ideal_point.size();
    std::vector<std::string> cols = {"iteration", "front_size"};
    for (const std::string& c : numbered_columns("ideal_", k)) cols.push_back(c);
    RowWriter w(path, format, std::move(cols));
    for (const MultiIterationRecord& rec : result.history) {
        w.value(rec.iteration).value(rec.front_size);
        for (Index i = 0; i < rec.ideal_point.size(); ++i) w.value(rec.ideal_point[i]);
        w.end_row();
    }
    w.done();
}

void write_front(const MultiRunResult& result, const std::filesystem::path& path,
                 OutputFormat format) {
    const Index n = result.front.empty() ? 0 : result.front.front().x.size();
    const Index k = result.front.empty() ? 0 : result.front.front().objectives.size();
    std::vector<std::string> cols = numbered_columns("x", n);
    for (const std::string& c : numbered_columns("f", k)) cols.push_back(c);
    RowWriter w(path, format, std::move(cols));
    for (const FrontEntry& e : result.front) {
        for (Index i = 0; i < e.x.size(); ++i) w.value(e.x[i]);
        for (Index i = 0; i < e.objectives.size(); ++i) w.value(e.objectives[i]);
        w.end_row();
    }
    w.done();
}

void write_suite(const bench::SuiteReport& report, const std::filesystem::path& path,
                 OutputFormat format) {
    RowWriter w(path, format,
                {"problem", "n_var", "pop_size", "max_iter", "seed", "achieved", "evaluations",
                 "stopped_early"});
    for (const bench::SuiteRow& r : report.rows) {
        w.value(r.problem)
            .value(r.n_var)
            .value(r.pop_size)
            .value(r.max_iter)
            .value(r.seed)
            .value(r.achieved)
            .value(r.evaluations)
            .value(r.stopped_early);
        w.end_row();
    }
    w.done();
}

void write_energy_front(const MultiRunResult& result, const std::filesystem::path& path,
                        OutputFormat format) {
    RowWriter w(path, format,
                {"wind", "solar", "hydro", "storage", "total", "emissions", "cost",
                 "reliability"});
    for (const FrontEntry& e : result.front) {
        for (Index i = 0; i < 4; ++i) w.value(e.x[i]);
        w.value(e.x.sum());
        w.value(e.objectives[0]);
        w.value(e.objectives[1]);
        w.value(-e.objectives[2]); // stored negated; report the index itself
        w.end_row();
    }
    w.done();
}

namespace {

void append_header(std::ostringstream& os, const Bounds& bounds, const SolverConfig& cfg,
                   int iterations) {
    os << "Population Size      = " << cfg.pop_size << "\n";
    os << "Number of iterations = " << iterations << "\n";
    os << "Number of variables  = " << bounds.n_var() << "\n\n";
    os << "Objective: " << (cfg.sense == Sense::minimize ? "minimize" : "maximize") << "\n\n";
    os << "Limits:\n";
    for (Index i = 0; i < bounds.n_var(); ++i)
        os << "x" << (i + 1) << " = [" << bounds.lower[i] << ", " << bounds.upper[i] << "]\n";
}

} // namespace

std::string summarize(const RunResult& result, const Bounds& bounds, const SolverConfig& cfg) {
    std::ostringstream os;
    os << "Jaya Algorithm\n";
    append_header(os, bounds, cfg, result.iterations_run);
    os << "\nBest Result:\n";
    for (Index i = 0; i < result.best_x.size(); ++i)
        os << "x" << (i + 1) << " = " << format_float(result.best_x[i]) << "\n";
    os << "f(x) = " << format_float(result.best_value) << "\n";
    os << "Stopped early: " << (result.stopped_early ? "yes" : "no") << "\n";
    os << "Objective evaluations: " << result.evaluations << "\n";
    return os.str();
}

std::string summarize(const MultiRunResult& result, const Bounds& bounds,
                      const SolverConfig& cfg) {
    std::ostringstream os;
    os << "Jaya Algorithm (multi-objective)\n";
    append_header(os, bounds, cfg, result.iterations_run);
    os << "\nPareto front size = " << result.front.size() << "\n";
    os << "Ideal point:\n";
    const Vector ideal =
        result.history.empty() ? Vector{} : result.history.back().ideal_point;
    for (Index k = 0; k < ideal.size(); ++k)
        os << "f" << (k + 1) << " = " << format_float(ideal[k]) << "\n";
    os << "Stopped early: " << (result.stopped_early ? "yes" : "no") << "\n";
    os << "Candidate evaluations: " << result.evaluations << "\n";
    return os.str();
}

std::string summarize(const bench::SuiteReport& report) {
    std::ostringstream os;
    os << "Benchmark suite (achieved objective values)\n";
    for (const bench::SuiteSummary& s : report.summaries) {
        os << s.problem << ": best = " << format_float(s.best)
           << ", median = " << format_float(s.median) << ", worst = " << format_float(s.worst)
           << ", evaluations = " << s.total_evaluations << "\n";
    }
    return os.str();
}

} // namespace jaya::io
