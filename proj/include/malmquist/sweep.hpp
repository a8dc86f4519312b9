#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "malmquist/bounds.hpp"
#include "malmquist/oracle.hpp"

namespace malmquist {

struct SweepOptions {
    std::vector<int> ns;
    std::vector<double> rs;
    std::vector<double> ps;
    std::vector<double> alphas;
    bool with_oracle = true;
    std::uint64_t seed = 1;
    int threads = 0;  // 0: MALMQUIST_THREADS env var, else hardware concurrency
    OracleOptions oracle;
};

struct SweepRow {
    BoundReport report;
    double comparator = 0.0;  // phi_X(1 - (1-r)/n), the conjectured growth gauge
    double runtime_ms = 0.0;
};

struct ExponentFit {
    double p = 2.0;
    double alpha = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    int points = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;     // grid order: n outer .. alpha inner
    std::vector<ExponentFit> fits;  // one per (p, alpha) family with oracle data
};

/// Runs the grid on a worker pool; per-point seeds derive from the master
/// seed and the grid index, so the output is independent of scheduling.
SweepResult run_sweep(const SweepOptions& opt);

std::string sweep_csv_header();
/// Wall-clock timings default to zero in emitted CSV so that identical
/// arguments and seed give identical bytes; pass emit_timings for real ones.
std::string sweep_csv_row(const SweepRow& row, bool emit_timings = false);
/// Full document: header, rows in grid order, then '#'-prefixed fit lines.
std::string sweep_csv(const SweepResult& result, bool emit_timings = false);

/// Least squares slope/intercept of y on x.
ExponentFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Deterministic "%.12g" with '.' decimal; "inf" for infinities.
std::string format_double(double v);

int resolve_threads(int requested);

}  // namespace malmquist
