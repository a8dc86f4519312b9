#include "malmquist/sweep.hpp"

#include "malmquist/rng.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace malmquist {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MALMQUIST_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ExponentFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    ExponentFit fit;
    fit.points = static_cast<int>(x.size());
    if (x.size() != y.size() || x.size() < 2) return fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double n = static_cast<double>(x.size());
    const double det = n * sxx - sx * sx;
    if (det == 0.0) return fit;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy * sxx - sx * sxy) / det;
    return fit;
}

SweepResult run_sweep(const SweepOptions& opt) {
    if (opt.ns.empty() || opt.rs.empty() || opt.ps.empty() || opt.alphas.empty()) {
        throw std::invalid_argument("run_sweep: empty grid");
    }
    struct GridPoint {
        int n;
        double r, p, alpha;
    };
    std::vector<GridPoint> grid;
    for (int n : opt.ns)
        for (double r : opt.rs)
            for (double p : opt.ps)
                for (double alpha : opt.alphas) grid.push_back({n, r, p, alpha});

    SweepResult result;
    result.rows.resize(grid.size());

    std::atomic<std::size_t> cursor{0};
    const int workers = std::min<int>(resolve_threads(opt.threads), static_cast<int>(grid.size()));
    const auto work = [&]() {
        for (;;) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= grid.size()) return;
            const GridPoint& g = grid[idx];
            const auto t0 = std::chrono::steady_clock::now();
            const SpaceSpec space(g.p, g.alpha);
            OracleFn oracle;
            if (opt.with_oracle) {
                OracleOptions oo = opt.oracle;
                oo.seed = Rng(opt.seed).derive(idx).next_u64();
                oracle = make_oracle(oo);
            }
            SweepRow row;
            row.report = bound_report(g.n, g.r, space, oracle);
            row.comparator = eval_functional_norm(1.0 - (1.0 - g.r) / g.n, space);
            row.runtime_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            result.rows[idx] = std::move(row);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    // Per-(p, alpha) exponent fits of log(oracle) against log(n/(1-r)).
    for (double p : opt.ps) {
        for (double alpha : opt.alphas) {
            std::vector<double> xs, ys;
            for (const SweepRow& row : result.rows) {
                if (row.report.space.p != p || row.report.space.alpha != alpha) continue;
                if (!row.report.oracle_estimate || *row.report.oracle_estimate <= 0.0) continue;
                xs.push_back(std::log(row.report.n / (1.0 - row.report.r)));
                ys.push_back(std::log(*row.report.oracle_estimate));
            }
            if (xs.size() >= 2) {
                ExponentFit fit = fit_loglog(xs, ys);
                fit.p = p;
                fit.alpha = alpha;
                result.fits.push_back(fit);
            }
        }
    }
    return result;
}

std::string sweep_csv_header() {
    return "n,r,p,alpha,lower,oracle,upper,lower_witness,upper_route,exponent_expected,"
           "comparator,runtime_ms";
}

std::string sweep_csv_row(const SweepRow& row, bool emit_timings) {
    const BoundReport& b = row.report;
    std::ostringstream out;
    out << b.n << ',' << format_double(b.r) << ',' << format_double(b.space.p) << ','
        << format_double(b.space.alpha) << ',' << format_double(b.lower_certified) << ',';
    if (b.oracle_estimate) out << format_double(*b.oracle_estimate);
    out << ',' << format_double(b.upper_certified) << ',' << b.lower_witness << ','
        << b.upper_route << ',' << format_double(expected_exponent(b.space)) << ','
        << format_double(row.comparator) << ','
        << format_double(emit_timings ? row.runtime_ms : 0.0);
    return out.str();
}

std::string sweep_csv(const SweepResult& result, bool emit_timings) {
    std::ostringstream out;
    out << sweep_csv_header() << '\n';
    for (const SweepRow& row : result.rows) out << sweep_csv_row(row, emit_timings) << '\n';
    for (const ExponentFit& fit : result.fits) {
        out << "# fit p=" << format_double(fit.p) << " alpha=" << format_double(fit.alpha)
            << " slope=" << format_double(fit.slope)
            << " intercept=" << format_double(fit.intercept) << " points=" << fit.points << '\n';
    }
    return out.str();
}

}  // namespace malmquist
