#include "malmquist/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "malmquist/bernstein.hpp"
#include "malmquist/bounds.hpp"
#include "malmquist/interpolate.hpp"
#include "malmquist/oracle.hpp"
#include "malmquist/space.hpp"
#include "malmquist/sweep.hpp"

namespace malmquist {

Sigma random_sigma(Rng& rng, int max_n, double max_r, bool allow_mult) {
    const int n = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(max_n)));
    return random_sigma_exact(rng, n, max_r, allow_mult);
}

Sigma random_sigma_exact(Rng& rng, int n, double max_r, bool allow_mult) {
    std::vector<SigmaPoint> pts;
    int used = 0;
    while (used < n) {
        int mult = 1;
        if (allow_mult && n - used > 1 && rng.uniform() < 0.25) {
            mult = 2 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(std::min(3, n - used - 1))));
        }
        cplx lam;
        bool fresh = true;
        do {
            lam = rng.in_disc(max_r);
            fresh = true;
            for (const SigmaPoint& p : pts) {
                if (p.lambda == lam) fresh = false;
            }
        } while (!fresh);
        pts.push_back(SigmaPoint{lam, mult});
        used += mult;
    }
    return Sigma(std::move(pts));
}

Sigma random_distinct_sigma(Rng& rng, int max_n, double max_r, double min_gap) {
    const int n = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(max_n)));
    std::vector<SigmaPoint> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < n) {
        const cplx lam = rng.in_disc(max_r);
        bool ok = true;
        for (const SigmaPoint& p : pts) {
            if (std::abs(p.lambda - lam) < min_gap) ok = false;
        }
        if (ok) pts.push_back(SigmaPoint{lam, 1});
        if (++guard > 10000) break;
    }
    return Sigma(std::move(pts));
}

TaylorSeries random_polynomial(Rng& rng, int degree, bool unit_h2) {
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
    for (cplx& z : c) z = rng.complex_gaussian();
    TaylorSeries f{std::move(c)};
    if (unit_h2) {
        const double n = h2_norm(f);
        if (n > 0.0) f = cplx(1.0 / n) * f;
    }
    return f;
}

MalmquistRep random_rep(Rng& rng, const std::shared_ptr<const MalmquistBasis>& basis) {
    std::vector<cplx> coords(static_cast<std::size_t>(basis->n()));
    for (cplx& z : coords) z = rng.complex_gaussian();
    const double n = linalg::vec_norm(coords);
    if (n > 0.0) {
        for (cplx& z : coords) z /= n;
    } else {
        coords[0] = cplx(1.0);
    }
    return MalmquistRep(basis, std::move(coords));
}

namespace {

struct Budget {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string fmt(double v) { return format_double(v); }

CriterionResult trace_correctness(const AcceptanceOptions& opt) {
    CriterionResult res{1, "trace correctness of the linear interpolant", false, "", 0.0, 20.0};
    Budget budget;
    Rng rng = Rng(opt.seed).derive(101);
    const int trials = opt.quick ? 20 : 100;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Sigma sigma = random_sigma(rng, 10, 0.9);
        const int deg = 1 + static_cast<int>(rng.uniform_index(50));
        const TaylorSeries f = random_polynomial(rng, deg);
        const MalmquistRep g = phi(f, sigma);
        worst = std::max(worst, trace_match(f, g, sigma).max_defect);
    }
    res.runtime_s = budget.elapsed();
    res.pass = worst <= 1e-8 && res.runtime_s <= res.runtime_limit_s;
    res.detail = "max defect " + fmt(worst) + " over " + std::to_string(trials) + " instances";
    return res;
}

CriterionResult hilbert_sandwich(const AcceptanceOptions& opt) {
    CriterionResult res{2, "certified sandwich for one-point Hilbert constants", false, "", 0.0, 180.0};
    Budget budget;
    Rng rng = Rng(opt.seed).derive(102);
    const std::vector<int> ns = opt.quick ? std::vector<int>{1, 4} : std::vector<int>{1, 2, 4, 8};
    const std::vector<cplx> lambdas = opt.quick
                                          ? std::vector<cplx>{cplx(0.0), cplx(0.9)}
                                          : std::vector<cplx>{cplx(0.0), cplx(0.5), cplx(0.9), cplx(0.0, 0.6)};
    const std::vector<double> alphas{0.0, -0.5, -1.0};
    double worst_lo = -1e9, worst_hi = -1e9;  // max violations
    int count = 0;
    for (int n : ns) {
        for (cplx lam : lambdas) {
            for (double alpha : alphas) {
                const unsigned nw = static_cast<unsigned>(std::lround(1.0 - 2.0 * alpha));
                double cert = lower_onepoint_hilbert(n, lam, nw).value;
                if (std::abs(lam) == 0.0) {
                    cert = std::max(cert, lower_lp(n, 2.0, alpha).value);
                }
                OracleOptions oo;
                oo.seed = rng.derive(static_cast<std::uint64_t>(count)).next_u64();
                const double est =
                    interp_constant_estimate(Sigma::one_point(lam, n), SpaceSpec(2.0, alpha), oo).value;
                const double up = upper_hilbert(n, std::abs(lam), alpha);
                worst_lo = std::max(worst_lo, cert - est);
                worst_hi = std::max(worst_hi, est - up);
                ++count;
            }
        }
    }
    res.runtime_s = budget.elapsed();
    res.pass = worst_lo <= 1e-6 && worst_hi <= 1e-6 && res.runtime_s <= res.runtime_limit_s;
    res.detail = "max(lower-oracle) " + fmt(worst_lo) + ", max(oracle-upper) " + fmt(worst_hi) +
                 " over " + std::to_string(count) + " cells";
    return res;
}

CriterionResult growth_exponents(const AcceptanceOptions& opt) {
    CriterionResult res{3, "growth exponent of the oracle on the integer Hilbert ladder", false, "",
                        0.0, 600.0};
    Budget budget;
    Rng rng = Rng(opt.seed).derive(103);
    const std::vector<int> ns = opt.quick ? std::vector<int>{2, 4, 8} : std::vector<int>{2, 4, 8, 16};
    const std::vector<double> rs = opt.quick ? std::vector<double>{0.0, 0.9}
                                             : std::vector<double>{0.0, 0.5, 0.9};
    std::ostringstream detail;
    bool ok = true;
    int cell = 0;
    for (double alpha : {0.0, -0.5, -1.0}) {
        std::vector<double> xs, ys;
        for (int n : ns) {
            for (double r : rs) {
                OracleOptions oo;
                oo.seed = rng.derive(static_cast<std::uint64_t>(cell++)).next_u64();
                const double est =
                    interp_constant_estimate(Sigma::one_point(cplx(r), n), SpaceSpec(2.0, alpha), oo)
                        .value;
                xs.push_back(std::log(n / (1.0 - r)));
                ys.push_back(std::log(est));
            }
        }
        const ExponentFit fit = fit_loglog(xs, ys);
        const double expect = 0.5 * (1.0 - 2.0 * alpha);
        if (std::abs(fit.slope - expect) > 0.35) ok = false;
        detail << "alpha=" << fmt(alpha) << " slope=" << fmt(fit.slope) << " (expect "
               << fmt(expect) << ") ";
    }
    res.runtime_s = budget.elapsed();
    res.pass = ok && res.runtime_s <= res.runtime_limit_s;
    res.detail = detail.str();
    return res;
}

CriterionResult bernstein_suite(const AcceptanceOptions& opt) {
    CriterionResult res{4, "model-space Bernstein inequalities", false, "", 0.0, 60.0};
    Budget budget;
    Rng rng = Rng(opt.seed).derive(104);
    const int trials = opt.quick ? 40 : 200;
    int violations = 0;
    double tightest = 1e18;
    for (int t = 0; t < trials; ++t) {
        const Sigma sigma = random_sigma(rng, 10, 0.95);
        const auto basis = make_basis(sigma);
        const MalmquistRep g = random_rep(rng, basis);
        const RatioReport first = check_dyakonov(sigma, g);
        if (!first.pass) ++violations;
        tightest = std::min(tightest, first.bound - first.ratio);
        for (unsigned k = 1; k <= 3; ++k) {
            const RatioReport higher = check_higher(sigma, g, k);
            if (!higher.pass) ++violations;
            tightest = std::min(tightest, higher.bound - higher.ratio);
        }
    }
    res.runtime_s = budget.elapsed();
    res.pass = violations == 0 && res.runtime_s <= res.runtime_limit_s;
    res.detail = std::to_string(violations) + " violations over " + std::to_string(trials) +
                 " draws; smallest margin " + fmt(tightest);
    return res;
}

CriterionResult projection_bound(const AcceptanceOptions& opt) {
    CriterionResult res{5, "projected-kernel norm bound 2n/(1-r)", false, "", 0.0, 60.0};
    Budget budget;
    Rng rng = Rng(opt.seed).derive(105);
    const int trials = opt.quick ? 40 : 200;
    int violations = 0;
    double worst_ratio = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Sigma sigma = random_sigma(rng, 12, 0.95);
        const cplx zeta = rng.in_disc(0.999);
        const MalmquistRep proj = project_kernel(sigma, zeta);
        const double norm_sq = proj.h2_norm() * proj.h2_norm();
        const double bound = 2.0 * sigma.n() / (1.0 - sigma.r());
        if (norm_sq > bound) ++violations;
        worst_ratio = std::max(worst_ratio, norm_sq / bound);
    }
    res.runtime_s = budget.elapsed();
    res.pass = violations == 0 && res.runtime_s <= res.runtime_limit_s;
    res.detail = std::to_string(violations) + " violations; max ratio " + fmt(worst_ratio);
    return res;
}

CriterionResult oracle_cross_validation(const AcceptanceOptions& opt) {
    CriterionResult res{6, "shift oracle vs Pick-matrix bisection", false, "", 0.0, 120.0};
    Budget budget;
    Rng rng = Rng(opt.seed).derive(106);
    const int trials = opt.quick ? 10 : 50;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Sigma sigma = random_distinct_sigma(rng, 6, 0.9);
        std::vector<cplx> w(static_cast<std::size_t>(sigma.n()));
        for (cplx& v : w) v = rng.complex_gaussian();
        const double a = min_norm(sigma, w).value;
        const double b = pick_min_norm(sigma, w);
        worst = std::max(worst, std::abs(a - b) / (1.0 + a));
    }
    res.runtime_s = budget.elapsed();
    res.pass = worst <= 1e-7 && res.runtime_s <= res.runtime_limit_s;
    res.detail = "max relative gap " + fmt(worst) + " over " + std::to_string(trials) + " instances";
    return res;
}

CriterionResult von_neumann(const AcceptanceOptions& opt) {
    CriterionResult res{7, "von Neumann bound over random contractions", false, "", 0.0, 300.0};
    Budget budget;
    Rng rng = Rng(opt.seed).derive(107);
    const int sigmas = opt.quick ? 3 : 10;
    const int trials = opt.quick ? 20 : 100;
    double worst_excess = -1e18, worst_model = 0.0;
    for (int s = 0; s < sigmas; ++s) {
        const Sigma sigma = random_sigma(rng, 6, 0.9);
        const TaylorSeries f = random_polynomial(rng, 2 * sigma.n() + 4);
        const VonNeumannReport rep =
            von_neumann_check(sigma, f, trials, rng.derive(static_cast<std::uint64_t>(s)).next_u64());
        worst_excess = std::max(worst_excess, rep.max_excess);
        worst_model = std::max(worst_model, rep.model_gap);
    }
    res.runtime_s = budget.elapsed();
    res.pass = worst_excess <= 1e-8 && worst_model <= 1e-8 && res.runtime_s <= res.runtime_limit_s;
    res.detail = "max excess " + fmt(worst_excess) + ", max model gap " + fmt(worst_model);
    return res;
}

CriterionResult aronszajn_debranges(const AcceptanceOptions& opt) {
    CriterionResult res{8, "composition-power norm inequality", false, "", 0.0, 60.0};
    Budget budget;
    Rng rng = Rng(opt.seed).derive(108);
    const int trials = opt.quick ? 25 : 100;
    double worst = -1e18;
    for (int t = 0; t < trials; ++t) {
        const int deg = 1 + static_cast<int>(rng.uniform_index(20));
        const TaylorSeries f = random_polynomial(rng, deg);  // unit H^2 norm
        const double h2sq = 1.0;
        for (unsigned nw = 1; nw <= 3; ++nw) {
            const TaylorSeries fn = pow(f, nw);
            const double lhs = binomial_norm(fn, nw);
            worst = std::max(worst, lhs * lhs - std::pow(h2sq, static_cast<double>(nw)));
        }
    }
    res.runtime_s = budget.elapsed();
    res.pass = worst <= 1e-9 && res.runtime_s <= res.runtime_limit_s;
    res.detail = "max excess " + fmt(worst) + " over " + std::to_string(trials) + " draws";
    return res;
}

CriterionResult dirichlet_certificate(const AcceptanceOptions& opt) {
    CriterionResult res{9, "origin certificate below the oracle", false, "", 0.0, 120.0};
    Budget budget;
    Rng rng = Rng(opt.seed).derive(109);
    double worst = -1e18;
    int cell = 0;
    for (double alpha : {0.0, -0.5, -1.0}) {
        for (int n : {2, 4, 8}) {
            const double cert = lower_lp(n, 2.0, alpha).value;
            OracleOptions oo;
            oo.seed = rng.derive(static_cast<std::uint64_t>(cell++)).next_u64();
            const double est =
                interp_constant_estimate(Sigma::one_point(cplx(0.0), n), SpaceSpec(2.0, alpha), oo)
                    .value;
            worst = std::max(worst, cert - est);
        }
    }
    res.runtime_s = budget.elapsed();
    res.pass = worst <= 1e-6 && res.runtime_s <= res.runtime_limit_s;
    res.detail = "max(cert - oracle) " + fmt(worst);
    return res;
}

CriterionResult witness_identity(const AcceptanceOptions& opt) {
    CriterionResult res{10, "quotient witness positivity and endpoint identity", false, "", 0.0,
                        60.0};
    Budget budget;
    (void)opt;
    bool nonneg = true;
    double worst_rel = 0.0;
    for (unsigned nw = 1; nw <= 3; ++nw) {
        for (int n = 2; n <= 16; ++n) {
            for (double r : {0.0, 0.5, 0.9}) {
                const TaylorSeries psi = onepoint_witness_poly(n, r, nw);
                double sum = 0.0;
                for (const cplx& c : psi.coef) {
                    if (c.real() < 0.0 || c.imag() != 0.0) nonneg = false;
                    sum += c.real();
                }
                const double b = std::pow(static_cast<double>(n), -0.5 * nw);
                const double expected =
                    b * std::pow((1.0 + r) * n, static_cast<double>(nw)) *
                    std::pow(1.0 - r * r, -0.5 * nw);
                worst_rel = std::max(worst_rel, std::abs(sum - expected) / expected);
            }
        }
    }
    res.runtime_s = budget.elapsed();
    res.pass = nonneg && worst_rel <= 1e-10 && res.runtime_s <= res.runtime_limit_s;
    res.detail = std::string(nonneg ? "coefficients nonnegative" : "NEGATIVE COEFFICIENT") +
                 ", max relative identity error " + fmt(worst_rel);
    return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& log) {
    std::vector<CriterionResult> results;
    const auto run = [&](CriterionResult (*fn)(const AcceptanceOptions&)) {
        CriterionResult r = fn(opt);
        results.push_back(r);
        char line[512];
        std::snprintf(line, sizeof line, "%s criterion %2d: %s — %s (%.2fs, limit %.0fs)",
                      r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(), r.runtime_s,
                      r.runtime_limit_s);
        log << line << '\n';
    };
    run(trace_correctness);
    run(hilbert_sandwich);
    run(growth_exponents);
    run(bernstein_suite);
    run(projection_bound);
    run(oracle_cross_validation);
    run(von_neumann);
    run(aronszajn_debranges);
    run(dirichlet_certificate);
    run(witness_identity);
    return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

std::string acceptance_csv(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    out << "criterion,name,pass,detail\n";
    for (const CriterionResult& r : results) {
        std::string detail = r.detail;
        for (char& c : detail) {
            if (c == ',') c = ';';
        }
        out << r.id << ',' << r.name << ',' << (r.pass ? 1 : 0) << ',' << detail << '\n';
    }
    return out.str();
}

}  // namespace malmquist
