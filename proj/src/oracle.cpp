#include "malmquist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "malmquist/rng.hpp"

namespace malmquist {

using linalg::Matrix;

std::vector<cplx> trace_of(const TaylorSeries& f, const Sigma& sigma) {
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(sigma.n()));
    for (const SigmaPoint& p : sigma.points()) {
        const TaylorSeries sh = taylor_shift(f, p.lambda);
        for (int j = 0; j < p.mult; ++j) out.push_back(sh.at(static_cast<std::size_t>(j)));
    }
    return out;
}

TaylorSeries HermitePoly::to_taylor() const {
    TaylorSeries acc{{newton_coef.back()}};
    for (std::size_t k = newton_coef.size() - 1; k-- > 0;) {
        acc = mul(acc, TaylorSeries{{-nodes[k], cplx(1.0)}});
        acc = acc + TaylorSeries{{newton_coef[k]}};
    }
    return acc;
}

cplx HermitePoly::eval(cplx z) const {
    cplx acc = newton_coef.back();
    for (std::size_t k = newton_coef.size() - 1; k-- > 0;) {
        acc = acc * (z - nodes[k]) + newton_coef[k];
    }
    return acc;
}

Matrix HermitePoly::eval_matrix(const Matrix& m) const {
    const int n = m.rows();
    Matrix acc = newton_coef.back() * Matrix::identity(n);
    for (std::size_t k = newton_coef.size() - 1; k-- > 0;) {
        Matrix shifted = m;
        for (int i = 0; i < n; ++i) shifted(i, i) -= nodes[k];
        acc = shifted * acc;
        for (int i = 0; i < n; ++i) acc(i, i) += newton_coef[k];
    }
    return acc;
}

HermitePoly hermite_interpolant(const Sigma& sigma, const std::vector<cplx>& trace) {
    const std::vector<cplx>& nodes = sigma.expanded();
    const std::size_t n = nodes.size();
    if (trace.size() != n) throw std::invalid_argument("hermite_interpolant: trace length must equal n");

    // Guard against equal point values split across separate runs; confluent
    // divided differences need equal nodes consecutive.
    std::vector<std::size_t> run_start(n);
    {
        std::size_t pos = 0;
        for (const SigmaPoint& p : sigma.points()) {
            for (int j = 0; j < p.mult; ++j) run_start[pos + static_cast<std::size_t>(j)] = pos;
            pos += static_cast<std::size_t>(p.mult);
        }
    }
    for (std::size_t a = 0; a < sigma.points().size(); ++a) {
        for (std::size_t b = a + 1; b < sigma.points().size(); ++b) {
            if (sigma.points()[a].lambda == sigma.points()[b].lambda) {
                throw std::invalid_argument("hermite_interpolant: duplicate point values across runs");
            }
        }
    }

    HermitePoly poly;
    poly.nodes = nodes;
    poly.min_distinct_gap = std::numeric_limits<double>::infinity();

    // Divided-difference table, column by column (column j = order j).
    std::vector<cplx> col(n), prev(n);
    for (std::size_t i = 0; i < n; ++i) prev[i] = trace[run_start[i]];
    poly.newton_coef.assign(n, cplx(0.0));
    poly.newton_coef[0] = prev[0];
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = j; i < n; ++i) {
            if (nodes[i] == nodes[i - j]) {
                col[i] = trace[run_start[i] + j];
            } else {
                const cplx gap = nodes[i] - nodes[i - j];
                poly.min_distinct_gap = std::min(poly.min_distinct_gap, std::abs(gap));
                col[i] = (prev[i] - prev[i - 1]) / gap;
            }
        }
        poly.newton_coef[j] = col[j];
        std::swap(prev, col);
    }
    poly.conditioning_warning = poly.min_distinct_gap < 1e-6;
    return poly;
}

MinNormResult min_norm(const Sigma& sigma, const std::vector<cplx>& trace, const Matrix* shift) {
    const HermitePoly poly = hermite_interpolant(sigma, trace);
    Matrix local;
    if (!shift) {
        local = compressed_shift(sigma);
        shift = &local;
    }
    MinNormResult res;
    res.value = linalg::operator_norm(poly.eval_matrix(*shift));
    res.conditioning_warning = poly.conditioning_warning;
    // Residual: the rebuilt polynomial must reproduce the requested trace.
    const TaylorSeries p = poly.to_taylor();
    const std::vector<cplx> back = trace_of(p, sigma);
    double resid = 0.0;
    for (std::size_t i = 0; i < trace.size(); ++i) resid = std::max(resid, std::abs(back[i] - trace[i]));
    res.trace_residual = resid;
    return res;
}

double pick_min_norm(const Sigma& sigma, const std::vector<cplx>& values, double tol) {
    for (const SigmaPoint& p : sigma.points()) {
        if (p.mult != 1) throw std::invalid_argument("pick_min_norm: distinct nodes required (use min_norm)");
    }
    const std::vector<cplx>& nodes = sigma.expanded();
    const std::size_t n = nodes.size();
    if (values.size() != n) throw std::invalid_argument("pick_min_norm: value count mismatch");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (nodes[a] == nodes[b]) throw std::invalid_argument("pick_min_norm: repeated node");

    const auto feasible = [&](double c) {
        Matrix p(static_cast<int>(n), static_cast<int>(n));
        double scale = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const cplx num = cplx(c * c) - values[i] * std::conj(values[j]);
                const cplx den = cplx(1.0) - nodes[i] * std::conj(nodes[j]);
                p(static_cast<int>(i), static_cast<int>(j)) = num / den;
                scale = std::max(scale, std::abs(p(static_cast<int>(i), static_cast<int>(j))));
            }
        }
        return linalg::smallest_eigenvalue(p) >= -1e-12 * scale;
    };

    double lo = 0.0;
    for (const cplx& w : values) lo = std::max(lo, std::abs(w));
    if (lo == 0.0) return 0.0;
    if (feasible(lo)) return lo;

    // Feasible seed: the interpolation polynomial itself, bounded by its
    // coefficient-sum norm.
    const HermitePoly poly = hermite_interpolant(sigma, values);
    const TaylorSeries pt = poly.to_taylor();
    double hi = 0.0;
    for (const cplx& c : pt.coef) hi += std::abs(c);
    hi = std::max(hi, lo * (1.0 + 1e-9));
    int guard = 0;
    while (!feasible(hi)) {
        hi *= 2.0;
        if (++guard > 60) throw std::runtime_error("pick_min_norm: no feasible seed");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

namespace {

// Representers of the Hermite trace functionals in l_a^2(alpha): functional
// L(f) = f^(j)(lambda)/j! = sum_k f_k C(k,j) lambda^(k-j) has representer
// coefficients conj(C(k,j) lambda^(k-j)) (k+1)^(-2 alpha).
struct RepresenterSet {
    std::vector<std::vector<cplx>> vec;  // per functional, length d+1
    Matrix gram;                         // G(i,s) = (g_s, g_i)_alpha
    std::size_t degree = 0;
};

RepresenterSet build_representers(const Sigma& sigma, double alpha) {
    const double r = sigma.r();
    const int n = sigma.n();
    int max_j = 0;
    for (const SigmaPoint& p : sigma.points()) max_j = std::max(max_j, p.mult - 1);
    // Tail of the representer coefficients decays like C(k,j) r^(k-j)
    // (k+1)^(2|alpha|); pick d so the remaining mass is negligible.
    std::size_t d = std::max<std::size_t>(64, 4 * static_cast<std::size_t>(n));
    if (r > 0.0) {
        const double q = 2.0 * std::abs(alpha) + max_j;
        while (std::pow(static_cast<double>(d), q) * std::pow(r, static_cast<double>(d) - max_j) > 1e-17 &&
               d < (1u << 20)) {
            d *= 2;
        }
    }
    RepresenterSet rs;
    rs.degree = d;
    std::vector<double> weight(d + 1), inv_weight(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        weight[k] = std::pow(k + 1.0, 2.0 * alpha);
        inv_weight[k] = 1.0 / weight[k];
    }
    for (const SigmaPoint& p : sigma.points()) {
        for (int j = 0; j < p.mult; ++j) {
            std::vector<cplx> g(d + 1, cplx(0.0));
            cplx lpow(1.0);  // lambda^(k-j), built incrementally
            for (std::size_t k = static_cast<std::size_t>(j); k <= d; ++k) {
                const double bin = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
                g[k] = std::conj(bin * lpow) * inv_weight[k];
                lpow *= p.lambda;
            }
            rs.vec.push_back(std::move(g));
        }
    }
    rs.gram = Matrix(n, n);
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < n; ++s) {
            cplx acc(0.0);
            for (std::size_t k = 0; k <= d; ++k) {
                acc += rs.vec[static_cast<std::size_t>(s)][k] * std::conj(rs.vec[static_cast<std::size_t>(i)][k]) *
                       weight[k];
            }
            rs.gram(i, s) = acc;
        }
    }
    return rs;
}

// Hermite "cardinal" matrices E_i = p_{delta_i}(M); any trace tau then gives
// p_tau(M) = sum tau_i E_i by linearity of divided differences.
std::vector<Matrix> cardinal_matrices(const Sigma& sigma, const Matrix& m) {
    const int n = sigma.n();
    std::vector<Matrix> e;
    e.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<cplx> delta(static_cast<std::size_t>(n), cplx(0.0));
        delta[static_cast<std::size_t>(i)] = cplx(1.0);
        e.push_back(hermite_interpolant(sigma, delta).eval_matrix(m));
    }
    return e;
}

Matrix assemble(const std::vector<Matrix>& e, const std::vector<cplx>& tau) {
    Matrix acc(e.front().rows(), e.front().cols());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (tau[i] == cplx(0.0)) continue;
        acc = acc + tau[i] * e[i];
    }
    return acc;
}

}  // namespace

InterpEstimate interp_constant_estimate(const Sigma& sigma, const SpaceSpec& x,
                                        const OracleOptions& opt) {
    const Matrix m = compressed_shift(sigma);
    const std::vector<Matrix> card = cardinal_matrices(sigma, m);
    const int n = sigma.n();
    Rng rng(opt.seed);

    // Shared warm starts: the weighted Dirichlet witness and, on the integer
    // Hilbert ladder, the positive-coefficient quotient witness.
    std::vector<TaylorSeries> starts;
    starts.push_back(lower_lp(n, x.p, x.alpha).witness);
    {
        const double nw = 1.0 - 2.0 * x.alpha;
        const double rounded = std::round(nw);
        if (x.is_hilbert() && std::abs(nw - rounded) < 1e-12 && rounded >= 1.0) {
            cplx anchor(0.0);
            for (cplx lam : sigma.expanded()) {
                if (std::abs(lam) > std::abs(anchor)) anchor = lam;
            }
            starts.push_back(
                lower_onepoint_hilbert(n, anchor, static_cast<unsigned>(rounded)).witness);
        }
    }

    InterpEstimate best;
    if (x.is_hilbert()) {
        const RepresenterSet rs = build_representers(sigma, x.alpha);
        const Matrix& gram = rs.gram;
        const auto coords_norm = [&](const std::vector<cplx>& c) {
            cplx acc(0.0);
            const std::vector<cplx> gc = mat_vec(gram, c);
            for (int i = 0; i < n; ++i) acc += std::conj(c[static_cast<std::size_t>(i)]) * gc[static_cast<std::size_t>(i)];
            return std::sqrt(std::max(0.0, acc.real()));
        };
        const auto run_from = [&](std::vector<cplx> coords) {
            double norm = coords_norm(coords);
            if (norm == 0.0) return std::pair<double, std::vector<cplx>>{0.0, coords};
            for (cplx& c : coords) c /= norm;
            double value = 0.0;
            for (int it = 0; it < opt.max_iters; ++it) {
                const std::vector<cplx> tau = mat_vec(gram, coords);
                const Matrix t = assemble(card, tau);
                const linalg::SingularTriple sv = linalg::top_singular(t);
                if (sv.sigma <= value + opt.convergence_tol) {
                    value = std::max(value, sv.sigma);
                    break;
                }
                value = sv.sigma;
                // phi_i = v* E_i u; the constrained maximizer of
                // Re(sum (G c)_i phi_i) over c* G c <= 1 is conj(phi)
                // normalized in the G metric.
                std::vector<cplx> next(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    const std::vector<cplx> eu = mat_vec(card[static_cast<std::size_t>(i)], sv.right);
                    next[static_cast<std::size_t>(i)] = std::conj(linalg::dot(sv.left, eu));
                }
                const double nn = coords_norm(next);
                if (nn == 0.0) break;
                for (cplx& c : next) c /= nn;
                coords = std::move(next);
            }
            return std::pair<double, std::vector<cplx>>{value, coords};
        };

        std::vector<std::vector<cplx>> inits;
        for (const TaylorSeries& f : starts) {
            // Project the start onto the representer span: solve G c = trace(f).
            const std::vector<cplx> tau = trace_of(f, sigma);
            try {
                inits.push_back(linalg::solve_vec(gram, tau));
            } catch (const std::exception&) {
                // Singular Gram (clustered nodes); skip this warm start.
            }
        }
        while (static_cast<int>(inits.size()) < opt.restarts) {
            std::vector<cplx> c(static_cast<std::size_t>(n));
            for (cplx& z : c) z = rng.complex_gaussian();
            inits.push_back(std::move(c));
        }
        std::vector<cplx> best_coords;
        for (auto& c : inits) {
            const auto [value, coords] = run_from(std::move(c));
            if (value > best.value) {
                best.value = value;
                best_coords = coords;
            }
        }
        // Reconstruct the witness Taylor series from the representer span.
        if (!best_coords.empty()) {
            std::vector<cplx> coef(rs.degree + 1, cplx(0.0));
            for (int i = 0; i < n; ++i) {
                for (std::size_t k = 0; k <= rs.degree; ++k) {
                    coef[k] += best_coords[static_cast<std::size_t>(i)] * rs.vec[static_cast<std::size_t>(i)][k];
                }
            }
            best.witness = TaylorSeries{std::move(coef)};
            best.witness.trim();
        }
        best.degree_cap = static_cast<int>(rs.degree);
        best.sensitivity_delta = 0.0;
        return best;
    }

    // General p: degree-capped coefficient search with the Hoelder-extremal
    // update; report the sensitivity of the value to doubling the cap.
    const auto run_capped = [&](std::size_t cap, const std::vector<TaylorSeries>& warm,
                                int restarts, Rng local_rng) {
        InterpEstimate out;
        out.degree_cap = static_cast<int>(cap);
        const auto run_from = [&](TaylorSeries f) {
            const double nf = weighted_norm(f, x);
            if (nf == 0.0) return std::pair<double, TaylorSeries>{0.0, f};
            f = cplx(1.0 / nf) * f;
            double value = 0.0;
            for (int it = 0; it < opt.max_iters; ++it) {
                const std::vector<cplx> tau = trace_of(f, sigma);
                const Matrix t = assemble(card, tau);
                const linalg::SingularTriple sv = linalg::top_singular(t);
                if (sv.sigma <= value + opt.convergence_tol) {
                    value = std::max(value, sv.sigma);
                    break;
                }
                value = sv.sigma;
                // w_k = v* M^k u; maximize Re sum f_k w_k over the weighted
                // p-ball via the dual-extremal sequence.
                std::vector<cplx> w(cap + 1);
                std::vector<cplx> y = sv.right;
                for (std::size_t k = 0; k <= cap; ++k) {
                    w[k] = linalg::dot(sv.left, y);
                    y = mat_vec(m, y);
                }
                std::vector<cplx> fnew(cap + 1, cplx(0.0));
                if (x.p == 1.0) {
                    std::size_t kstar = 0;
                    double bestw = -1.0;
                    for (std::size_t k = 0; k <= cap; ++k) {
                        const double cand = std::abs(w[k]) * std::pow(k + 1.0, -x.alpha);
                        if (cand > bestw) {
                            bestw = cand;
                            kstar = k;
                        }
                    }
                    if (bestw <= 0.0) break;
                    const cplx ph = std::conj(w[kstar]) / std::abs(w[kstar]);
                    fnew[kstar] = ph * std::pow(kstar + 1.0, -x.alpha);
                } else if (x.p_is_infinite()) {
                    for (std::size_t k = 0; k <= cap; ++k) {
                        if (w[k] == cplx(0.0)) continue;
                        fnew[k] = std::conj(w[k]) / std::abs(w[k]) * std::pow(k + 1.0, -x.alpha);
                    }
                } else {
                    const double pd = x.dual_p();
                    double dual_norm_pd = 0.0;
                    std::vector<double> what(cap + 1, 0.0);
                    for (std::size_t k = 0; k <= cap; ++k) {
                        what[k] = std::abs(w[k]) * std::pow(k + 1.0, -x.alpha);
                        dual_norm_pd += std::pow(what[k], pd);
                    }
                    if (dual_norm_pd <= 0.0) break;
                    const double dn = std::pow(dual_norm_pd, 1.0 / pd);
                    for (std::size_t k = 0; k <= cap; ++k) {
                        if (what[k] == 0.0) continue;
                        const cplx ph = std::conj(w[k]) / std::abs(w[k]);
                        const double mag = std::pow(what[k] / dn, pd - 1.0);
                        fnew[k] = ph * mag * std::pow(k + 1.0, -x.alpha);
                    }
                }
                TaylorSeries cand{std::move(fnew)};
                const double cn = weighted_norm(cand, x);
                if (cn == 0.0) break;
                f = cplx(1.0 / cn) * cand;
            }
            return std::pair<double, TaylorSeries>{value, f};
        };
        std::vector<TaylorSeries> inits = warm;
        for (TaylorSeries& f : inits) f = f.truncated(cap);
        while (static_cast<int>(inits.size()) < restarts) {
            std::vector<cplx> c(cap + 1);
            for (cplx& z : c) z = local_rng.complex_gaussian();
            inits.push_back(TaylorSeries{std::move(c)});
        }
        for (auto& f : inits) {
            const auto [value, witness] = run_from(std::move(f));
            if (value > out.value) {
                out.value = value;
                out.witness = witness;
            }
        }
        return out;
    };

    const std::size_t cap = std::max<std::size_t>(4 * static_cast<std::size_t>(n), 64);
    best = run_capped(cap, starts, opt.restarts, rng.derive(1));
    std::vector<TaylorSeries> refine = starts;
    refine.push_back(best.witness);
    InterpEstimate wide = run_capped(2 * cap, refine, std::max(4, opt.restarts / 4), rng.derive(2));
    best.sensitivity_delta = wide.value - best.value;
    if (wide.value > best.value) {
        best.value = wide.value;
        best.witness = wide.witness;
    }
    return best;
}

VonNeumannReport von_neumann_check(const Sigma& sigma, const TaylorSeries& f, int trials,
                                   std::uint64_t seed, double tol) {
    const Matrix m = compressed_shift(sigma);
    const std::vector<cplx> tau = trace_of(f, sigma);
    const HermitePoly poly = hermite_interpolant(sigma, tau);
    VonNeumannReport rep;
    rep.trials = trials;
    rep.min_norm_value = linalg::operator_norm(poly.eval_matrix(m));

    // Independent route at the model operator: direct coefficient powers.
    {
        const int n = m.rows();
        Matrix acc(n, n);
        Matrix pw = Matrix::identity(n);
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (f.coef[k] != cplx(0.0)) acc = acc + f.coef[k] * pw;
            if (k + 1 < f.size()) pw = pw * m;
        }
        rep.model_gap = std::abs(linalg::operator_norm(acc) - rep.min_norm_value);
    }

    Rng rng(seed);
    const int n = sigma.n();
    const std::vector<cplx>& pts = sigma.expanded();
    rep.max_excess = -std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trials; ++trial) {
        Matrix upper(n, n);
        for (int i = 0; i < n; ++i) {
            upper(i, i) = pts[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j) upper(i, j) = rng.complex_gaussian();
        }
        if (n > 1) {
            // Largest s with ||diag + s*strict_upper|| <= 1 by bisection; the
            // feasible set is an interval since the norm is convex in s.
            Matrix strict = upper;
            for (int i = 0; i < n; ++i) strict(i, i) = cplx(0.0);
            const double base = linalg::operator_norm(strict);
            if (base > 0.0) {
                double lo = 0.0, hi = 2.0 / base;
                const auto norm_at = [&](double s) {
                    Matrix a = cplx(s) * strict;
                    for (int i = 0; i < n; ++i) a(i, i) += pts[static_cast<std::size_t>(i)];
                    return linalg::operator_norm(a);
                };
                int guard = 0;
                while (norm_at(hi) <= 1.0 && ++guard < 60) hi *= 2.0;
                for (int step = 0; step < 30; ++step) {
                    const double mid = 0.5 * (lo + hi);
                    if (norm_at(mid) <= 1.0) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                upper = cplx(lo) * strict;
                for (int i = 0; i < n; ++i) upper(i, i) += pts[static_cast<std::size_t>(i)];
            }
        }
        const double value = linalg::operator_norm(poly.eval_matrix(upper));
        rep.max_contraction_value = std::max(rep.max_contraction_value, value);
        rep.max_excess = std::max(rep.max_excess, value - rep.min_norm_value);
    }
    rep.witness_gap = rep.min_norm_value - rep.max_contraction_value;
    rep.pass = rep.max_excess <= tol && rep.model_gap <= tol;
    return rep;
}

OracleFn make_oracle(const OracleOptions& opt) {
    return [opt](const Sigma& sigma, const SpaceSpec& x) {
        return interp_constant_estimate(sigma, x, opt).value;
    };
}

}  // namespace malmquist
