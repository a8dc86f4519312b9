#include "malmquist/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "malmquist/interpolate.hpp"

namespace malmquist {

namespace {

constexpr double kPi = 3.14159265358979323846;

double factorial(unsigned n) {
    double acc = 1.0;
    for (unsigned j = 2; j <= n; ++j) acc *= j;
    return acc;
}

void check_grid_args(int n, double r) {
    if (n < 1) throw std::invalid_argument("bounds: n >= 1 required");
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("bounds: r in [0,1) required");
}

// Integer weight bracketing a fractional alpha <= 0: N-1 <= -alpha <= N with
// theta = 1 - alpha - N in [0,1].
struct ThetaSplit {
    unsigned upper_weight;
    double theta;
};

ThetaSplit theta_split(double alpha) {
    const double na = -alpha;
    unsigned upper = static_cast<unsigned>(std::ceil(na - 1e-12));
    if (upper < 1) upper = 1;  // alpha == 0 sits at theta = 0 of the [0,1] pair
    return ThetaSplit{upper, 1.0 - alpha - static_cast<double>(upper)};
}

bool is_integer_weight(double alpha, unsigned* n_weight) {
    const double na = -alpha;
    const double rounded = std::round(na);
    if (std::abs(na - rounded) < 1e-12) {
        *n_weight = static_cast<unsigned>(rounded);
        return true;
    }
    return false;
}

// Wiener-algebra chain for p = infinity at integer weight, kept in its
// pre-simplification form (a function of x = n/(1-r)).
double chain_infinity(double x, unsigned n_weight) {
    const unsigned nn = n_weight;
    const double poly = 3.0 * x + 1.0 + factorial(nn + 1) * std::pow(4.0 * x, nn + 1) + factorial(nn);
    return k_constant(nn) * kPi * poly * std::sqrt(2.0 * x);
}

double upper_l1(int n, double r, double alpha) {
    const double x = n / (1.0 - r);
    unsigned nw = 0;
    if (is_integer_weight(alpha, &nw)) {
        return chain_constant_l1(nw) * std::pow(x, nw + 0.5);
    }
    const ThetaSplit ts = theta_split(alpha);
    const double a = std::pow(chain_constant_l1(ts.upper_weight - 1), 1.0 - ts.theta) *
                     std::pow(chain_constant_l1(ts.upper_weight), ts.theta);
    return a * std::pow(x, 0.5 * (1.0 - 2.0 * alpha));
}

double upper_linf(int n, double r, double alpha) {
    const double x = n / (1.0 - r);
    unsigned nw = 0;
    if (is_integer_weight(alpha, &nw)) return chain_infinity(x, nw);
    const ThetaSplit ts = theta_split(alpha);
    return std::pow(chain_infinity(x, ts.upper_weight - 1), 1.0 - ts.theta) *
           std::pow(chain_infinity(x, ts.upper_weight), ts.theta);
}

}  // namespace

double k_constant(unsigned n_weight) {
    if (n_weight == 0) return 1.0;
    const double a = std::pow(static_cast<double>(n_weight), static_cast<double>(n_weight));
    const double b = std::pow(static_cast<double>(n_weight) + 1.0, static_cast<double>(n_weight)) / factorial(n_weight);
    return std::max(a, b);
}

double chain_constant_hilbert(unsigned n_weight) {
    const double f = factorial(n_weight);
    return std::sqrt(2.0) * k_constant(n_weight) *
           std::sqrt(1.0 + f * f * std::pow(4.0, 2.0 * n_weight));
}

double chain_constant_l1(unsigned n_weight) {
    return 2.0 * std::sqrt(2.0) * factorial(n_weight) * std::pow(4.0, n_weight) * k_constant(n_weight);
}

double upper_hilbert(int n, double r, double alpha) {
    check_grid_args(n, r);
    if (!(alpha <= 0.0)) throw std::invalid_argument("upper_hilbert: alpha <= 0 required");
    const double x = n / (1.0 - r);
    unsigned nw = 0;
    if (is_integer_weight(alpha, &nw)) {
        return chain_constant_hilbert(nw) * std::pow(x, nw + 0.5);
    }
    const ThetaSplit ts = theta_split(alpha);
    const double a = std::pow(chain_constant_hilbert(ts.upper_weight - 1), 1.0 - ts.theta) *
                     std::pow(chain_constant_hilbert(ts.upper_weight), ts.theta);
    return a * std::pow(x, 0.5 * (1.0 - 2.0 * alpha));
}

double upper_p(int n, double r, double p, double alpha) {
    check_grid_args(n, r);
    if (!(p >= 1.0)) throw std::invalid_argument("upper_p: p >= 1 required");
    if (!(alpha <= 0.0)) throw std::invalid_argument("upper_p: alpha <= 0 required");
    if (p == 2.0) return upper_hilbert(n, r, alpha);
    if (p < 2.0) {
        const double theta = 2.0 - 2.0 / p;  // 0 at p=1, 1 at p=2
        const double u1 = upper_l1(n, r, alpha);
        if (theta == 0.0) return u1;
        return std::pow(u1, 1.0 - theta) * std::pow(upper_hilbert(n, r, alpha), theta);
    }
    const double theta = std::isinf(p) ? 1.0 : 1.0 - 2.0 / p;  // 0 at p=2, 1 at p=inf
    const double uinf = upper_linf(n, r, alpha);
    if (theta == 1.0) return uinf;
    return std::pow(upper_hilbert(n, r, alpha), 1.0 - theta) * std::pow(uinf, theta);
}

int fejer_split(int n) {
    return (n % 2 == 0) ? n / 2 : (n + 1) / 2;
}

std::vector<double> fejer_pair_coefficients(int n) {
    if (n < 1) throw std::invalid_argument("fejer_pair_coefficients: n >= 1 required");
    const int m = fejer_split(n);
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        const double a = 1.0 - static_cast<double>(j) / (m + 1);
        const double b = 1.0 - std::abs(static_cast<double>(j - m)) / (m + 1);
        out[static_cast<std::size_t>(j)] = std::max(0.0, a) + std::max(0.0, b);
    }
    return out;
}

double fejer_kernel_mass_upper(int n) {
    static std::mutex mu;
    static std::map<int, double> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    const int m = fejer_split(n);
    // The untrimmed pair integrates against |1 + e^{i m theta}| exactly:
    // mass = 4/pi + 8/(3 pi (m+1)); trimming indices >= n adds at most the
    // dropped coefficient mass 3/(m+1).
    const double analytic = 4.0 / kPi + 8.0 / (3.0 * kPi * (m + 1)) + 3.0 / (m + 1.0);
    double result = analytic;
    if (analytic > 2.0) {
        // Small m: midpoint quadrature of the explicit kernel with a
        // Lipschitz error certificate.
        std::vector<double> hat(static_cast<std::size_t>(n + m), 0.0);  // index j+m
        for (int j = -m; j < n; ++j) {
            const double a = 1.0 - std::abs(static_cast<double>(j)) / (m + 1);
            const double b = 1.0 - std::abs(static_cast<double>(j - m)) / (m + 1);
            hat[static_cast<std::size_t>(j + m)] = std::max(0.0, a) + std::max(0.0, b);
        }
        double lipschitz = 0.0;
        for (int j = -m; j < n; ++j) lipschitz += std::abs(j) * hat[static_cast<std::size_t>(j + m)];
        const int nodes = 1 << 18;
        double acc = 0.0;
        for (int q = 0; q < nodes; ++q) {
            const double theta = 2.0 * kPi * (q + 0.5) / nodes;
            cplx val(0.0);
            for (int j = -m; j < n; ++j) {
                val += hat[static_cast<std::size_t>(j + m)] * std::polar(1.0, j * theta);
            }
            acc += std::abs(val);
        }
        const double quad = acc / nodes + lipschitz * kPi * kPi / nodes;
        result = std::min(analytic, quad);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[n] = result;
    return result;
}

double fejer_quotient_lower(const TaylorSeries& g, int n) {
    if (n < 1) throw std::invalid_argument("fejer_quotient_lower: n >= 1 required");
    const std::vector<double> hat = fejer_pair_coefficients(n);
    std::vector<cplx> h(static_cast<std::size_t>(n), cplx(0.0));
    for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(j)] = g.at(static_cast<std::size_t>(j)) * hat[static_cast<std::size_t>(j)];
    const TaylorSeries conv{std::move(h)};
    const double mass = std::max(2.0, fejer_kernel_mass_upper(n));
    return sup_norm(conv).refined / mass;
}

LowerCertificate lower_lp(int n, double p, double alpha) {
    if (n < 1) throw std::invalid_argument("lower_lp: n >= 1 required");
    if (!(p >= 1.0) || !(alpha <= 0.0)) throw std::invalid_argument("lower_lp: bad space");
    const int m = std::min(fejer_split(n), n - 1);
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) sum += std::pow(k + 1.0, -alpha);
    const double prefac = std::isinf(p) ? 1.0 : std::pow(static_cast<double>(n), -1.0 / p);
    LowerCertificate cert;
    cert.value = 0.5 * prefac * sum;
    std::vector<cplx> coef(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) coef[static_cast<std::size_t>(k)] = prefac * std::pow(k + 1.0, -alpha);
    cert.witness = TaylorSeries{std::move(coef)};
    cert.description = "dirichlet_partial_sum";
    return cert;
}

namespace {

// psi1 = (1 + r z) (1 + z + ... + z^{n-1}); all coefficients nonnegative.
TaylorSeries psi1_poly(int n, double r) {
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0));
    c[0] = cplx(1.0);
    for (int k = 1; k < n; ++k) c[static_cast<std::size_t>(k)] = cplx(1.0 + r);
    c[static_cast<std::size_t>(n)] = cplx(r);
    return TaylorSeries{std::move(c)};
}

}  // namespace

TaylorSeries onepoint_witness_poly(int n, double r, unsigned n_weight) {
    if (n < 1) throw std::invalid_argument("onepoint_witness_poly: n >= 1 required");
    if (n_weight < 1) throw std::invalid_argument("onepoint_witness_poly: N >= 1 required");
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("onepoint_witness_poly: r in [0,1)");
    TaylorSeries psi = pow(psi1_poly(n, r), n_weight);
    const double b = std::pow(static_cast<double>(n), -0.5 * n_weight);
    const double scale = b * std::pow(1.0 - r * r, -0.5 * n_weight);
    return cplx(scale) * psi;
}

LowerCertificate lower_onepoint_hilbert(int n, cplx lambda, unsigned n_weight) {
    if (n < 1) throw std::invalid_argument("lower_onepoint_hilbert: n >= 1 required");
    if (n_weight < 1) throw std::invalid_argument("lower_onepoint_hilbert: N >= 1 required");
    const double r = std::abs(lambda);
    if (!(r < 1.0)) throw std::invalid_argument("lower_onepoint_hilbert: |lambda| < 1 required");
    const double alpha = 0.5 * (1.0 - static_cast<double>(n_weight));
    const TaylorSeries psi = onepoint_witness_poly(n, r, n_weight);

    // Only indices that survive the truncated kernel (j <= min(m, n-1)) may
    // enter the certificate.
    const int m = std::min(fejer_split(n), n - 1);
    double partial = 0.0;
    for (int j = 0; j <= m && j < static_cast<int>(psi.size()); ++j) {
        partial += psi.coef[static_cast<std::size_t>(j)].real();
    }
    const double mass = std::max(2.0, fejer_kernel_mass_upper(n));
    const double numerator = partial / mass;

    // Witness Psi = psi composed with the involution b_{-r}; expand through
    // the rational form Num / (1 + r z)^{nN} and certify the norm tail by a
    // growth bound on |z| = rho.
    const std::size_t deg_psi = psi.size() - 1;
    TaylorSeries witness;
    double norm_upper = 0.0;
    if (r == 0.0) {
        // b_0(z) = -z: the witness is psi(-z), an exact polynomial.
        std::vector<cplx> c(psi.coef);
        for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
        witness = TaylorSeries{std::move(c)};
        norm_upper = weighted_norm(witness, SpaceSpec(2.0, alpha));
    } else {
        // Tail certificate: |witness^(m)| <= G rho^-m with G the Cauchy bound
        // of psi composed with the factor on |z| = rho < 1/r.
        const double rho = 0.5 * (1.0 + 1.0 / r);
        const double mb = (r + rho) / (1.0 - r * rho);
        double log_growth = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < psi.size(); ++j) {
            const double a = std::abs(psi.coef[j]);
            if (a == 0.0) continue;
            const double lg = std::log(a) + static_cast<double>(j) * std::log(mb);
            log_growth = (log_growth == -std::numeric_limits<double>::infinity())
                             ? lg
                             : std::max(log_growth, lg) + std::log1p(std::exp(-std::abs(lg - log_growth)));
        }
        const double log_rho = std::log(rho);
        const double target = std::log(1e-13);
        std::size_t d = 64;
        while (2.0 * log_growth - 2.0 * (static_cast<double>(d) + 1.0) * log_rho -
                   std::log1p(-1.0 / (rho * rho)) >
               2.0 * target) {
            d *= 2;
            if (d > (1u << 24)) throw std::runtime_error("lower_onepoint_hilbert: tail did not certify");
        }
        // Composition psi(b_{-r}(z)) by Horner in truncated series arithmetic;
        // every intermediate is bounded on the disc, so coefficients stay small.
        const TaylorSeries factor = blaschke_factor_series(cplx(-r), d);
        TaylorSeries acc{{psi.coef[deg_psi]}};
        for (std::size_t j = deg_psi; j-- > 0;) {
            acc = mul_trunc(acc, factor, d);
            acc = acc + TaylorSeries{{psi.coef[j]}};
        }
        witness = std::move(acc);
        double norm_sq = 0.0;
        for (std::size_t k = 0; k < witness.size(); ++k) {
            norm_sq += std::norm(witness.coef[k]) * std::pow(k + 1.0, 2.0 * alpha);
        }
        const double tail = std::exp(2.0 * log_growth - 2.0 * (static_cast<double>(d) + 1.0) * log_rho -
                                     std::log1p(-1.0 / (rho * rho)));
        norm_upper = std::sqrt(norm_sq + tail);
    }

    // Rotate the witness so its distinguished point moves from -r to lambda.
    if (lambda != cplx(-r) && r > 0.0) {
        const cplx phase = -lambda / r;  // |phase| = 1; witness(z) -> witness(conj(phase) z)
        cplx pk(1.0);
        for (std::size_t k = 0; k < witness.size(); ++k) {
            witness.coef[k] *= pk;
            pk *= std::conj(phase);
        }
    }

    LowerCertificate cert;
    cert.value = numerator / norm_upper;
    cert.witness = witness;
    char buf[64];
    std::snprintf(buf, sizeof buf, "fejer_onepoint(N=%u)", n_weight);
    cert.description = buf;
    return cert;
}

BoundReport bound_report(int n, double r, const SpaceSpec& x, const OracleFn& oracle) {
    check_grid_args(n, r);
    BoundReport rep;
    rep.n = n;
    rep.r = r;
    rep.space = x;

    LowerCertificate best = lower_lp(n, x.p, x.alpha);
    const double one_minus_two_alpha = 1.0 - 2.0 * x.alpha;
    const double rounded = std::round(one_minus_two_alpha);
    if (x.is_hilbert() && std::abs(one_minus_two_alpha - rounded) < 1e-12 && rounded >= 1.0) {
        const LowerCertificate lc =
            lower_onepoint_hilbert(n, cplx(r), static_cast<unsigned>(rounded));
        if (lc.value > best.value) best = lc;
    }
    rep.lower_certified = best.value;
    rep.lower_witness = best.description;

    if (x.is_hilbert()) {
        unsigned w = 0;
        if (is_integer_weight(x.alpha, &w)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "hilbert_chain(N=%u)", w);
            rep.upper_route = buf;
        } else {
            rep.upper_route = "hilbert_chain(interpolated)";
        }
        rep.upper_certified = upper_hilbert(n, r, x.alpha);
    } else {
        rep.upper_certified = upper_p(n, r, x.p, x.alpha);
        rep.upper_route = (x.p < 2.0) ? "riesz_thorin_p12" : "wiener_hardy_p2inf";
    }

    if (oracle) {
        rep.oracle_estimate = oracle(Sigma::one_point(cplx(r), n), x);
    }
    return rep;
}

double expected_exponent(const SpaceSpec& x) {
    if (x.p <= 2.0) return 0.5 * (1.0 - 2.0 * x.alpha);
    if (x.p_is_infinite()) return 1.5 - x.alpha;
    return 1.5 - x.alpha - 2.0 / x.p;
}

}  // namespace malmquist
