#include "malmquist/bernstein.hpp"

#include <cmath>
#include <stdexcept>

namespace malmquist {

namespace {

// Degree after which the squared-tail majorant sum_{m>D} G^2 m^{2k} rho^{-2m}
// certifies below tol2 (all in logs to dodge overflow).
std::size_t certified_degree(double log_growth, double rho, unsigned k, double tol2,
                             std::size_t d_min) {
    const double log_rho = std::log(rho);
    const double log_tol = std::log(tol2);
    std::size_t d = std::max<std::size_t>(d_min, 16);
    for (int guard = 0; guard < 64; ++guard, d *= 2) {
        const double q = std::exp(2.0 * k * std::log1p(1.0 / static_cast<double>(d)) - 2.0 * log_rho);
        if (q >= 1.0) continue;
        const double m = static_cast<double>(d + 1);
        const double log_tail = 2.0 * log_growth + 2.0 * k * std::log(m) - 2.0 * m * log_rho - std::log1p(-q);
        if (log_tail < log_tol) return d;
    }
    throw std::runtime_error("h2_derivative_norm: tail did not certify");
}

}  // namespace

double h2_derivative_norm(const MalmquistRep& g, unsigned k, double tol) {
    if (g.h2_norm() == 0.0) return 0.0;
    if (k == 0) return g.h2_norm();  // Parseval, exact
    const Sigma& sigma = g.sigma();
    const double r = sigma.r();
    std::size_t d;
    if (r == 0.0) {
        d = static_cast<std::size_t>(sigma.n());  // g is a polynomial of degree <= n-1
    } else {
        const double rho = 0.5 * (1.0 + 1.0 / r);
        d = certified_degree(g.log_growth_bound(rho), rho, k, tol * tol,
                             static_cast<std::size_t>(sigma.n()) + 16);
    }
    const TaylorSeries t = g.taylor(d);
    double s = 0.0;
    for (std::size_t m = k; m < t.size(); ++m) {
        double fall = 1.0;
        for (unsigned j = 0; j < k; ++j) fall *= static_cast<double>(m - j);
        s += fall * fall * std::norm(t.coef[m]);
    }
    return std::sqrt(s);
}

RatioReport check_dyakonov(const Sigma& sigma, const MalmquistRep& g) {
    const double ng = g.h2_norm();
    if (ng == 0.0) throw std::invalid_argument("check_dyakonov: zero function");
    RatioReport rep;
    rep.ratio = h2_derivative_norm(g, 1) / ng;
    rep.bound = 3.0 * sigma.n() / (1.0 - sigma.r());
    rep.pass = rep.ratio <= rep.bound;
    return rep;
}

RatioReport check_higher(const Sigma& sigma, const MalmquistRep& g, unsigned k) {
    const double ng = g.h2_norm();
    if (ng == 0.0) throw std::invalid_argument("check_higher: zero function");
    RatioReport rep;
    rep.ratio = h2_derivative_norm(g, k) / ng;
    double fact = 1.0;
    for (unsigned j = 2; j <= k; ++j) fact *= j;
    rep.bound = fact * std::pow(4.0, k) * std::pow(sigma.n() / (1.0 - sigma.r()), k);
    rep.pass = rep.ratio <= rep.bound;
    return rep;
}

}  // namespace malmquist
