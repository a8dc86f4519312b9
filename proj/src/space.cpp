#include "malmquist/space.hpp"

#include <cmath>
#include <stdexcept>

namespace malmquist {

SpaceSpec::SpaceSpec(double p_, double alpha_) : p(p_), alpha(alpha_) {
    if (!(p >= 1.0)) throw std::invalid_argument("SpaceSpec: p must satisfy p >= 1");
    if (!(alpha <= 0.0)) throw std::invalid_argument("SpaceSpec: alpha must satisfy alpha <= 0");
}

double SpaceSpec::dual_p() const {
    if (p_is_infinite()) return 1.0;
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

double weighted_norm(const TaylorSeries& f, const SpaceSpec& x) {
    if (!f.is_finite()) throw std::invalid_argument("weighted_norm: non-finite coefficients");
    if (x.p_is_infinite()) {
        double best = 0.0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            best = std::max(best, std::abs(f.coef[k]) * std::pow(k + 1.0, x.alpha));
        }
        return best;
    }
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double a = std::abs(f.coef[k]);
        if (a == 0.0) continue;
        s += std::pow(a, x.p) * std::pow(k + 1.0, x.p * x.alpha);
    }
    return std::pow(s, 1.0 / x.p);
}

cplx weighted_pairing(const TaylorSeries& f, const TaylorSeries& g, double alpha) {
    cplx acc(0.0);
    const std::size_t m = std::min(f.size(), g.size());
    for (std::size_t k = 0; k < m; ++k) {
        acc += f.coef[k] * std::conj(g.coef[k]) * std::pow(k + 1.0, 2.0 * alpha);
    }
    return acc;
}

cplx cauchy_pairing(const TaylorSeries& h, const TaylorSeries& g) {
    cplx acc(0.0);
    const std::size_t m = std::min(h.size(), g.size());
    for (std::size_t k = 0; k < m; ++k) acc += h.coef[k] * std::conj(g.coef[k]);
    return acc;
}

double h2_norm(const TaylorSeries& f) {
    double s = 0.0;
    for (const cplx& c : f.coef) s += std::norm(c);
    return std::sqrt(s);
}

namespace {

// sum_{k > K} (k+1)^q s^k bounded by a geometric majorant: once the term
// ratio s*(1 + 1/(k+2))^q stays below 1 the tail is term(K+1)/(1 - ratio).
double power_weight_tail(double s, double q, std::size_t K) {
    const double ratio = s * std::pow(1.0 + 1.0 / (static_cast<double>(K) + 2.0), q);
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    const double term = std::pow(static_cast<double>(K) + 2.0, q) * std::pow(s, static_cast<double>(K) + 1);
    return term / (1.0 - ratio);
}

}  // namespace

double eval_functional_norm(double t, const SpaceSpec& x) {
    if (!(t >= 0.0 && t < 1.0)) {
        throw std::domain_error("eval_functional_norm: t must lie in [0,1)");
    }
    if (t == 0.0) return 1.0;
    const double q = -x.alpha;  // weight exponent (k+1)^q, q >= 0
    const double pd = x.dual_p();
    constexpr double kTailTol = 1e-12;
    if (std::isinf(pd)) {
        // p = 1: sup_k t^k (k+1)^q. Terms decrease for all k once
        // t*(1+1/(k+1))^q < 1; scan past that index.
        double best = 0.0;
        double tk = 1.0;
        for (std::size_t k = 0;; ++k) {
            best = std::max(best, tk * std::pow(k + 1.0, q));
            tk *= t;
            if (t * std::pow(1.0 + 1.0 / (k + 2.0), q) < 1.0 && tk * std::pow(k + 2.0, q) < best) break;
        }
        return best;
    }
    // Finite dual exponent: sum_k t^(pd k) (k+1)^(pd q).
    const double s = std::pow(t, pd);
    const double w = pd * q;
    double sum = 0.0;
    double sk = 1.0;
    std::size_t k = 0;
    for (;; ++k) {
        sum += sk * std::pow(k + 1.0, w);
        sk *= s;
        if (k >= 8) {
            const double tail = power_weight_tail(s, w, k);
            if (tail < kTailTol) break;
        }
        if (k > 100000000) throw std::runtime_error("eval_functional_norm: series did not certify");
    }
    return std::pow(sum, 1.0 / pd);
}

TaylorSeries reproducing_kernel(cplx lambda, const SpaceSpec& x, std::size_t d) {
    if (!x.is_hilbert()) {
        throw std::invalid_argument("reproducing_kernel: only defined for p = 2");
    }
    if (std::abs(lambda) >= 1.0) {
        throw std::domain_error("reproducing_kernel: |lambda| < 1 required");
    }
    std::vector<cplx> c(d + 1);
    cplx lk(1.0);
    const cplx lbar = std::conj(lambda);
    for (std::size_t k = 0; k <= d; ++k) {
        c[k] = lk * std::pow(k + 1.0, -2.0 * x.alpha);
        lk *= lbar;
    }
    return TaylorSeries{std::move(c)};
}

double binomial_norm(const TaylorSeries& f, unsigned n_power) {
    if (n_power < 1) throw std::invalid_argument("binomial_norm: N >= 1 required");
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double w = binomial(static_cast<unsigned>(k) + n_power - 1, static_cast<unsigned>(k));
        s += std::norm(f.coef[k]) / w;
    }
    return std::sqrt(s);
}

double alpha_to_beta(double alpha) {
    if (!(alpha < 0.0)) throw std::domain_error("alpha_to_beta: alpha < 0 required (beta = -1 is excluded)");
    return -2.0 * alpha - 1.0;
}

double beta_to_alpha(double beta) {
    if (!(beta > -1.0)) throw std::domain_error("beta_to_alpha: beta > -1 required");
    return -(beta + 1.0) / 2.0;
}

double binomial(unsigned n, unsigned k) {
    if (k > n) return 0.0;
    if (k > n - k) k = n - k;
    double acc = 1.0;
    for (unsigned j = 1; j <= k; ++j) {
        acc = acc * static_cast<double>(n - k + j) / static_cast<double>(j);
    }
    return acc;
}

}  // namespace malmquist
