#pragma once

#include <limits>

#include "malmquist/taylor.hpp"

namespace malmquist {

/// The weighted coefficient space l_a^p(alpha) with norm
/// (sum_k |f^(k)|^p (k+1)^(p*alpha))^(1/p); p = infinity takes the sup of
/// |f^(k)|(k+1)^alpha. Only alpha <= 0 is admitted; alpha = 0, p = 2 is the
/// Hardy space H^2.
struct SpaceSpec {
    double p = 2.0;
    double alpha = 0.0;

    SpaceSpec() = default;
    SpaceSpec(double p_, double alpha_);

    bool is_hilbert() const { return p == 2.0; }
    bool p_is_infinite() const { return p == std::numeric_limits<double>::infinity(); }

    /// Hoelder conjugate exponent.
    double dual_p() const;
};

double weighted_norm(const TaylorSeries& f, const SpaceSpec& x);

/// Weight-space scalar product (f,g)_alpha = sum f^(k) conj(g^(k)) (k+1)^(2 alpha)
/// (the Hilbert-space product for p = 2).
cplx weighted_pairing(const TaylorSeries& f, const TaylorSeries& g, double alpha);

/// Cauchy sesquilinear form <h,g> = sum h^(k) conj(g^(k)).
cplx cauchy_pairing(const TaylorSeries& h, const TaylorSeries& g);

/// H^2 norm (all weights one).
double h2_norm(const TaylorSeries& f);

/// Norm of the evaluation functional f -> f(t) on X, for t in [0,1). The
/// defining series is summed with a rigorous geometric tail bound below
/// 1e-12. Throws std::domain_error for t >= 1.
double eval_functional_norm(double t, const SpaceSpec& x);

/// Reproducing kernel of l_a^2(alpha) at lambda, truncated at degree d:
/// coefficients conj(lambda)^k (k+1)^(-2 alpha). Requires p = 2.
TaylorSeries reproducing_kernel(cplx lambda, const SpaceSpec& x, std::size_t d);

/// Norm of the RKHS H((1 - conj(lambda) z)^-N): weights 1/binom(k+N-1, k).
double binomial_norm(const TaylorSeries& f, unsigned n_power);

/// beta = -2 alpha - 1 (weighted Bergman exponent); requires alpha < 0.
double alpha_to_beta(double alpha);
double beta_to_alpha(double beta);

/// Exact binomial coefficient as a double (n small in this library).
double binomial(unsigned n, unsigned k);

}  // namespace malmquist
