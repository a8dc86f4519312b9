#pragma once

#include <functional>
#include <optional>
#include <string>

#include "malmquist/blaschke.hpp"
#include "malmquist/space.hpp"

namespace malmquist {

/// K_N = max{N^N, (N+1)^N / N!}; K_0 = 1 (the derivative-free chain).
double k_constant(unsigned n_weight);

/// A(N) = sqrt(2) K_N (1 + (N!)^2 4^(2N))^(1/2), the Hilbert chain constant.
double chain_constant_hilbert(unsigned n_weight);

/// A1(N) = 2 sqrt(2) N! 4^N K_N, the p = 1 chain constant.
double chain_constant_l1(unsigned n_weight);

/// Certified upper bound for C_{n,r}(l_a^2(alpha), H^inf): the projection /
/// derivative chain at integer -alpha, combined by the exact-interpolation
/// exponent product for fractional alpha. Growth (n/(1-r))^((1-2 alpha)/2).
double upper_hilbert(int n, double r, double alpha);

/// Certified upper bound for C_{n,r}(l_a^p(alpha), H^inf), p in [1, inf]:
/// p in [1,2] combines the p=1 and p=2 chains (Riesz-Thorin), p in [2,inf]
/// combines the p=2 chain with the Wiener-algebra/Hardy-inequality chain.
double upper_p(int n, double r, double p, double alpha);

struct LowerCertificate {
    double value = 0.0;
    TaylorSeries witness;      // unit-norm (or near) element of X realizing it
    std::string description;
};

/// The positive-coefficient quotient witness polynomial
/// psi = n^(-N/2) (1-r^2)^(-N/2) ((1 + r z)(1 + z + ... + z^(n-1)))^N,
/// of degree n N, whose coefficient sum is n^(-N/2) ((1+r) n)^N (1-r^2)^(-N/2).
TaylorSeries onepoint_witness_poly(int n, double r, unsigned n_weight);

/// Lower bound for c(sigma_{n,lambda}, l_a^2((1-N)/2), H^inf) via the
/// positive-coefficient witness psi = b (1-r^2)^(-N/2) psi1^N and the
/// Fejer-pair quotient certificate; N = 1 - 2 alpha must be a positive
/// integer. The witness norm is computed directly (certified tail) instead
/// of going through unspecified norm-equivalence constants.
LowerCertificate lower_onepoint_hilbert(int n, cplx lambda, unsigned n_weight);

/// Lower bound ~ (1/2) n^(-1/p) sum_{k<=min(m,n-1)} (k+1)^(-alpha) for
/// C_{n,r}(l_a^p(alpha), H^inf), valid for every r >= 0 (witness is the
/// weighted Dirichlet polynomial at the origin).
LowerCertificate lower_lp(int n, double p, double alpha);

/// Index split of the quotient certificate: 2m = n (n even), 2m-1 = n (odd).
int fejer_split(int n);

/// Nonnegative analytic-side coefficients of the pair-of-Fejer-kernels test
/// kernel, zeroed at indices >= n so only the first n Taylor coefficients of
/// the argument ever enter a quotient-norm certificate.
std::vector<double> fejer_pair_coefficients(int n);

/// Certified upper bound for the L^1 mass of the (index-truncated) test
/// kernel. The quotient certificates divide by max(2, this).
double fejer_kernel_mass_upper(int n);

/// Certified lower bound for ||g||_{H^inf / z^n H^inf}: convolve with the
/// test kernel (only coefficients 0..n-1 of g enter) and take the sup of the
/// resulting polynomial over the circle, divided by the kernel mass bound.
double fejer_quotient_lower(const TaylorSeries& g, int n);

/// One bracketed experiment row: certified lower bound, optional oracle
/// estimate, certified upper bound for the interpolation constant at
/// (n, r, X), with provenance strings.
struct BoundReport {
    int n = 1;
    double r = 0.0;
    SpaceSpec space;
    double lower_certified = 0.0;
    std::string lower_witness;
    std::optional<double> oracle_estimate;
    double upper_certified = 0.0;
    std::string upper_route;
};

/// Oracle callback: estimate of c(sigma, X, H^inf); wired in by callers so
/// the bound assembly itself stays free of solver dependencies.
using OracleFn = std::function<double(const Sigma&, const SpaceSpec&)>;

BoundReport bound_report(int n, double r, const SpaceSpec& x, const OracleFn& oracle = {});

/// Upper-chain growth exponent of log C vs log(n/(1-r)) for the space.
double expected_exponent(const SpaceSpec& x);

}  // namespace malmquist
