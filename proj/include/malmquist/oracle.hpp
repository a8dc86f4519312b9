#pragma once

#include <cstdint>
#include <optional>

#include "malmquist/bounds.hpp"
#include "malmquist/linalg.hpp"
#include "malmquist/model_space.hpp"
#include "malmquist/space.hpp"

namespace malmquist {

/// Hermite data of f along the expanded points of sigma: entry l carries
/// f^(j)(lambda)/j! where j is the repetition index of position l.
std::vector<cplx> trace_of(const TaylorSeries& f, const Sigma& sigma);

/// Newton coefficients of the Hermite interpolation polynomial through the
/// trace on the expanded (confluent) nodes.
struct HermitePoly {
    std::vector<cplx> newton_coef;
    std::vector<cplx> nodes;
    bool conditioning_warning = false;
    double min_distinct_gap = 0.0;

    TaylorSeries to_taylor() const;
    cplx eval(cplx z) const;
    linalg::Matrix eval_matrix(const linalg::Matrix& m) const;
};

HermitePoly hermite_interpolant(const Sigma& sigma, const std::vector<cplx>& trace);

struct MinNormResult {
    double value = 0.0;
    bool conditioning_warning = false;
    double trace_residual = 0.0;  // defect of the rebuilt polynomial's trace
};

/// inf{ ||g||_inf : g matches the trace on sigma } as the operator norm of
/// the Hermite polynomial evaluated on the compressed shift. Pass a
/// precomputed shift matrix to amortize repeated calls.
MinNormResult min_norm(const Sigma& sigma, const std::vector<cplx>& trace,
                       const linalg::Matrix* shift = nullptr);

/// Classical positive-semidefiniteness bisection for distinct nodes; an
/// independent cross-check of min_norm. Absolute tolerance on the returned
/// infimum.
double pick_min_norm(const Sigma& sigma, const std::vector<cplx>& values, double tol = 1e-9);

struct OracleOptions {
    int restarts = 16;
    int max_iters = 200;
    std::uint64_t seed = 1;
    double convergence_tol = 1e-10;
};

struct InterpEstimate {
    double value = 0.0;        // certified achievable value (a lower bound)
    TaylorSeries witness;      // near-unit-norm witness in X
    double sensitivity_delta = 0.0;  // degree-cap sensitivity (p != 2 only)
    int degree_cap = 0;
};

/// Numerical estimate of c(sigma, X, H^inf) by alternating maximization of
/// ||f(M)|| over the unit ball of X; every iterate is feasible so the value
/// is always a valid lower bound. For p = 2 the search space is reduced
/// exactly to the span of the trace-functional representers.
InterpEstimate interp_constant_estimate(const Sigma& sigma, const SpaceSpec& x,
                                        const OracleOptions& opt = {});

struct VonNeumannReport {
    int trials = 0;
    double min_norm_value = 0.0;
    double max_contraction_value = 0.0;  // best ||f(A)|| over sampled A
    double max_excess = 0.0;             // max(||f(A)|| - min_norm), <= tol when pass
    double model_gap = 0.0;              // | direct-power ||f(M)|| - min_norm |
    double witness_gap = 0.0;            // min_norm - best contraction value
    bool pass = false;
};

/// Samples random upper-triangular contractions with spectrum in sigma and
/// checks ||f(A)|| <= min_norm(sigma, f|sigma) (+tol); separately confirms
/// the model operator attains the bound.
VonNeumannReport von_neumann_check(const Sigma& sigma, const TaylorSeries& f, int trials,
                                   std::uint64_t seed, double tol = 1e-8);

/// Oracle callback for bound_report wiring.
OracleFn make_oracle(const OracleOptions& opt = {});

}  // namespace malmquist
