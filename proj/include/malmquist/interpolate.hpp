#pragma once

#include <functional>

#include "malmquist/model_space.hpp"
#include "malmquist/space.hpp"

namespace malmquist {

/// The linear bounded interpolant Phi(f) = sum_k <f, e_k> e_k. The pairing is
/// exact because f is a polynomial and the basis expansion up to deg f is
/// exact.
MalmquistRep phi(const TaylorSeries& f, const std::shared_ptr<const MalmquistBasis>& basis);
MalmquistRep phi(const TaylorSeries& f, const Sigma& sigma);

struct TraceMatchResult {
    bool pass = false;
    double max_defect = 0.0;
};

/// Compares the Hermite data (derivatives 0..m-1, scaled by 1/j!) of f and g
/// at every point of sigma. g is differentiated through its rational form.
TraceMatchResult trace_match(const TaylorSeries& f, const MalmquistRep& g, const Sigma& sigma,
                             double tol = 1e-8);

struct SupNormEstimate {
    double grid_max = 0.0;      // certified lower bound for the sup
    double refined = 0.0;       // grid max improved by golden-section steps
    double arg_theta = 0.0;     // angle of the best sample
    int grid_size = 0;
};

/// Sup of |g| over the unit circle: uniform grid scan plus golden-section
/// refinement in the two arcs adjacent to the best node. Every reported value
/// is the modulus at an actually evaluated point, hence a lower bound for the
/// true sup.
SupNormEstimate sup_norm(const std::function<cplx(cplx)>& g, int samples);

SupNormEstimate sup_norm(const MalmquistRep& g);
SupNormEstimate sup_norm(const TaylorSeries& f);

/// ||Phi(f)||_inf / ||f||_X, a feasible-interpolant witness for the upper
/// bound chains.
double interpolant_norm_ratio(const TaylorSeries& f, const Sigma& sigma, const SpaceSpec& x);

}  // namespace malmquist
