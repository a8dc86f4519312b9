#pragma once

#include "malmquist/model_space.hpp"

namespace malmquist {

/// ||g^(k)||_{H^2} for g in K_B, from the Taylor expansion of g with a
/// certified geometric tail below `tol` (Cauchy growth bound on a circle of
/// radius between 1 and 1/r).
double h2_derivative_norm(const MalmquistRep& g, unsigned k, double tol = 1e-10);

struct RatioReport {
    double ratio = 0.0;
    double bound = 0.0;
    bool pass = false;
    double margin() const { return bound - ratio; }
};

/// ||g'|| / ||g|| against the model-space Bernstein bound 3 n/(1-r).
RatioReport check_dyakonov(const Sigma& sigma, const MalmquistRep& g);

/// ||g^(k)|| / ||g|| against k! 4^k (n/(1-r))^k.
RatioReport check_higher(const Sigma& sigma, const MalmquistRep& g, unsigned k);

}  // namespace malmquist
