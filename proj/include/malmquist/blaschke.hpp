#pragma once

#include <string>
#include <vector>

#include "malmquist/taylor.hpp"

namespace malmquist {

struct SigmaPoint {
    cplx lambda;
    int mult = 1;
};

/// Finite multiset of disc points with multiplicities. The expanded view
/// lists the points with repetitions in insertion order, multiplicities
/// consecutive; every quantity used in bounds is order invariant, the
/// Malmquist basis itself is not.
class Sigma {
  public:
    explicit Sigma(std::vector<SigmaPoint> points);

    static Sigma single(cplx lambda, int mult = 1);
    /// One-point set of multiplicity n at lambda (the sigma_{n,lambda} family).
    static Sigma one_point(cplx lambda, int n) { return single(lambda, n); }

    const std::vector<SigmaPoint>& points() const { return points_; }
    const std::vector<cplx>& expanded() const { return expanded_; }

    int n() const { return static_cast<int>(expanded_.size()); }
    double r() const { return r_; }

    Sigma permuted(const std::vector<int>& point_order) const;

    /// Shorthand grammar: semicolon separated "re+imi^mult" tokens, e.g.
    /// "0.5^3;-0.2+0.1i" (mult defaults to 1, unicode minus accepted).
    static Sigma parse_shorthand(const std::string& text);
    std::string to_shorthand() const;

  private:
    std::vector<SigmaPoint> points_;
    std::vector<cplx> expanded_;
    double r_ = 0.0;
};

/// b_lambda(z) = (lambda - z) / (1 - conj(lambda) z).
cplx blaschke_factor(cplx lambda, cplx z);

/// B_sigma(z) = prod over the expanded points.
cplx blaschke_product(const Sigma& sigma, cplx z);

/// Power series of b_lambda to degree d (coefficients are exact).
TaylorSeries blaschke_factor_series(cplx lambda, std::size_t d);

}  // namespace malmquist
