#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace malmquist {

using cplx = std::complex<double>;

/// Finite complex coefficient vector representing an analytic polynomial or a
/// truncated power series; coef[k] multiplies z^k. Trailing zeros are allowed.
struct TaylorSeries {
    std::vector<cplx> coef;

    TaylorSeries() = default;
    explicit TaylorSeries(std::vector<cplx> c) : coef(std::move(c)) {}

    static TaylorSeries zero() { return TaylorSeries{{cplx(0.0)}}; }
    static TaylorSeries one() { return TaylorSeries{{cplx(1.0)}}; }
    static TaylorSeries monomial(std::size_t k, cplx a = cplx(1.0));

    std::size_t size() const { return coef.size(); }

    /// Largest index with a nonzero coefficient; -1 for the zero series.
    long degree() const;
    bool is_zero() const { return degree() < 0; }

    /// True when every coefficient is a finite number (no NaN/Inf).
    bool is_finite() const;

    cplx at(std::size_t k) const { return k < coef.size() ? coef[k] : cplx(0.0); }

    cplx eval(cplx z) const;

    /// Drops coefficients above max_deg (keeps indices 0..max_deg).
    TaylorSeries truncated(std::size_t max_deg) const;

    /// Removes trailing zero coefficients (never shrinks below one entry).
    void trim();
};

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator*(cplx s, const TaylorSeries& f);

/// Full convolution product.
TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b);

/// Convolution truncated at degree max_deg; coefficients 0..max_deg are exact.
TaylorSeries mul_trunc(const TaylorSeries& a, const TaylorSeries& b, std::size_t max_deg);

/// f^n, full degree (n >= 0).
TaylorSeries pow(const TaylorSeries& f, unsigned n);

/// k-th derivative.
TaylorSeries derivative(const TaylorSeries& f, unsigned k = 1);

/// Coefficients of h -> f(a + h); entry j equals f^(j)(a)/j!.
TaylorSeries taylor_shift(const TaylorSeries& f, cplx a);

struct DivisionResult {
    TaylorSeries quotient;
    TaylorSeries remainder;  // degree < degree(divisor)
};

/// Polynomial long division; divisor must be nonzero.
DivisionResult divide(const TaylorSeries& f, const TaylorSeries& divisor);

/// Power series 1/den to degree max_deg; requires den(0) != 0.
TaylorSeries series_inverse(const TaylorSeries& den, std::size_t max_deg);

/// Power series num/den to degree max_deg; requires den(0) != 0. Computed by
/// the forward linear recurrence, stable when the zeros of den lie outside
/// the closed unit disc.
TaylorSeries series_divide(const TaylorSeries& num, const TaylorSeries& den,
                           std::size_t max_deg);

/// Monic polynomial prod (z - roots[j]).
TaylorSeries poly_from_roots(const std::vector<cplx>& roots);

}  // namespace malmquist
