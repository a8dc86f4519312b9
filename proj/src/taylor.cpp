#include "malmquist/taylor.hpp"

#include <cmath>
#include <stdexcept>

namespace malmquist {

TaylorSeries TaylorSeries::monomial(std::size_t k, cplx a) {
    std::vector<cplx> c(k + 1, cplx(0.0));
    c[k] = a;
    return TaylorSeries{std::move(c)};
}

long TaylorSeries::degree() const {
    for (std::size_t k = coef.size(); k-- > 0;) {
        if (coef[k] != cplx(0.0)) return static_cast<long>(k);
    }
    return -1;
}

bool TaylorSeries::is_finite() const {
    for (const cplx& c : coef) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

cplx TaylorSeries::eval(cplx z) const {
    cplx acc(0.0);
    for (std::size_t k = coef.size(); k-- > 0;) acc = acc * z + coef[k];
    return acc;
}

TaylorSeries TaylorSeries::truncated(std::size_t max_deg) const {
    std::vector<cplx> c(coef.begin(),
                        coef.begin() + static_cast<long>(std::min(coef.size(), max_deg + 1)));
    if (c.empty()) c.push_back(cplx(0.0));
    return TaylorSeries{std::move(c)};
}

void TaylorSeries::trim() {
    while (coef.size() > 1 && coef.back() == cplx(0.0)) coef.pop_back();
    if (coef.empty()) coef.push_back(cplx(0.0));
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
    std::vector<cplx> c(std::max(a.size(), b.size()), cplx(0.0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.at(k) + b.at(k);
    return TaylorSeries{std::move(c)};
}

TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
    std::vector<cplx> c(std::max(a.size(), b.size()), cplx(0.0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.at(k) - b.at(k);
    return TaylorSeries{std::move(c)};
}

TaylorSeries operator*(cplx s, const TaylorSeries& f) {
    std::vector<cplx> c(f.coef);
    for (cplx& x : c) x *= s;
    return TaylorSeries{std::move(c)};
}

TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b) {
    if (a.coef.empty() || b.coef.empty()) return TaylorSeries::zero();
    std::vector<cplx> c(a.size() + b.size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coef[i] == cplx(0.0)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.coef[i] * b.coef[j];
    }
    return TaylorSeries{std::move(c)};
}

TaylorSeries mul_trunc(const TaylorSeries& a, const TaylorSeries& b, std::size_t max_deg) {
    std::vector<cplx> c(std::min(max_deg + 1, a.size() + b.size() - 1), cplx(0.0));
    for (std::size_t i = 0; i < a.size() && i <= max_deg; ++i) {
        if (a.coef[i] == cplx(0.0)) continue;
        const std::size_t jmax = std::min(b.size(), max_deg - i + 1);
        for (std::size_t j = 0; j < jmax; ++j) c[i + j] += a.coef[i] * b.coef[j];
    }
    if (c.empty()) c.push_back(cplx(0.0));
    return TaylorSeries{std::move(c)};
}

TaylorSeries pow(const TaylorSeries& f, unsigned n) {
    TaylorSeries acc = TaylorSeries::one();
    for (unsigned i = 0; i < n; ++i) acc = mul(acc, f);
    return acc;
}

TaylorSeries derivative(const TaylorSeries& f, unsigned k) {
    TaylorSeries g = f;
    for (unsigned pass = 0; pass < k; ++pass) {
        if (g.size() <= 1) return TaylorSeries::zero();
        std::vector<cplx> c(g.size() - 1);
        for (std::size_t m = 1; m < g.size(); ++m) c[m - 1] = static_cast<double>(m) * g.coef[m];
        g = TaylorSeries{std::move(c)};
    }
    return g;
}

TaylorSeries taylor_shift(const TaylorSeries& f, cplx a) {
    // Repeated synthetic division by (z - a); after pass j, entry j holds
    // f^(j)(a)/j!.
    std::vector<cplx> c(f.coef);
    if (c.empty()) c.push_back(cplx(0.0));
    const long n = static_cast<long>(c.size());
    for (long j = 0; j < n; ++j) {
        for (long k = n - 2; k >= j; --k) {
            c[static_cast<std::size_t>(k)] += a * c[static_cast<std::size_t>(k + 1)];
        }
    }
    return TaylorSeries{std::move(c)};
}

DivisionResult divide(const TaylorSeries& f, const TaylorSeries& divisor) {
    const long dd = divisor.degree();
    if (dd < 0) throw std::invalid_argument("divide: zero divisor");
    std::vector<cplx> rem(f.coef);
    if (rem.empty()) rem.push_back(cplx(0.0));
    const long df = static_cast<long>(rem.size()) - 1;
    if (df < dd) {
        return {TaylorSeries::zero(), TaylorSeries{std::move(rem)}};
    }
    std::vector<cplx> quot(static_cast<std::size_t>(df - dd) + 1, cplx(0.0));
    const cplx lead = divisor.coef[static_cast<std::size_t>(dd)];
    for (long k = df; k >= dd; --k) {
        const cplx q = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - dd)] = q;
        if (q == cplx(0.0)) continue;
        for (long j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coef[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(std::max<long>(dd, 1)));
    TaylorSeries r{std::move(rem)};
    return {TaylorSeries{std::move(quot)}, std::move(r)};
}

TaylorSeries series_inverse(const TaylorSeries& den, std::size_t max_deg) {
    return series_divide(TaylorSeries::one(), den, max_deg);
}

TaylorSeries series_divide(const TaylorSeries& num, const TaylorSeries& den,
                           std::size_t max_deg) {
    if (den.coef.empty() || den.coef[0] == cplx(0.0)) {
        throw std::invalid_argument("series_divide: denominator vanishes at 0");
    }
    std::vector<cplx> s(max_deg + 1, cplx(0.0));
    const cplx d0 = den.coef[0];
    for (std::size_t m = 0; m <= max_deg; ++m) {
        cplx acc = num.at(m);
        const std::size_t jmax = std::min(m, den.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) acc -= den.coef[j] * s[m - j];
        s[m] = acc / d0;
    }
    return TaylorSeries{std::move(s)};
}

TaylorSeries poly_from_roots(const std::vector<cplx>& roots) {
    TaylorSeries p = TaylorSeries::one();
    for (cplx root : roots) {
        p = mul(p, TaylorSeries{{-root, cplx(1.0)}});
    }
    return p;
}

}  // namespace malmquist
