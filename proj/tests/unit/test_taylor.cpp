#include <doctest.h>

#include "malmquist/rng.hpp"
#include "malmquist/taylor.hpp"

using namespace malmquist;

TEST_CASE("degree and trailing zeros") {
    TaylorSeries f{{cplx(1.0), cplx(2.0), cplx(0.0)}};
    CHECK(f.degree() == 1);
    CHECK(TaylorSeries::zero().degree() == -1);
    CHECK(TaylorSeries::zero().is_zero());
    f.trim();
    CHECK(f.size() == 2);
}

TEST_CASE("horner evaluation") {
    const TaylorSeries f{{cplx(1.0), cplx(-2.0), cplx(3.0)}};
    const cplx z(0.5, 0.25);
    CHECK(std::abs(f.eval(z) - (cplx(1.0) - 2.0 * z + 3.0 * z * z)) < 1e-15);
}

TEST_CASE("convolution against naive expansion") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> a(1 + rng.uniform_index(8)), b(1 + rng.uniform_index(8));
        for (cplx& c : a) c = rng.complex_gaussian();
        for (cplx& c : b) c = rng.complex_gaussian();
        const TaylorSeries fa{a}, fb{b};
        const TaylorSeries prod = mul(fa, fb);
        const cplx z = rng.in_disc(0.8);
        CHECK(std::abs(prod.eval(z) - fa.eval(z) * fb.eval(z)) < 1e-12);
        const TaylorSeries trunc = mul_trunc(fa, fb, 3);
        for (std::size_t k = 0; k < trunc.size(); ++k) CHECK(trunc.at(k) == prod.at(k));
    }
}

TEST_CASE("taylor shift reproduces derivatives") {
    const TaylorSeries f{{cplx(0.0), cplx(0.0), cplx(1.0)}};  // z^2
    const TaylorSeries sh = taylor_shift(f, cplx(1.0));
    CHECK(std::abs(sh.at(0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(sh.at(1) - cplx(2.0)) < 1e-15);
    CHECK(std::abs(sh.at(2) - cplx(1.0)) < 1e-15);

    Rng rng(11);
    const TaylorSeries g = [&] {
        std::vector<cplx> c(12);
        for (cplx& x : c) x = rng.complex_gaussian();
        return TaylorSeries{c};
    }();
    const cplx a = rng.in_disc(0.7);
    const TaylorSeries shg = taylor_shift(g, a);
    // entry j equals g^(j)(a)/j!: check orders 0..2 against direct formulas.
    CHECK(std::abs(shg.at(0) - g.eval(a)) < 1e-12);
    CHECK(std::abs(shg.at(1) - derivative(g).eval(a)) < 1e-12);
    CHECK(std::abs(shg.at(2) - derivative(g, 2).eval(a) / 2.0) < 1e-12);
}

TEST_CASE("polynomial division identity") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> fc(3 + rng.uniform_index(10)), dc(1 + rng.uniform_index(3));
        for (cplx& c : fc) c = rng.complex_gaussian();
        for (cplx& c : dc) c = rng.complex_gaussian();
        dc.push_back(cplx(1.0));  // monic-ish divisor, never zero
        const TaylorSeries f{fc}, d{dc};
        const DivisionResult qr = divide(f, d);
        const TaylorSeries back = mul(qr.quotient, d) + qr.remainder;
        for (std::size_t k = 0; k < f.size(); ++k) {
            CHECK(std::abs(back.at(k) - f.at(k)) < 1e-10);
        }
        CHECK(qr.remainder.degree() < d.degree());
    }
}

TEST_CASE("series division inverts multiplication") {
    Rng rng(17);
    std::vector<cplx> dc{cplx(1.0)};
    for (int k = 0; k < 4; ++k) dc.push_back(0.3 * rng.complex_gaussian());
    const TaylorSeries den{dc};
    std::vector<cplx> nc(6);
    for (cplx& c : nc) c = rng.complex_gaussian();
    const TaylorSeries num{nc};
    const TaylorSeries s = series_divide(num, den, 40);
    const TaylorSeries back = mul_trunc(s, den, 40);
    for (std::size_t k = 0; k <= 40; ++k) CHECK(std::abs(back.at(k) - num.at(k)) < 1e-10);
}

TEST_CASE("poly_from_roots vanishes at roots") {
    const std::vector<cplx> roots{cplx(0.3), cplx(-0.2, 0.4), cplx(0.0)};
    const TaylorSeries p = poly_from_roots(roots);
    CHECK(p.degree() == 3);
    for (cplx r : roots) CHECK(std::abs(p.eval(r)) < 1e-14);
}
