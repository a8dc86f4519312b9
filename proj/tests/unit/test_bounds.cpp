#include <doctest.h>

#include <cmath>

#include "malmquist/bounds.hpp"
#include "malmquist/interpolate.hpp"
#include "malmquist/rng.hpp"
#include "malmquist/space.hpp"

using namespace malmquist;

TEST_CASE("chain constants") {
    CHECK(k_constant(0) == doctest::Approx(1.0));
    CHECK(k_constant(1) == doctest::Approx(2.0));
    CHECK(k_constant(2) == doctest::Approx(4.5));
    CHECK(k_constant(3) == doctest::Approx(27.0));
    CHECK(k_constant(4) == doctest::Approx(256.0));

    CHECK(chain_constant_hilbert(0) == doctest::Approx(2.0));
    CHECK(chain_constant_hilbert(1) == doctest::Approx(2.0 * std::sqrt(2.0) * std::sqrt(17.0)));
    CHECK(chain_constant_l1(0) == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("hilbert upper bound") {
    SUBCASE("hardy weight") {
        for (int n : {1, 3, 9}) {
            for (double r : {0.0, 0.5, 0.9}) {
                CHECK(upper_hilbert(n, r, 0.0) ==
                      doctest::Approx(2.0 * std::sqrt(n / (1.0 - r))).epsilon(1e-13));
            }
        }
    }
    SUBCASE("single point at the origin with unit weight") {
        CHECK(upper_hilbert(1, 0.0, -1.0) ==
              doctest::Approx(2.0 * std::sqrt(2.0) * std::sqrt(17.0)).epsilon(1e-13));
    }
    SUBCASE("half-integer weight has linear growth") {
        const double a = upper_hilbert(4, 0.5, -0.5);
        const double b = upper_hilbert(8, 0.5, -0.5);
        CHECK(b / a == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("interpolated constant is continuous at integers") {
        const double eps = 1e-9;
        const double at = upper_hilbert(5, 0.4, -1.0);
        CHECK(upper_hilbert(5, 0.4, -1.0 + eps) == doctest::Approx(at).epsilon(1e-6));
        CHECK(upper_hilbert(5, 0.4, -1.0 - eps) == doctest::Approx(at).epsilon(1e-6));
    }
    CHECK_THROWS(upper_hilbert(0, 0.5, 0.0));
    CHECK_THROWS(upper_hilbert(2, 1.0, 0.0));
    CHECK_THROWS(upper_hilbert(2, 0.5, 0.25));
}

TEST_CASE("general p upper bound") {
    SUBCASE("p = 2 endpoint is the Hilbert chain") {
        CHECK(upper_p(5, 0.6, 2.0, -0.8) == doctest::Approx(upper_hilbert(5, 0.6, -0.8)));
    }
    SUBCASE("p = 1 chain value at the trivial grid point") {
        CHECK(upper_p(1, 0.0, 1.0, 0.0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
    }
    SUBCASE("p = infinity growth approaches exponent 3/2") {
        const double inf = std::numeric_limits<double>::infinity();
        const double a = upper_p(1000, 0.0, inf, 0.0);
        const double b = upper_p(2000, 0.0, inf, 0.0);
        CHECK(b / a == doctest::Approx(std::pow(2.0, 1.5)).epsilon(0.01));
    }
    SUBCASE("riesz-thorin interpolates between the endpoints") {
        const double u1 = upper_p(6, 0.3, 1.0, -0.4);
        const double u2 = upper_p(6, 0.3, 2.0, -0.4);
        const double mid = upper_p(6, 0.3, 4.0 / 3.0, -0.4);  // theta' = 1/2
        CHECK(mid == doctest::Approx(std::sqrt(u1 * u2)).epsilon(1e-12));
    }
}

TEST_CASE("origin lower certificate") {
    CHECK(lower_lp(2, 2.0, 0.0).value == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-13));
    CHECK(lower_lp(4, 1.0, -1.0).value == doctest::Approx(0.75).epsilon(1e-13));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(lower_lp(4, inf, 0.0).value == doctest::Approx(1.5).epsilon(1e-13));
    // witness is unit norm in its own space
    for (double p : {1.0, 2.0, 3.0}) {
        const LowerCertificate c = lower_lp(6, p, -0.75);
        CHECK(weighted_norm(c.witness, SpaceSpec(p, -0.75)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("fejer machinery") {
    SUBCASE("split rule") {
        CHECK(fejer_split(1) == 1);
        CHECK(fejer_split(2) == 1);
        CHECK(fejer_split(7) == 4);
        CHECK(fejer_split(8) == 4);
    }
    SUBCASE("coefficients vanish beyond n and dominate one below the split") {
        for (int n : {1, 2, 3, 8, 13}) {
            const std::vector<double> hat = fejer_pair_coefficients(n);
            REQUIRE(static_cast<int>(hat.size()) == n);
            const int m = std::min(fejer_split(n), n - 1);
            for (int j = 0; j <= m; ++j) CHECK(hat[static_cast<std::size_t>(j)] >= 1.0);
            for (double h : hat) CHECK(h >= 0.0);
        }
    }
    SUBCASE("kernel mass stays below two across the operating range") {
        for (int n = 1; n <= 64; ++n) {
            CHECK(fejer_kernel_mass_upper(n) <= 2.0);
        }
    }
    SUBCASE("constant input closed form") {
        for (int n : {2, 5, 12}) {
            const int m = fejer_split(n);
            const double expect = 0.5 * (1.0 + 1.0 / (m + 1));
            CHECK(fejer_quotient_lower(TaylorSeries::one(), n) ==
                  doctest::Approx(expect).epsilon(1e-10));
        }
    }
    SUBCASE("nonnegative coefficients dominate the split partial sum") {
        Rng rng(167);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 2 + static_cast<int>(rng.uniform_index(10));
            std::vector<cplx> c(static_cast<std::size_t>(n + 3));
            for (cplx& z : c) z = cplx(rng.uniform(), 0.0);
            const TaylorSeries g{c};
            const int m = std::min(fejer_split(n), n - 1);
            double partial = 0.0;
            for (int j = 0; j <= m; ++j) partial += g.at(static_cast<std::size_t>(j)).real();
            CHECK(fejer_quotient_lower(g, n) >= 0.5 * partial * (1.0 - 1e-12));
        }
    }
    SUBCASE("multiples of z^n are invisible") {
        const TaylorSeries g = mul(TaylorSeries::monomial(6), TaylorSeries{{cplx(2.0), cplx(1.0)}});
        CHECK(fejer_quotient_lower(g, 6) == doctest::Approx(0.0));
    }
    SUBCASE("certificate never exceeds the true quotient norm on easy cases") {
        // ||1||_{Hinf/z^n Hinf} = 1
        for (int n : {1, 2, 3, 9}) {
            CHECK(fejer_quotient_lower(TaylorSeries::one(), n) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("one-point witness polynomial") {
    SUBCASE("hockey-stick partial sums are exact") {
        for (unsigned nw = 1; nw <= 6; ++nw) {
            for (int m : {1, 3, 16, 64}) {
                unsigned long long acc = 0;
                for (int j = 0; j <= m; ++j) {
                    acc += static_cast<unsigned long long>(
                        binomial(nw - 1 + static_cast<unsigned>(j), static_cast<unsigned>(j)) + 0.5);
                }
                const unsigned long long rhs = static_cast<unsigned long long>(
                    binomial(nw + static_cast<unsigned>(m), static_cast<unsigned>(m)) + 0.5);
                CHECK(acc == rhs);
            }
        }
    }
    SUBCASE("witness coefficient sum identity") {
        for (unsigned nw : {1u, 2u, 3u}) {
            for (int n : {2, 5, 16}) {
                for (double r : {0.0, 0.5, 0.9}) {
                    const TaylorSeries psi = onepoint_witness_poly(n, r, nw);
                    double sum = 0.0;
                    for (const cplx& c : psi.coef) {
                        CHECK(c.imag() == 0.0);
                        CHECK(c.real() >= 0.0);
                        sum += c.real();
                    }
                    const double expect = std::pow(static_cast<double>(n), -0.5 * nw) *
                                          std::pow((1.0 + r) * n, static_cast<double>(nw)) *
                                          std::pow(1.0 - r * r, -0.5 * nw);
                    CHECK(sum == doctest::Approx(expect).epsilon(1e-12));
                }
            }
        }
    }
    SUBCASE("degree is n times the weight") {
        CHECK(onepoint_witness_poly(5, 0.4, 3).degree() == 15);
    }
}

TEST_CASE("one-point lower certificate") {
    SUBCASE("hardy weight at the origin") {
        for (int n : {2, 4, 9}) {
            const int m = fejer_split(n);
            const LowerCertificate c = lower_onepoint_hilbert(n, cplx(0.0), 1);
            CHECK(c.value == doctest::Approx(0.5 * std::pow(n, -0.5) * (m + 1)).epsilon(1e-10));
            // witness is the alternating-sign Dirichlet polynomial, unit norm
            CHECK(h2_norm(c.witness) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("certificate below the certified upper bound") {
        for (unsigned nw : {1u, 2u, 3u}) {
            const double alpha = 0.5 * (1.0 - static_cast<double>(nw));
            for (int n : {1, 2, 8}) {
                for (double r : {0.0, 0.5, 0.9}) {
                    const double lo = lower_onepoint_hilbert(n, cplx(r), nw).value;
                    CHECK(lo <= upper_hilbert(n, r, alpha) * (1.0 + 1e-12));
                    CHECK(lo > 0.0);
                }
            }
        }
    }
    SUBCASE("witness norm is near one in its space") {
        for (unsigned nw : {1u, 2u}) {
            const double alpha = 0.5 * (1.0 - static_cast<double>(nw));
            const LowerCertificate c = lower_onepoint_hilbert(6, cplx(0.7), nw);
            const double norm = weighted_norm(c.witness, SpaceSpec(2.0, alpha));
            CHECK(norm <= 1.0 + 1e-9);  // composition-power inequality
            CHECK(norm > 0.2);
        }
    }
    SUBCASE("rotation leaves the value unchanged and rotates the witness") {
        const LowerCertificate a = lower_onepoint_hilbert(4, cplx(0.6), 2);
        const LowerCertificate b = lower_onepoint_hilbert(4, cplx(0.0, 0.6), 2);
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
        CHECK(std::abs(a.witness.at(1)) == doctest::Approx(std::abs(b.witness.at(1))).epsilon(1e-12));
    }
    SUBCASE("lower values are nondecreasing in r") {
        for (unsigned nw : {1u, 3u}) {
            double prev = 0.0;
            for (double r : {0.0, 0.3, 0.6, 0.9}) {
                const double v = lower_onepoint_hilbert(6, cplx(r), nw).value;
                CHECK(v >= prev * (1.0 - 1e-12));
                prev = v;
            }
        }
    }
}

TEST_CASE("bound report assembly") {
    SUBCASE("single origin point brackets the exact constant") {
        const BoundReport rep = bound_report(1, 0.0, SpaceSpec(2.0, 0.0));
        CHECK(rep.lower_certified <= 1.0);
        CHECK(rep.upper_certified >= 1.0);
        CHECK_FALSE(rep.oracle_estimate.has_value());
    }
    SUBCASE("oracle callback is honored and sandwiched") {
        const OracleFn fake = [](const Sigma&, const SpaceSpec&) { return 1.0; };
        const BoundReport rep = bound_report(1, 0.0, SpaceSpec(2.0, 0.0), fake);
        REQUIRE(rep.oracle_estimate.has_value());
        CHECK(rep.lower_certified <= *rep.oracle_estimate + 1e-12);
        CHECK(*rep.oracle_estimate <= rep.upper_certified + 1e-12);
    }
    SUBCASE("non-hilbert spaces route through the p chains") {
        const BoundReport rep = bound_report(4, 0.5, SpaceSpec(4.0, -0.25));
        CHECK(rep.upper_route == "wiener_hardy_p2inf");
        CHECK(rep.lower_certified > 0.0);
        CHECK(rep.lower_certified <= rep.upper_certified);
    }
}

TEST_CASE("expected exponent of the upper chains") {
    CHECK(expected_exponent(SpaceSpec(2.0, 0.0)) == doctest::Approx(0.5));
    CHECK(expected_exponent(SpaceSpec(2.0, -0.5)) == doctest::Approx(1.0));
    CHECK(expected_exponent(SpaceSpec(1.0, -1.0)) == doctest::Approx(1.5));
    CHECK(expected_exponent(SpaceSpec(4.0, 0.0)) == doctest::Approx(1.0));
    CHECK(expected_exponent(SpaceSpec(std::numeric_limits<double>::infinity(), 0.0)) ==
          doctest::Approx(1.5));
}
