#include <doctest.h>

#include <cmath>

#include "malmquist/acceptance.hpp"
#include "malmquist/interpolate.hpp"
#include "malmquist/oracle.hpp"
#include "malmquist/rng.hpp"

using namespace malmquist;

TEST_CASE("hermite trace extraction") {
    const Sigma sigma(std::vector<SigmaPoint>{{cplx(0.5), 2}, {cplx(-0.25), 1}});
    const TaylorSeries f = TaylorSeries::monomial(2);  // z^2
    const std::vector<cplx> tau = trace_of(f, sigma);
    REQUIRE(tau.size() == 3);
    CHECK(std::abs(tau[0] - cplx(0.25)) < 1e-14);   // f(0.5)
    CHECK(std::abs(tau[1] - cplx(1.0)) < 1e-14);    // f'(0.5)/1!
    CHECK(std::abs(tau[2] - cplx(0.0625)) < 1e-14); // f(-0.25)
}

TEST_CASE("hermite interpolant reproduces its data") {
    Rng rng(173);
    for (int trial = 0; trial < 15; ++trial) {
        const Sigma sigma = random_sigma(rng, 7, 0.85);
        std::vector<cplx> tau(static_cast<std::size_t>(sigma.n()));
        for (cplx& t : tau) t = rng.complex_gaussian();
        const HermitePoly p = hermite_interpolant(sigma, tau);
        const std::vector<cplx> back = trace_of(p.to_taylor(), sigma);
        for (std::size_t i = 0; i < tau.size(); ++i) CHECK(std::abs(back[i] - tau[i]) < 1e-9);
    }
}

TEST_CASE("min norm closed forms") {
    SUBCASE("single point value") {
        const MinNormResult r = min_norm(Sigma::one_point(cplx(0.0), 1), {cplx(0.3, -0.4)});
        CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("double origin point with derivative data") {
        const MinNormResult r = min_norm(Sigma::one_point(cplx(0.0), 2), {cplx(0.0), cplx(1.0)});
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("rejects duplicate runs and bad lengths") {
        CHECK_THROWS(min_norm(Sigma(std::vector<SigmaPoint>{{cplx(0.2), 1}, {cplx(0.2), 1}}),
                              {cplx(1.0), cplx(1.0)}));
        CHECK_THROWS(min_norm(Sigma::one_point(cplx(0.0), 2), {cplx(1.0)}));
    }
}

TEST_CASE("min norm invariances") {
    Rng rng(179);
    SUBCASE("representative independence") {
        const Sigma sigma = random_sigma(rng, 5, 0.8);
        const TaylorSeries f = random_polynomial(rng, 12);
        const std::vector<cplx> tau = trace_of(f, sigma);
        const double base = min_norm(sigma, tau).value;
        TaylorSeries nodes = TaylorSeries::one();
        for (cplx lam : sigma.expanded()) nodes = mul(nodes, TaylorSeries{{-lam, cplx(1.0)}});
        for (int trial = 0; trial < 5; ++trial) {
            const TaylorSeries shifted = f + mul(nodes, random_polynomial(rng, 6));
            CHECK(min_norm(sigma, trace_of(shifted, sigma)).value ==
                  doctest::Approx(base).epsilon(1e-9));
        }
    }
    SUBCASE("ordering invariance") {
        const Sigma sigma(std::vector<SigmaPoint>{{cplx(0.4, 0.2), 2}, {cplx(-0.5), 1}, {cplx(0.1, -0.3), 1}});
        const Sigma perm = sigma.permuted({1, 2, 0});
        const TaylorSeries f = random_polynomial(rng, 9);
        CHECK(min_norm(sigma, trace_of(f, sigma)).value ==
              doctest::Approx(min_norm(perm, trace_of(f, perm)).value).epsilon(1e-8));
    }
    SUBCASE("linearity under trace scaling") {
        const Sigma sigma = random_sigma(rng, 4, 0.7);
        std::vector<cplx> tau(static_cast<std::size_t>(sigma.n()));
        for (cplx& t : tau) t = rng.complex_gaussian();
        const double base = min_norm(sigma, tau).value;
        const cplx c = rng.complex_gaussian();
        std::vector<cplx> scaled = tau;
        for (cplx& t : scaled) t *= c;
        CHECK(min_norm(sigma, scaled).value == doctest::Approx(std::abs(c) * base).epsilon(1e-10));
    }
    SUBCASE("feasibility against the interpolant itself") {
        const Sigma sigma = random_sigma(rng, 6, 0.8);
        const TaylorSeries g = random_polynomial(rng, 14);
        const double mn = min_norm(sigma, trace_of(g, sigma)).value;
        CHECK(mn <= sup_norm(g).refined * (1.0 + 1e-8) + 1e-9);
        const double via_phi = sup_norm(phi(g, sigma)).refined;
        CHECK(mn <= via_phi + 1e-6);
    }
}

TEST_CASE("pick bisection") {
    SUBCASE("single point") {
        CHECK(pick_min_norm(Sigma::one_point(cplx(0.3, 0.1), 1), {cplx(0.0, -0.7)}) ==
              doctest::Approx(0.7).epsilon(1e-8));
    }
    SUBCASE("samples of a unimodular-bounded function stay feasible at one") {
        Rng rng(181);
        const Sigma sigma = random_distinct_sigma(rng, 3, 0.7, 0.2);
        std::vector<cplx> w;
        const Sigma inner(std::vector<SigmaPoint>{{cplx(0.3, -0.2), 1}, {cplx(-0.4, 0.1), 1}});
        for (cplx lam : sigma.expanded()) w.push_back(blaschke_product(inner, lam));
        CHECK(pick_min_norm(sigma, w) <= 1.0 + 1e-8);
    }
    SUBCASE("agrees with the shift route") {
        Rng rng(191);
        for (int trial = 0; trial < 10; ++trial) {
            const Sigma sigma = random_distinct_sigma(rng, 6, 0.9);
            std::vector<cplx> w(static_cast<std::size_t>(sigma.n()));
            for (cplx& v : w) v = rng.complex_gaussian();
            const double a = min_norm(sigma, w).value;
            const double b = pick_min_norm(sigma, w);
            CHECK(std::abs(a - b) <= 1e-7 * (1.0 + a));
        }
    }
    SUBCASE("multiplicities are rejected") {
        CHECK_THROWS(pick_min_norm(Sigma::one_point(cplx(0.0), 2), {cplx(1.0), cplx(0.0)}));
    }
}

TEST_CASE("interpolation constant estimate") {
    SUBCASE("single origin point is exactly one") {
        for (double alpha : {0.0, -0.5, -2.0}) {
            OracleOptions opt;
            opt.restarts = 4;
            const InterpEstimate est =
                interp_constant_estimate(Sigma::one_point(cplx(0.0), 1), SpaceSpec(2.0, alpha), opt);
            CHECK(est.value == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("sandwiched between the certificates at the origin family") {
        for (double alpha : {0.0, -0.5}) {
            OracleOptions opt;
            opt.restarts = 8;
            const int n = 4;
            const InterpEstimate est =
                interp_constant_estimate(Sigma::one_point(cplx(0.0), n), SpaceSpec(2.0, alpha), opt);
            CHECK(est.value + 1e-6 >= lower_lp(n, 2.0, alpha).value);
            CHECK(est.value <= upper_hilbert(n, 0.0, alpha) + 1e-6);
        }
    }
    SUBCASE("rotation invariance of the estimate") {
        OracleOptions opt;
        opt.restarts = 8;
        const double a =
            interp_constant_estimate(Sigma::one_point(cplx(0.7), 3), SpaceSpec(2.0, -0.5), opt).value;
        const double b =
            interp_constant_estimate(Sigma::one_point(cplx(0.0, 0.7), 3), SpaceSpec(2.0, -0.5), opt)
                .value;
        CHECK(a == doctest::Approx(b).epsilon(1e-6));
    }
    SUBCASE("witness achieves the reported value") {
        Rng rng(193);
        const Sigma sigma = random_sigma(rng, 4, 0.6);
        OracleOptions opt;
        opt.restarts = 6;
        const SpaceSpec x(2.0, -0.5);
        const InterpEstimate est = interp_constant_estimate(sigma, x, opt);
        const double nf = weighted_norm(est.witness, x);
        const double mn = min_norm(sigma, trace_of(est.witness, sigma)).value;
        CHECK(mn / nf == doctest::Approx(est.value).epsilon(1e-6));
    }
    SUBCASE("general p path reports a degree-cap sensitivity") {
        const InterpEstimate est = interp_constant_estimate(Sigma::one_point(cplx(0.0), 3),
                                                            SpaceSpec(1.0, 0.0), OracleOptions{4, 80, 5, 1e-9});
        CHECK(est.value > 0.0);
        CHECK(est.degree_cap >= 64);
        CHECK(std::abs(est.sensitivity_delta) < 0.5);
    }
}

TEST_CASE("von neumann checks") {
    Rng rng(197);
    SUBCASE("random contractions never beat the minimum") {
        for (int trial = 0; trial < 3; ++trial) {
            const Sigma sigma = random_sigma(rng, 6, 0.9);
            const TaylorSeries f = random_polynomial(rng, 2 * sigma.n() + 4);
            const VonNeumannReport rep = von_neumann_check(sigma, f, 25, 7000 + trial);
            CHECK(rep.pass);
            CHECK(rep.max_excess <= 1e-8);
            CHECK(rep.model_gap <= 1e-8);
        }
    }
    SUBCASE("diagonal contraction attains at most the pointwise max") {
        const Sigma sigma(std::vector<SigmaPoint>{{cplx(0.5), 1}, {cplx(-0.3, 0.2), 1}});
        const TaylorSeries f = random_polynomial(rng, 6);
        double point_max = 0.0;
        for (cplx lam : sigma.expanded()) point_max = std::max(point_max, std::abs(f.eval(lam)));
        const double mn = min_norm(sigma, trace_of(f, sigma)).value;
        CHECK(point_max <= mn + 1e-10);
    }
}

TEST_CASE("estimate is permutation invariant") {
    const Sigma sigma(std::vector<SigmaPoint>{{cplx(0.5, 0.1), 1}, {cplx(-0.3), 2}, {cplx(0.0, 0.4), 1}});
    const Sigma perm = sigma.permuted({2, 1, 0});
    OracleOptions opt;
    opt.restarts = 8;
    const double a = interp_constant_estimate(sigma, SpaceSpec(2.0, 0.0), opt).value;
    const double b = interp_constant_estimate(perm, SpaceSpec(2.0, 0.0), opt).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
}

TEST_CASE("clustered distinct nodes raise the conditioning flag") {
    const Sigma sigma(std::vector<SigmaPoint>{{cplx(0.5), 1}, {cplx(0.5 + 1e-8), 1}});
    const MinNormResult r = min_norm(sigma, {cplx(1.0), cplx(1.0)});
    CHECK(r.conditioning_warning);
    CHECK(r.value >= 1.0 - 1e-6);
    const Sigma wide(std::vector<SigmaPoint>{{cplx(0.5), 1}, {cplx(-0.5), 1}});
    CHECK_FALSE(min_norm(wide, {cplx(1.0), cplx(1.0)}).conditioning_warning);
}

TEST_CASE("coefficient-sum ball gives constant exactly one") {
    // For p = 1, alpha = 0 the unit ball embeds into the sup-norm unit ball
    // (any member interpolates itself), while f = 1 forces at least one, so
    // the constant is exactly 1 for every point set.
    Rng rng(227);
    for (int trial = 0; trial < 3; ++trial) {
        const Sigma sigma = random_sigma(rng, 5, 0.9);
        OracleOptions opt;
        opt.restarts = 6;
        opt.seed = 100 + static_cast<std::uint64_t>(trial);
        const double est = interp_constant_estimate(sigma, SpaceSpec(1.0, 0.0), opt).value;
        CHECK(est == doctest::Approx(1.0).epsilon(1e-7));
    }
}
