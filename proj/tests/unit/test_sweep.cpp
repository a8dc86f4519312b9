#include <doctest.h>

#include <cmath>

#include "malmquist/space.hpp"
#include "malmquist/sweep.hpp"

using namespace malmquist;

TEST_CASE("double formatting") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-2.0) == "-2");
}

TEST_CASE("log-log least squares on an exact power law") {
    std::vector<double> xs, ys;
    for (double x : {1.0, 2.0, 4.0, 16.0}) {
        xs.push_back(std::log(x));
        ys.push_back(std::log(3.0 * std::pow(x, 1.25)));
    }
    const ExponentFit fit = fit_loglog(xs, ys);
    CHECK(fit.slope == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("sweep grid") {
    SweepOptions opt;
    opt.ns = {1, 2};
    opt.rs = {0.0, 0.5};
    opt.ps = {2.0};
    opt.alphas = {0.0, -0.5};
    opt.with_oracle = false;
    opt.seed = 9;

    SUBCASE("row count and order") {
        const SweepResult res = run_sweep(opt);
        REQUIRE(res.rows.size() == 8);
        CHECK(res.rows[0].report.n == 1);
        CHECK(res.rows.back().report.n == 2);
        CHECK(res.fits.empty());  // no oracle values, nothing to fit
        for (const SweepRow& row : res.rows) {
            CHECK(row.comparator ==
                  doctest::Approx(eval_functional_norm(
                      1.0 - (1.0 - row.report.r) / row.report.n, row.report.space)));
            CHECK(std::isfinite(row.report.lower_certified));
            CHECK(std::isfinite(row.report.upper_certified));
        }
    }
    SUBCASE("single grid point gives one data row") {
        SweepOptions one = opt;
        one.ns = {3};
        one.rs = {0.25};
        one.alphas = {0.0};
        const SweepResult res = run_sweep(one);
        CHECK(res.rows.size() == 1);
        const std::string csv = sweep_csv(res);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // header + row
    }
    SUBCASE("deterministic bytes across thread counts") {
        SweepOptions par = opt;
        par.with_oracle = true;
        par.oracle.restarts = 3;
        par.threads = 4;
        const std::string a = sweep_csv(run_sweep(par));
        par.threads = 1;
        const std::string b = sweep_csv(run_sweep(par));
        CHECK(a == b);
        // oracle column filled, fits emitted per family
        CHECK(a.find("# fit") != std::string::npos);
    }
    SUBCASE("empty grid is rejected") {
        SweepOptions bad = opt;
        bad.ns.clear();
        CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
    }
}

TEST_CASE("csv schema") {
    CHECK(sweep_csv_header() ==
          "n,r,p,alpha,lower,oracle,upper,lower_witness,upper_route,exponent_expected,"
          "comparator,runtime_ms");
    SweepRow row;
    row.report.n = 2;
    row.report.r = 0.5;
    row.report.space = SpaceSpec(2.0, 0.0);
    row.report.lower_certified = 0.7;
    row.report.upper_certified = 4.0;
    row.report.lower_witness = "w";
    row.report.upper_route = "u";
    row.comparator = 1.25;
    row.runtime_ms = 123.0;
    const std::string line = sweep_csv_row(row);
    CHECK(line == "2,0.5,2,0,0.7,,4,w,u,0.5,1.25,0");
    CHECK(sweep_csv_row(row, true) == "2,0.5,2,0,0.7,,4,w,u,0.5,1.25,123");
}
