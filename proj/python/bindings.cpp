#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "malmquist/acceptance.hpp"
#include "malmquist/bernstein.hpp"
#include "malmquist/bounds.hpp"
#include "malmquist/interpolate.hpp"
#include "malmquist/oracle.hpp"
#include "malmquist/space.hpp"
#include "malmquist/sweep.hpp"

namespace py = pybind11;
using namespace malmquist;

namespace {

TaylorSeries series_from_list(const std::vector<cplx>& coef) {
    return TaylorSeries{coef.empty() ? std::vector<cplx>{cplx(0.0)} : coef};
}

Sigma sigma_from_any(const py::object& spec) {
    if (py::isinstance<py::str>(spec)) return Sigma::parse_shorthand(spec.cast<std::string>());
    std::vector<SigmaPoint> pts;
    for (const py::handle item : spec) {
        const py::tuple t = item.cast<py::tuple>();
        SigmaPoint p;
        p.lambda = t[0].cast<cplx>();
        p.mult = t.size() > 1 ? t[1].cast<int>() : 1;
        pts.push_back(p);
    }
    return Sigma(std::move(pts));
}

SpaceSpec space_from(double p, double alpha) { return SpaceSpec(p, alpha); }

}  // namespace

PYBIND11_MODULE(_malmquist, m) {
    m.doc() = "Constructive bounded interpolation on finite subsets of the unit disc";

    m.def(
        "weighted_norm",
        [](const std::vector<cplx>& coef, double p, double alpha) {
            return weighted_norm(series_from_list(coef), space_from(p, alpha));
        },
        py::arg("coefficients"), py::arg("p") = 2.0, py::arg("alpha") = 0.0);

    m.def(
        "eval_functional_norm",
        [](double t, double p, double alpha) {
            return eval_functional_norm(t, space_from(p, alpha));
        },
        py::arg("t"), py::arg("p") = 2.0, py::arg("alpha") = 0.0);

    m.def(
        "reproducing_kernel",
        [](cplx lambda, double alpha, std::size_t degree) {
            return reproducing_kernel(lambda, SpaceSpec(2.0, alpha), degree).coef;
        },
        py::arg("lam"), py::arg("alpha") = 0.0, py::arg("degree") = 32);

    m.def(
        "binomial_norm",
        [](const std::vector<cplx>& coef, unsigned n_power) {
            return binomial_norm(series_from_list(coef), n_power);
        },
        py::arg("coefficients"), py::arg("n_power"));

    m.def("alpha_to_beta", &alpha_to_beta, py::arg("alpha"));
    m.def("beta_to_alpha", &beta_to_alpha, py::arg("beta"));

    m.def(
        "blaschke_product",
        [](const py::object& sigma, cplx z) { return blaschke_product(sigma_from_any(sigma), z); },
        py::arg("sigma"), py::arg("z"));

    m.def(
        "phi",
        [](const std::vector<cplx>& coef, const py::object& sigma) {
            return phi(series_from_list(coef), sigma_from_any(sigma)).coords();
        },
        py::arg("coefficients"), py::arg("sigma"),
        "Coordinates of the bounded interpolant in the orthonormal model-space basis");

    m.def(
        "interpolant_report",
        [](const std::vector<cplx>& coef, const py::object& sigma_spec, double p, double alpha) {
            const Sigma sigma = sigma_from_any(sigma_spec);
            const TaylorSeries f = series_from_list(coef);
            const MalmquistRep rep = phi(f, sigma);
            const TraceMatchResult tm = trace_match(f, rep, sigma);
            const SupNormEstimate sn = sup_norm(rep);
            py::dict out;
            out["coords"] = rep.coords();
            out["trace_defect"] = tm.max_defect;
            out["sup_norm"] = sn.refined;
            out["ratio"] = sn.refined / weighted_norm(f, space_from(p, alpha));
            return out;
        },
        py::arg("coefficients"), py::arg("sigma"), py::arg("p") = 2.0, py::arg("alpha") = 0.0);

    m.def(
        "compressed_shift",
        [](const py::object& sigma) {
            const linalg::Matrix m0 = compressed_shift(sigma_from_any(sigma));
            std::vector<std::vector<cplx>> rows(static_cast<std::size_t>(m0.rows()));
            for (int i = 0; i < m0.rows(); ++i) {
                rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m0.cols()));
                for (int j = 0; j < m0.cols(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m0(i, j);
            }
            return rows;
        },
        py::arg("sigma"));

    m.def(
        "min_norm",
        [](const py::object& sigma, const std::vector<cplx>& trace) {
            return min_norm(sigma_from_any(sigma), trace).value;
        },
        py::arg("sigma"), py::arg("trace"));

    m.def(
        "pick_min_norm",
        [](const py::object& sigma, const std::vector<cplx>& values) {
            return pick_min_norm(sigma_from_any(sigma), values);
        },
        py::arg("sigma"), py::arg("values"));

    m.def(
        "interp_constant",
        [](const py::object& sigma, double p, double alpha, int restarts, std::uint64_t seed) {
            OracleOptions opt;
            opt.restarts = restarts;
            opt.seed = seed;
            const InterpEstimate est =
                interp_constant_estimate(sigma_from_any(sigma), space_from(p, alpha), opt);
            py::dict out;
            out["value"] = est.value;
            out["witness"] = est.witness.coef;
            out["sensitivity_delta"] = est.sensitivity_delta;
            return out;
        },
        py::arg("sigma"), py::arg("p") = 2.0, py::arg("alpha") = 0.0, py::arg("restarts") = 8,
        py::arg("seed") = 1);

    m.def("upper_hilbert", &upper_hilbert, py::arg("n"), py::arg("r"), py::arg("alpha"));
    m.def("upper_p", &upper_p, py::arg("n"), py::arg("r"), py::arg("p"), py::arg("alpha"));
    m.def(
        "lower_lp",
        [](int n, double p, double alpha) { return lower_lp(n, p, alpha).value; },
        py::arg("n"), py::arg("p"), py::arg("alpha"));
    m.def(
        "lower_onepoint_hilbert",
        [](int n, cplx lambda, unsigned n_weight) {
            return lower_onepoint_hilbert(n, lambda, n_weight).value;
        },
        py::arg("n"), py::arg("lam"), py::arg("n_weight"));

    m.def(
        "bound_report",
        [](int n, double r, double p, double alpha, bool with_oracle, std::uint64_t seed) {
            OracleFn oracle;
            if (with_oracle) {
                OracleOptions opt;
                opt.seed = seed;
                oracle = make_oracle(opt);
            }
            const BoundReport rep = bound_report(n, r, space_from(p, alpha), oracle);
            py::dict out;
            out["n"] = rep.n;
            out["r"] = rep.r;
            out["lower"] = rep.lower_certified;
            out["lower_witness"] = rep.lower_witness;
            out["upper"] = rep.upper_certified;
            out["upper_route"] = rep.upper_route;
            if (rep.oracle_estimate) {
                out["oracle"] = *rep.oracle_estimate;
            } else {
                out["oracle"] = py::none();
            }
            return out;
        },
        py::arg("n"), py::arg("r"), py::arg("p") = 2.0, py::arg("alpha") = 0.0,
        py::arg("with_oracle") = false, py::arg("seed") = 1);

    m.def(
        "bernstein_ratio",
        [](const py::object& sigma_spec, const std::vector<cplx>& coords, unsigned k) {
            const Sigma sigma = sigma_from_any(sigma_spec);
            const MalmquistRep g(make_basis(sigma), coords);
            const RatioReport rep = (k == 1) ? check_dyakonov(sigma, g) : check_higher(sigma, g, k);
            return py::make_tuple(rep.ratio, rep.bound, rep.pass);
        },
        py::arg("sigma"), py::arg("coords"), py::arg("k") = 1);

    m.def(
        "von_neumann_check",
        [](const py::object& sigma_spec, const std::vector<cplx>& coef, int trials,
           std::uint64_t seed) {
            const VonNeumannReport rep =
                von_neumann_check(sigma_from_any(sigma_spec), series_from_list(coef), trials, seed);
            py::dict out;
            out["min_norm"] = rep.min_norm_value;
            out["max_excess"] = rep.max_excess;
            out["model_gap"] = rep.model_gap;
            out["pass"] = rep.pass;
            return out;
        },
        py::arg("sigma"), py::arg("coefficients"), py::arg("trials") = 25, py::arg("seed") = 1);

    m.def(
        "run_acceptance_quick",
        [](std::uint64_t seed) {
            AcceptanceOptions opt;
            opt.seed = seed;
            opt.quick = true;
            std::ostringstream log;
            const auto results = run_acceptance(opt, log);
            py::list rows;
            for (const CriterionResult& r : results) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                rows.append(d);
            }
            return rows;
        },
        py::arg("seed") = 20250808);
}
