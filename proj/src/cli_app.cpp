#include "malmquist/cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "malmquist/acceptance.hpp"
#include "malmquist/bernstein.hpp"
#include "malmquist/interpolate.hpp"
#include "malmquist/oracle.hpp"
#include "malmquist/serde.hpp"
#include "malmquist/sweep.hpp"

namespace malmquist {

namespace {

using nlohmann::json;

struct GlobalOpts {
    std::uint64_t seed = 20250808;
    double tol = 1e-8;
    std::string format = "csv";
    std::string out;
    int threads = 0;
    bool timings = false;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + g.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

// "--sigma" accepts the shorthand grammar or @file.json.
Sigma load_sigma(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty sigma");
    if (spec[0] == '@') {
        std::ifstream f(spec.substr(1));
        if (!f) throw std::invalid_argument("cannot open sigma file: " + spec.substr(1));
        json j;
        f >> j;
        return sigma_from_json(j);
    }
    if (spec[0] == '[') return sigma_from_json(json::parse(spec));
    return Sigma::parse_shorthand(spec);
}

TaylorSeries load_taylor(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty coefficient list");
    if (spec[0] == '@') {
        std::ifstream f(spec.substr(1));
        if (!f) throw std::invalid_argument("cannot open coefficient file: " + spec.substr(1));
        json j;
        f >> j;
        return taylor_from_json(j);
    }
    return taylor_from_json(json::parse(spec));
}

SpaceSpec parse_space(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("space must be \"p,alpha\"");
    const std::string ps = text.substr(0, comma);
    const std::string as = text.substr(comma + 1);
    double p;
    if (ps == "inf" || ps == "Inf" || ps == "INF") {
        p = std::numeric_limits<double>::infinity();
    } else {
        p = std::stod(ps);
    }
    return SpaceSpec(p, std::stod(as));
}

int cmd_interpolate(const GlobalOpts& g, const std::string& sigma_spec, const std::string& f_spec,
                    const std::string& space_spec) {
    const Sigma sigma = load_sigma(sigma_spec);
    const TaylorSeries f = load_taylor(f_spec);
    const SpaceSpec space = parse_space(space_spec);
    const MalmquistRep rep = phi(f, sigma);
    const TraceMatchResult tm = trace_match(f, rep, sigma, g.tol);
    const SupNormEstimate sn = sup_norm(rep);
    const double nf = weighted_norm(f, space);

    json out;
    out["sigma"] = sigma_to_json(sigma);
    out["space"] = {{"p", space.p_is_infinite() ? json("inf") : json(space.p)},
                    {"alpha", space.alpha}};
    json coords = json::array();
    for (const cplx& c : rep.coords()) coords.push_back({c.real(), c.imag()});
    out["coords"] = coords;
    out["trace_defect"] = tm.max_defect;
    out["trace_pass"] = tm.pass;
    out["sup_norm"] = {{"grid", sn.grid_max}, {"refined", sn.refined}};
    out["ratio"] = nf > 0.0 ? json(sn.refined / nf) : json();
    emit(g, out.dump(2));
    return 0;
}

int cmd_oracle(const GlobalOpts& g, const std::string& sigma_spec, const std::string& space_spec,
               int restarts) {
    const Sigma sigma = load_sigma(sigma_spec);
    const SpaceSpec space = parse_space(space_spec);
    OracleOptions oo;
    oo.restarts = restarts;
    oo.seed = g.seed;
    const InterpEstimate est = interp_constant_estimate(sigma, space, oo);

    json out;
    out["value"] = est.value;
    out["route"] = "compressed_shift_alternating";
    out["degree_cap"] = est.degree_cap;
    out["sensitivity_delta"] = est.sensitivity_delta;
    json wit = json::array();
    for (const cplx& c : est.witness.coef) wit.push_back({c.real(), c.imag()});
    out["witness_coeffs"] = wit;
    bool distinct = true;
    for (const SigmaPoint& p : sigma.points()) {
        if (p.mult != 1) distinct = false;
    }
    if (distinct && est.witness.degree() >= 0) {
        const std::vector<cplx> tau = trace_of(est.witness, sigma);
        const double a = min_norm(sigma, tau).value;
        const double b = pick_min_norm(sigma, tau);
        out["crosscheck_delta"] = std::abs(a - b);
    } else {
        out["crosscheck_delta"] = nullptr;
    }
    emit(g, out.dump(2));
    return 0;
}

int cmd_bounds(const GlobalOpts& g, int n, double r, const std::string& space_spec,
               bool with_oracle, int restarts) {
    const SpaceSpec space = parse_space(space_spec);
    OracleFn oracle;
    if (with_oracle) {
        OracleOptions oo;
        oo.restarts = restarts;
        oo.seed = g.seed;
        oracle = make_oracle(oo);
    }
    SweepRow row;
    row.report = bound_report(n, r, space, oracle);
    row.comparator = eval_functional_norm(1.0 - (1.0 - r) / n, space);
    if (g.format == "json") {
        const BoundReport& b = row.report;
        json out;
        out["n"] = b.n;
        out["r"] = b.r;
        out["p"] = space.p_is_infinite() ? json("inf") : json(space.p);
        out["alpha"] = space.alpha;
        out["lower"] = b.lower_certified;
        out["lower_witness"] = b.lower_witness;
        out["upper"] = b.upper_certified;
        out["upper_route"] = b.upper_route;
        out["comparator"] = row.comparator;
        if (b.oracle_estimate) {
            out["oracle"] = *b.oracle_estimate;
        } else {
            out["oracle"] = nullptr;
        }
        emit(g, out.dump(2));
    } else {
        emit(g, sweep_csv_header() + "\n" + sweep_csv_row(row, g.timings) + "\n");
    }
    return 0;
}

int cmd_sweep(const GlobalOpts& g, const std::vector<int>& ns, const std::vector<double>& rs,
              const std::vector<double>& ps, const std::vector<double>& alphas, bool with_oracle,
              int restarts) {
    SweepOptions opt;
    opt.ns = ns;
    opt.rs = rs;
    opt.ps = ps;
    opt.alphas = alphas;
    opt.with_oracle = with_oracle;
    opt.seed = g.seed;
    opt.threads = g.threads;
    opt.oracle.restarts = restarts;
    const SweepResult result = run_sweep(opt);
    emit(g, sweep_csv(result, g.timings));
    return 0;
}

int cmd_bernstein(const GlobalOpts& g, int n, double r, int trials, unsigned k) {
    Rng rng(g.seed);
    std::ostringstream out;
    out << "trial,ratio,bound,margin\n";
    for (int t = 0; t < trials; ++t) {
        const Sigma sigma = random_sigma_exact(rng, n, r);
        const MalmquistRep fn = random_rep(rng, make_basis(sigma));
        const RatioReport rep = (k == 1) ? check_dyakonov(sigma, fn) : check_higher(sigma, fn, k);
        out << t << ',' << format_double(rep.ratio) << ',' << format_double(rep.bound) << ','
            << format_double(rep.margin()) << '\n';
    }
    emit(g, out.str());
    return 0;
}

int cmd_verify(const GlobalOpts& g, bool quick) {
    AcceptanceOptions opt;
    opt.seed = g.seed;
    opt.quick = quick;
    const std::vector<CriterionResult> results = run_acceptance(opt, std::cout);
    if (!g.out.empty()) {
        std::ofstream f(g.out, std::ios::binary);
        f << acceptance_csv(results);
    }
    return all_pass(results) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Constructive bounded interpolation on finite subsets of the unit disc: "
                 "certified bounds, a minimal-norm oracle, and experiment sweeps"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    GlobalOpts g;
    app.add_option("--seed", g.seed, "master random seed");
    app.add_option("--tol", g.tol, "numeric tolerance for pass/fail style checks");
    app.add_option("--format", g.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "write output to this path instead of stdout");
    app.add_option("--threads", g.threads,
                   "worker threads (0: MALMQUIST_THREADS env or hardware)");
    app.add_flag("--timings", g.timings, "emit real wall-clock timings in CSV (non-reproducible)");

    // interpolate
    std::string sigma_spec, f_spec, space_spec = "2,0";
    CLI::App* interp = app.add_subcommand("interpolate", "evaluate the bounded interpolant");
    interp->add_option("--sigma", sigma_spec, "points: shorthand \"0.5^2;-0.1+0.2i\" or @file.json")
        ->required();
    interp->add_option("--f", f_spec, "Taylor coefficients: JSON array or @file.json")->required();
    interp->add_option("--space", space_spec, "coefficient space \"p,alpha\"");

    // oracle
    std::string o_sigma, o_space = "2,0";
    int o_restarts = 16;
    CLI::App* oracle = app.add_subcommand("oracle", "estimate the interpolation constant");
    oracle->add_option("--sigma", o_sigma, "points")->required();
    oracle->add_option("--space", o_space, "coefficient space \"p,alpha\"");
    oracle->add_option("--restarts", o_restarts, "alternating-maximization restarts");

    // bounds
    int b_n = 1;
    double b_r = 0.0;
    std::string b_space = "2,0";
    bool b_oracle = false;
    int b_restarts = 16;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "one bracketed bound report");
    bounds_cmd->add_option("--n", b_n, "number of points with multiplicity")->required();
    bounds_cmd->add_option("--r", b_r, "radius bound in [0,1)")->required();
    bounds_cmd->add_option("--space", b_space, "coefficient space \"p,alpha\"");
    bounds_cmd->add_flag("--oracle", b_oracle, "include the oracle estimate");
    bounds_cmd->add_option("--restarts", b_restarts, "oracle restarts");

    // sweep
    std::vector<int> s_ns;
    std::vector<double> s_rs, s_ps{2.0}, s_alphas{0.0};
    std::string s_oracle = "on";
    int s_restarts = 16;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid of bound reports with exponent fits");
    sweep_cmd->add_option("--n", s_ns, "grid of n values")->required()->delimiter(',');
    sweep_cmd->add_option("--r", s_rs, "grid of r values")->required()->delimiter(',');
    sweep_cmd->add_option("--p", s_ps, "grid of p values")->delimiter(',');
    sweep_cmd->add_option("--alpha", s_alphas, "grid of alpha values")->delimiter(',');
    sweep_cmd->add_option("--oracle", s_oracle, "on/off")->check(CLI::IsMember({"on", "off"}));
    sweep_cmd->add_option("--restarts", s_restarts, "oracle restarts");

    // bernstein
    int be_n = 4, be_trials = 50;
    double be_r = 0.5;
    unsigned be_k = 1;
    CLI::App* bern = app.add_subcommand("bernstein", "derivative-vs-bound Monte Carlo table");
    bern->add_option("--n", be_n, "points per draw");
    bern->add_option("--r", be_r, "max modulus");
    bern->add_option("--trials", be_trials, "number of draws");
    bern->add_option("--k", be_k, "derivative order");

    // verify
    bool v_quick = false;
    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_flag("--quick", v_quick, "reduced trial counts (~30s)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*interp) return cmd_interpolate(g, sigma_spec, f_spec, space_spec);
        if (*oracle) return cmd_oracle(g, o_sigma, o_space, o_restarts);
        if (*bounds_cmd) return cmd_bounds(g, b_n, b_r, b_space, b_oracle, b_restarts);
        if (*sweep_cmd) {
            return cmd_sweep(g, s_ns, s_rs, s_ps, s_alphas, s_oracle == "on", s_restarts);
        }
        if (*bern) return cmd_bernstein(g, be_n, be_r, be_trials, be_k);
        if (*verify) return cmd_verify(g, v_quick);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace malmquist
