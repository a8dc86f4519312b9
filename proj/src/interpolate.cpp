#include "malmquist/interpolate.hpp"

#include <cmath>
#include <stdexcept>

namespace malmquist {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

MalmquistRep phi(const TaylorSeries& f, const std::shared_ptr<const MalmquistBasis>& basis) {
    if (!f.is_finite()) throw std::invalid_argument("phi: non-finite coefficients");
    const long df = f.degree();
    const std::size_t d = df < 0 ? 0 : static_cast<std::size_t>(df);
    const int n = basis->n();
    const std::vector<TaylorSeries> elements = basis->taylor_all(d);
    std::vector<cplx> coords(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        coords[static_cast<std::size_t>(k)] = cauchy_pairing(f, elements[static_cast<std::size_t>(k)]);
    }
    return MalmquistRep(basis, std::move(coords));
}

MalmquistRep phi(const TaylorSeries& f, const Sigma& sigma) {
    return phi(f, make_basis(sigma));
}

TraceMatchResult trace_match(const TaylorSeries& f, const MalmquistRep& g, const Sigma& sigma,
                             double tol) {
    double defect = 0.0;
    for (const SigmaPoint& p : sigma.points()) {
        const std::size_t m = static_cast<std::size_t>(p.mult);
        const TaylorSeries ft = taylor_shift(f, p.lambda).truncated(m - 1);
        const TaylorSeries gt = g.local_expansion(p.lambda, m);
        for (std::size_t j = 0; j < m; ++j) defect = std::max(defect, std::abs(ft.at(j) - gt.at(j)));
    }
    return TraceMatchResult{defect <= tol, defect};
}

SupNormEstimate sup_norm(const std::function<cplx(cplx)>& g, int samples) {
    if (samples < 3) samples = 3;
    const auto modulus_at = [&](double theta) {
        return std::abs(g(cplx(std::cos(theta), std::sin(theta))));
    };
    SupNormEstimate est;
    est.grid_size = samples;
    int best = 0;
    for (int m = 0; m < samples; ++m) {
        const double theta = kTwoPi * static_cast<double>(m) / samples;
        const double v = modulus_at(theta);
        if (v > est.grid_max) {
            est.grid_max = v;
            est.arg_theta = theta;
            best = m;
        }
    }
    // Golden-section maximization over the two arcs around the best node.
    const double h = kTwoPi / samples;
    double lo = kTwoPi * best / samples - h;
    double hi = kTwoPi * best / samples + h;
    constexpr double kInvPhi = 0.61803398874989484820;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = modulus_at(x1);
    double f2 = modulus_at(x2);
    est.refined = est.grid_max;
    for (int step = 0; step < 40; ++step) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = modulus_at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = modulus_at(x1);
        }
        const double cand = std::max(f1, f2);
        if (cand > est.refined) {
            est.refined = cand;
            est.arg_theta = (f1 > f2) ? x1 : x2;
        }
    }
    return est;
}

SupNormEstimate sup_norm(const MalmquistRep& g) {
    const Sigma& sigma = g.sigma();
    const double r = sigma.r();
    const int fill = static_cast<int>(std::ceil(1.0 / (1.0 - r)));
    const int samples = std::max(4096, 64 * sigma.n() * fill);
    return sup_norm([&](cplx z) { return g.eval(z); }, samples);
}

SupNormEstimate sup_norm(const TaylorSeries& f) {
    const long d = f.degree();
    const int samples = std::max<long>(4096, 32 * std::max<long>(d, 1));
    return sup_norm([&](cplx z) { return f.eval(z); }, static_cast<int>(samples));
}

double interpolant_norm_ratio(const TaylorSeries& f, const Sigma& sigma, const SpaceSpec& x) {
    const double nf = weighted_norm(f, x);
    if (nf == 0.0) throw std::invalid_argument("interpolant_norm_ratio: zero input");
    return sup_norm(phi(f, sigma)).refined / nf;
}

}  // namespace malmquist
