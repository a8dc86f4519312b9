#include "malmquist/model_space.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace malmquist {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

MalmquistBasis::MalmquistBasis(Sigma sigma) : sigma_(std::move(sigma)) {
    const std::vector<cplx>& pts = sigma_.expanded();
    const std::size_t n = pts.size();

    // Prefix products prod_{j<k} (lambda_j - z) and suffix products
    // prod_{j>k} (1 - conj(lambda_j) z).
    std::vector<TaylorSeries> prefix(n + 1), suffix(n + 1);
    prefix[0] = TaylorSeries::one();
    for (std::size_t k = 0; k < n; ++k) {
        prefix[k + 1] = mul(prefix[k], TaylorSeries{{pts[k], cplx(-1.0)}});
    }
    suffix[n] = TaylorSeries::one();
    for (std::size_t k = n; k-- > 0;) {
        suffix[k] = mul(suffix[k + 1], TaylorSeries{{cplx(1.0), -std::conj(pts[k])}});
    }
    den_ = suffix[0];

    numerators_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double norm_factor = std::sqrt(1.0 - std::norm(pts[k]));
        numerators_[k] = cplx(norm_factor) * mul(prefix[k], suffix[k + 1]);
    }
}

cplx MalmquistBasis::eval_element(int k, cplx z) const {
    const std::vector<cplx>& pts = sigma_.expanded();
    cplx pre(1.0);
    for (int j = 0; j < k; ++j) pre *= blaschke_factor(pts[static_cast<std::size_t>(j)], z);
    const cplx lam = pts[static_cast<std::size_t>(k)];
    return pre * std::sqrt(1.0 - std::norm(lam)) / (cplx(1.0) - std::conj(lam) * z);
}

std::vector<cplx> MalmquistBasis::eval_all(cplx z) const {
    const std::vector<cplx>& pts = sigma_.expanded();
    std::vector<cplx> out(pts.size());
    cplx pre(1.0);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const cplx lam = pts[k];
        out[k] = pre * std::sqrt(1.0 - std::norm(lam)) / (cplx(1.0) - std::conj(lam) * z);
        pre *= blaschke_factor(lam, z);
    }
    return out;
}

namespace {

// sqrt(1-|lam|^2) / (1 - conj(lam) z) as a power series.
TaylorSeries cauchy_kernel_series(cplx lam, std::size_t d) {
    std::vector<cplx> c(d + 1);
    const double scale = std::sqrt(1.0 - std::norm(lam));
    const cplx lbar = std::conj(lam);
    cplx pw(scale);
    for (std::size_t m = 0; m <= d; ++m) {
        c[m] = pw;
        pw *= lbar;
    }
    return TaylorSeries{std::move(c)};
}

}  // namespace

TaylorSeries MalmquistBasis::taylor_element(int k, std::size_t d) const {
    const std::vector<cplx>& pts = sigma_.expanded();
    TaylorSeries pre = TaylorSeries::one();
    for (int j = 0; j < k; ++j) {
        pre = mul_trunc(pre, blaschke_factor_series(pts[static_cast<std::size_t>(j)], d), d);
    }
    return mul_trunc(pre, cauchy_kernel_series(pts[static_cast<std::size_t>(k)], d), d);
}

std::vector<TaylorSeries> MalmquistBasis::taylor_all(std::size_t d) const {
    const std::vector<cplx>& pts = sigma_.expanded();
    std::vector<TaylorSeries> out(pts.size());
    TaylorSeries pre = TaylorSeries::one();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        out[k] = mul_trunc(pre, cauchy_kernel_series(pts[k], d), d);
        if (k + 1 < pts.size()) pre = mul_trunc(pre, blaschke_factor_series(pts[k], d), d);
    }
    return out;
}

double MalmquistBasis::log_element_growth(int k, double rho) const {
    const std::vector<cplx>& pts = sigma_.expanded();
    if (!(rho * sigma_.r() < 1.0)) {
        throw std::invalid_argument("log_element_growth: rho must satisfy rho * r < 1");
    }
    double acc = 0.0;
    for (int j = 0; j < k; ++j) {
        const double a = std::abs(pts[static_cast<std::size_t>(j)]);
        acc += std::log(a + rho) - std::log(1.0 - a * rho);
    }
    const double ak = std::abs(pts[static_cast<std::size_t>(k)]);
    acc += 0.5 * std::log(1.0 - ak * ak) - std::log(1.0 - ak * rho);
    return acc;
}

MalmquistRep::MalmquistRep(std::shared_ptr<const MalmquistBasis> basis, std::vector<cplx> coords)
    : basis_(std::move(basis)), coords_(std::move(coords)), cache_(std::make_shared<TaylorCache>()) {
    if (!basis_) throw std::invalid_argument("MalmquistRep: null basis");
    if (static_cast<int>(coords_.size()) != basis_->n()) {
        throw std::invalid_argument("MalmquistRep: coordinate count must equal n");
    }
    num_ = TaylorSeries::zero();
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (coords_[k] == cplx(0.0)) continue;
        num_ = num_ + coords_[k] * basis_->numerator(static_cast<int>(k));
    }
}

double MalmquistRep::h2_norm() const { return linalg::vec_norm(coords_); }

cplx MalmquistRep::eval(cplx z) const {
    const std::vector<cplx> vals = basis_->eval_all(z);
    cplx acc(0.0);
    for (std::size_t k = 0; k < coords_.size(); ++k) acc += coords_[k] * vals[k];
    return acc;
}

TaylorSeries MalmquistRep::taylor(std::size_t d) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->filled || cache_->series.size() <= d) {
        const std::size_t target = cache_->filled ? std::max(d, 2 * cache_->series.size()) : d;
        const std::vector<TaylorSeries> elements = basis_->taylor_all(target);
        TaylorSeries acc{std::vector<cplx>(target + 1, cplx(0.0))};
        for (std::size_t k = 0; k < coords_.size(); ++k) {
            if (coords_[k] == cplx(0.0)) continue;
            for (std::size_t m = 0; m <= target; ++m) acc.coef[m] += coords_[k] * elements[k].at(m);
        }
        cache_->series = std::move(acc);
        cache_->filled = true;
    }
    return cache_->series.truncated(d);
}

TaylorSeries MalmquistRep::local_expansion(cplx a, std::size_t terms) const {
    if (terms == 0) return TaylorSeries::zero();
    const TaylorSeries num_loc = taylor_shift(num_, a).truncated(terms - 1);
    const TaylorSeries den_loc = taylor_shift(basis_->denominator(), a).truncated(terms - 1);
    return series_divide(num_loc, den_loc, terms - 1);
}

double MalmquistRep::log_growth_bound(double rho) const {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(coords_.size());
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const double a = std::abs(coords_[k]);
        if (a == 0.0) continue;
        const double l = std::log(a) + basis_->log_element_growth(static_cast<int>(k), rho);
        logs.push_back(l);
        best = std::max(best, l);
    }
    if (logs.empty()) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (double l : logs) s += std::exp(l - best);
    return best + std::log(s);
}

std::shared_ptr<const MalmquistBasis> make_basis(const Sigma& sigma) {
    return std::make_shared<const MalmquistBasis>(sigma);
}

MalmquistRep project_kernel(const std::shared_ptr<const MalmquistBasis>& basis, cplx zeta) {
    if (!(std::abs(zeta) < 1.0)) throw std::invalid_argument("project_kernel: |zeta| < 1 required");
    const std::vector<cplx> vals = basis->eval_all(zeta);
    std::vector<cplx> coords(vals.size());
    for (std::size_t k = 0; k < vals.size(); ++k) coords[k] = std::conj(vals[k]);
    return MalmquistRep(basis, std::move(coords));
}

MalmquistRep project_kernel(const Sigma& sigma, cplx zeta) {
    return project_kernel(make_basis(sigma), zeta);
}

linalg::Matrix circle_gram(const MalmquistBasis& basis, int nodes) {
    const int n = basis.n();
    linalg::Matrix g(n, n);
    for (int m = 0; m < nodes; ++m) {
        const double theta = kTwoPi * static_cast<double>(m) / nodes;
        const cplx z(std::cos(theta), std::sin(theta));
        const std::vector<cplx> vals = basis.eval_all(z);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) g(k, i) += vals[static_cast<std::size_t>(k)] * std::conj(vals[static_cast<std::size_t>(i)]);
    }
    return cplx(1.0 / nodes) * g;
}

linalg::Matrix compressed_shift(const Sigma& sigma, int nodes) {
    const MalmquistBasis basis(sigma);
    const int n = basis.n();
    linalg::Matrix m(n, n);
    for (int q = 0; q < nodes; ++q) {
        const double theta = kTwoPi * static_cast<double>(q) / nodes;
        const cplx z(std::cos(theta), std::sin(theta));
        const std::vector<cplx> vals = basis.eval_all(z);
        for (int i = 0; i < n; ++i) {
            const cplx w = z * std::conj(vals[static_cast<std::size_t>(i)]);
            for (int k = 0; k < n; ++k) m(i, k) += w * vals[static_cast<std::size_t>(k)];
        }
    }
    return cplx(1.0 / nodes) * m;
}

linalg::Matrix compressed_shift_taylor(const Sigma& sigma, double tol) {
    const MalmquistBasis basis(sigma);
    const int n = basis.n();
    const double r = sigma.r();
    std::size_t d = 64;
    if (r > 0.0) {
        const double rho = 0.5 * (1.0 + 1.0 / r);
        double lg = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < n; ++k) lg = std::max(lg, basis.log_element_growth(k, rho));
        // |tail| <= G_k G_i rho^-(2D+3) / (1 - rho^-2) once both expansions
        // stop at degree D.
        const double log_rho = std::log(rho);
        double need = (2.0 * lg - std::log1p(-1.0 / (rho * rho)) - std::log(tol) + 3.0) / (2.0 * log_rho);
        d = static_cast<std::size_t>(std::max(64.0, need + 8.0));
    } else {
        d = static_cast<std::size_t>(n + 1);
    }
    const std::vector<TaylorSeries> exp = basis.taylor_all(d);
    linalg::Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            // (z e_k, e_i) = sum_m e_k^(m) conj(e_i^(m+1)).
            cplx acc(0.0);
            for (std::size_t t = 0; t + 1 <= d; ++t) {
                acc += exp[static_cast<std::size_t>(k)].coef[t] * std::conj(exp[static_cast<std::size_t>(i)].coef[t + 1]);
            }
            m(i, k) = acc;
        }
    }
    return m;
}

}  // namespace malmquist
