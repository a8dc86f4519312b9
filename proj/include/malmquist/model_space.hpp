#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "malmquist/blaschke.hpp"
#include "malmquist/linalg.hpp"
#include "malmquist/taylor.hpp"

namespace malmquist {

/// Orthonormal Malmquist basis (e_k) of the model space K_B for a finite
/// Blaschke product B = B_sigma. Element k (0-indexed) is
///   e_k(z) = [prod_{j<k} b_{lambda_j}(z)] sqrt(1-|lambda_k|^2)/(1-conj(lambda_k) z)
/// over the expanded point list. Each element is kept as numerator /
/// common denominator with den = prod_j (1 - conj(lambda_j) z), which makes
/// Taylor expansion a stable linear recurrence.
class MalmquistBasis {
  public:
    explicit MalmquistBasis(Sigma sigma);

    const Sigma& sigma() const { return sigma_; }
    int n() const { return sigma_.n(); }

    cplx eval_element(int k, cplx z) const;
    std::vector<cplx> eval_all(cplx z) const;

    /// Exact Taylor coefficients 0..d of e_k. Computed by multiplying factor
    /// power series (every intermediate is bounded on the disc, so the
    /// computation stays well conditioned even for high multiplicities).
    TaylorSeries taylor_element(int k, std::size_t d) const;

    /// Taylor coefficients 0..d of every element in one shared-prefix pass.
    std::vector<TaylorSeries> taylor_all(std::size_t d) const;

    const TaylorSeries& numerator(int k) const { return numerators_.at(static_cast<std::size_t>(k)); }
    const TaylorSeries& denominator() const { return den_; }

    /// log of a certified bound for max_{|z|=rho} |e_k|; requires rho < 1/r.
    double log_element_growth(int k, double rho) const;

  private:
    Sigma sigma_;
    std::vector<TaylorSeries> numerators_;  // degree <= n-1 each
    TaylorSeries den_;                      // degree n
};

/// A function in K_B stored as coordinates in the Malmquist basis. The
/// Euclidean coordinate norm equals the H^2 norm (Parseval); pointwise
/// evaluation is exact rational arithmetic.
class MalmquistRep {
  public:
    MalmquistRep(std::shared_ptr<const MalmquistBasis> basis, std::vector<cplx> coords);

    const MalmquistBasis& basis() const { return *basis_; }
    std::shared_ptr<const MalmquistBasis> basis_ptr() const { return basis_; }
    const Sigma& sigma() const { return basis_->sigma(); }
    const std::vector<cplx>& coords() const { return coords_; }

    double h2_norm() const;
    cplx eval(cplx z) const;

    /// Exact Taylor coefficients 0..d (grow-only cached; safe to call from
    /// several threads).
    TaylorSeries taylor(std::size_t d) const;

    /// First `terms` Taylor coefficients around a (entry j = g^(j)(a)/j!).
    TaylorSeries local_expansion(cplx a, std::size_t terms) const;

    const TaylorSeries& numerator() const { return num_; }
    const TaylorSeries& denominator() const { return basis_->denominator(); }

    /// log of a certified bound for max_{|z|=rho} |g|; requires rho < 1/r.
    double log_growth_bound(double rho) const;

  private:
    struct TaylorCache {
        std::mutex mu;
        TaylorSeries series;
        bool filled = false;
    };

    std::shared_ptr<const MalmquistBasis> basis_;
    std::vector<cplx> coords_;
    TaylorSeries num_;
    std::shared_ptr<TaylorCache> cache_;
};

std::shared_ptr<const MalmquistBasis> make_basis(const Sigma& sigma);

/// P_B k_zeta as a Malmquist representation: coords[k] = conj(e_k(zeta)).
MalmquistRep project_kernel(const std::shared_ptr<const MalmquistBasis>& basis, cplx zeta);
MalmquistRep project_kernel(const Sigma& sigma, cplx zeta);

/// Gram matrix (e_k, e_i)_{H^2} by trapezoid quadrature on the circle
/// (spectrally accurate for these rational integrands).
linalg::Matrix circle_gram(const MalmquistBasis& basis, int nodes = 4096);

/// Matrix of the compressed shift (model operator) in the Malmquist basis:
/// entry (i,k) = (z e_k, e_i)_{H^2}. Lower triangular with diagonal
/// lambda_1..lambda_n; operator norm <= 1.
linalg::Matrix compressed_shift(const Sigma& sigma, int nodes = 4096);

/// Independent route for the same matrix: Cauchy pairing of Taylor
/// expansions with a certified geometric tail below `tol`.
linalg::Matrix compressed_shift_taylor(const Sigma& sigma, double tol = 1e-12);

}  // namespace malmquist
