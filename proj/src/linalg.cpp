#include "malmquist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace malmquist::linalg {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = cplx(1.0);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(cplx s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

Matrix adjoint(const Matrix& a) {
    Matrix c(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

std::vector<cplx> mat_vec(const Matrix& a, const std::vector<cplx>& v) {
    if (static_cast<int>(v.size()) != a.cols()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<cplx> out(static_cast<std::size_t>(a.rows()), cplx(0.0));
    for (int i = 0; i < a.rows(); ++i) {
        cplx acc(0.0);
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (const cplx& x : a.data()) s += std::norm(x);
    return std::sqrt(s);
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (const cplx& x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

namespace {

double off_diagonal_norm(const Matrix& h) {
    double s = 0.0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eig(Matrix h, Matrix* v) {
    const int n = h.rows();
    if (n != h.cols()) throw std::invalid_argument("hermitian_eig: square matrix required");
    Matrix vec = Matrix::identity(n);
    const double scale = std::max(1.0, frobenius_norm(h));
    const double tol = 1e-15 * scale;
    for (int sweep = 0; sweep < 100 && off_diagonal_norm(h) > tol; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx hpq = h(p, q);
                const double apq = std::abs(hpq);
                if (apq <= tol * 1e-2) continue;
                const cplx phase = hpq / apq;  // h(p,q) = apq * phase
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Unitary G = [[c, s*phase], [-s*conj(phase), c]] acting on
                // columns (p,q); H <- G^H H G zeroes the (p,q) entry.
                for (int k = 0; k < n; ++k) {
                    const cplx hkp = h(k, p), hkq = h(k, q);
                    h(k, p) = c * hkp - s * std::conj(phase) * hkq;
                    h(k, q) = s * phase * hkp + c * hkq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx hpk = h(p, k), hqk = h(q, k);
                    h(p, k) = c * hpk - s * phase * hqk;
                    h(q, k) = s * std::conj(phase) * hpk + c * hqk;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = vec(k, p), vkq = vec(k, q);
                    vec(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    vec(k, q) = s * phase * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return h(i, i).real() < h(j, j).real(); });
    std::vector<double> eig(static_cast<std::size_t>(n));
    Matrix sorted(n, n);
    for (int c2 = 0; c2 < n; ++c2) {
        eig[static_cast<std::size_t>(c2)] = h(order[static_cast<std::size_t>(c2)], order[static_cast<std::size_t>(c2)]).real();
        for (int r = 0; r < n; ++r) sorted(r, c2) = vec(r, order[static_cast<std::size_t>(c2)]);
    }
    if (v) *v = sorted;
    return eig;
}

double smallest_eigenvalue(const Matrix& hermitian) {
    return hermitian_eig(hermitian).front();
}

double operator_norm(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const Matrix gram = adjoint(a) * a;
    const double lam = hermitian_eig(gram).back();
    return std::sqrt(std::max(0.0, lam));
}

SingularTriple top_singular(const Matrix& a) {
    const Matrix gram = adjoint(a) * a;
    Matrix v;
    const std::vector<double> eig = hermitian_eig(gram, &v);
    const int n = gram.rows();
    SingularTriple out;
    out.sigma = std::sqrt(std::max(0.0, eig.back()));
    out.right.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.right[static_cast<std::size_t>(i)] = v(i, n - 1);
    std::vector<cplx> av = mat_vec(a, out.right);
    const double nav = vec_norm(av);
    if (nav > 0.0) {
        for (cplx& x : av) x /= nav;
        out.left = std::move(av);
    } else {
        out.left.assign(static_cast<std::size_t>(a.rows()), cplx(0.0));
        if (a.rows() > 0) out.left[0] = cplx(1.0);
    }
    return out;
}

Matrix solve(Matrix a, Matrix b) {
    const int n = a.rows();
    if (n != a.cols() || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double cand = std::abs(a(r, col));
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (best == 0.0) throw std::runtime_error("solve: singular matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            for (int j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
        }
        const cplx d = a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const cplx f = a(r, col) / d;
            if (f == cplx(0.0)) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (int j = 0; j < b.cols(); ++j) b(r, j) -= f * b(col, j);
        }
    }
    Matrix x(n, b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        for (int r = n - 1; r >= 0; --r) {
            cplx acc = b(r, j);
            for (int k = r + 1; k < n; ++k) acc -= a(r, k) * x(k, j);
            x(r, j) = acc / a(r, r);
        }
    }
    return x;
}

std::vector<cplx> solve_vec(const Matrix& a, const std::vector<cplx>& b) {
    Matrix rhs(a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) rhs(i, 0) = b[static_cast<std::size_t>(i)];
    Matrix x = solve(a, rhs);
    std::vector<cplx> out(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) out[static_cast<std::size_t>(i)] = x(i, 0);
    return out;
}

double vec_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

cplx dot(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
    cplx acc(0.0);
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

}  // namespace malmquist::linalg
