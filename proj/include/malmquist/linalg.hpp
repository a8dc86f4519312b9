#pragma once

#include <complex>
#include <vector>

#include "malmquist/taylor.hpp"

namespace malmquist::linalg {

/// Dense row-major complex matrix. Sized for the model-space problems in this
/// library (n below a few dozen); no attempt at large-scale performance.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, cplx(0.0)) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }

  private:
    int rows_, cols_;
    std::vector<cplx> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(cplx s, const Matrix& a);

Matrix adjoint(const Matrix& a);
std::vector<cplx> mat_vec(const Matrix& a, const std::vector<cplx>& v);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);

/// Eigenvalues of a Hermitian matrix in ascending order (cyclic complex
/// Jacobi). If V is non-null it receives the eigenvectors as columns.
std::vector<double> hermitian_eig(Matrix h, Matrix* v = nullptr);

double smallest_eigenvalue(const Matrix& hermitian);

/// Largest singular value.
double operator_norm(const Matrix& a);

struct SingularTriple {
    double sigma;
    std::vector<cplx> left;   // v with A u = sigma v
    std::vector<cplx> right;  // u
};

SingularTriple top_singular(const Matrix& a);

/// Solves A X = B by Gaussian elimination with partial pivoting.
Matrix solve(Matrix a, Matrix b);
std::vector<cplx> solve_vec(const Matrix& a, const std::vector<cplx>& b);

double vec_norm(const std::vector<cplx>& v);
cplx dot(const std::vector<cplx>& x, const std::vector<cplx>& y);  // conj(x).y

}  // namespace malmquist::linalg
