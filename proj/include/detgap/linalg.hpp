#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace detgap {

// Operand dimensions do not line up.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The eigensolver failed to reach its off-diagonal tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense row-major matrix of doubles, zero-filled at construction.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

// Square matrix with enforced symmetry. Construction rejects inputs whose
// asymmetry exceeds 1e-12 and then symmetrizes exactly by averaging, so
// callers may rely on m(i,j) == m(j,i) bitwise.
class SymMatrix {
 public:
  explicit SymMatrix(Matrix m);

  static SymMatrix identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }
  static SymMatrix diagonal(const std::vector<double>& d);

  std::size_t dim() const { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  Matrix eigenvectors;              // orthonormal columns, column j pairs with eigenvalues[j]
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

// m*m, re-symmetrized.
SymMatrix square(const SymMatrix& m);

// Determinant. Dims 1-3 use closed cofactor expansions so certified values
// do not depend on pivot order; larger dims use partially pivoted
// elimination. Singular matrices return (approximately) zero.
double determinant(const SymMatrix& m);

// Full eigendecomposition by cyclic Jacobi rotations, swept until the
// off-diagonal Frobenius norm falls below 1e-13. Throws ConvergenceError
// after 100 sweeps (not reachable for the small matrices used here).
EigenDecomposition eigen_symmetric(const SymMatrix& m);

}  // namespace detgap
