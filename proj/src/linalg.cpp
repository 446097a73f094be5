#include "detgap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace detgap {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kJacobiTolerance = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

std::string shape_str(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw ShapeError("symmetric matrix must be square and nonempty, got " + shape_str(m_));
  }
  double asym = 0.0;
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      asym = std::max(asym, std::fabs(m_(i, j) - m_(j, i)));
    }
  }
  if (asym > kSymmetryTolerance) {
    throw std::invalid_argument("matrix is not symmetric: max |m(i,j)-m(j,i)| = " +
                                std::to_string(asym));
  }
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      const double avg = 0.5 * (m_(i, j) + m_(j, i));
      m_(i, j) = avg;
      m_(j, i) = avg;
    }
  }
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return SymMatrix(std::move(m));
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("multiply: inner dimensions disagree, " + shape_str(a) + " * " +
                     shape_str(b));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

SymMatrix square(const SymMatrix& m) {
  return SymMatrix(multiply(m.matrix(), m.matrix()));
}

double determinant(const SymMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n == 3) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
  Matrix a = m.matrix();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::fabs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::fabs(a(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

EigenDecomposition eigen_symmetric(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n);

  const auto off_norm = [&a, n]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += a(i, j) * a(i, j);
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > kJacobiTolerance) {
    if (++sweep > kJacobiMaxSweeps) {
      throw ConvergenceError("eigen_symmetric: off-diagonal norm still " +
                             std::to_string(off_norm()) + " after " +
                             std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::isinf(theta)) {
          t = 0.0;
        } else {
          const double u = std::sqrt(theta * theta + 1.0);
          t = (theta >= 0.0) ? 1.0 / (theta + u) : 1.0 / (theta - u);
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  // sort descending; stable so ties keep the order the sweep produced
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(idx[j], idx[j]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, idx[j]);
  }
  return out;
}

}  // namespace detgap
