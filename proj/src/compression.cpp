#include "detgap/compression.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace detgap {

namespace {
constexpr double kPsdTolerance = -1e-10;
}

IndicatorFrame build_frame(const SetPartition& p, std::size_t n) {
  if (p.n() != n) {
    throw ShapeError("build_frame: partition covers " + std::to_string(p.n()) +
                     " states, frame wants " + std::to_string(n));
  }
  Matrix h(n, p.cell_count());
  for (std::size_t alpha = 0; alpha < p.cell_count(); ++alpha) {
    const auto& cell = p.cells()[alpha];
    const double entry = 1.0 / std::sqrt(static_cast<double>(cell.size()));
    for (int s : cell) h(static_cast<std::size_t>(s), alpha) = entry;
  }
  return IndicatorFrame{std::move(h)};
}

SymMatrix compress(const SymMatrix& t, const IndicatorFrame& h) {
  if (t.dim() != h.columns.rows()) {
    throw ShapeError("compress: operator dim " + std::to_string(t.dim()) +
                     " vs frame rows " + std::to_string(h.columns.rows()));
  }
  return SymMatrix(multiply(transpose(h.columns), multiply(t.matrix(), h.columns)));
}

double relaxed_benchmark(const SymMatrix& t, std::size_t k) {
  if (k < 1 || k > t.dim()) {
    throw ShapeError("relaxed_benchmark: k must be in [1, dim], got " + std::to_string(k));
  }
  const EigenDecomposition eig = eigen_symmetric(t);
  if (eig.eigenvalues.back() < kPsdTolerance) {
    throw std::domain_error("relaxed_benchmark: operator not positive semidefinite, min eigenvalue " +
                            std::to_string(eig.eigenvalues.back()));
  }
  double product = 1.0;
  for (std::size_t j = 0; j < k; ++j) product *= eig.eigenvalues[j];
  return product;
}

double det_compression(const SymMatrix& t, const SetPartition& p) {
  return determinant(compress(t, build_frame(p, t.dim())));
}

}  // namespace detgap
