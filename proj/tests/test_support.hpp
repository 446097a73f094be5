#pragma once

// Helpers shared by the test binaries: reference models, random generators
// with fixed seeds, and small independent oracles.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "detgap/linalg.hpp"
#include "detgap/model.hpp"

namespace detgap::test {

// the bundled example model (models/paper-example)
inline BlockModelParams example_params() {
  BlockModelParams p;
  p.a = {0.536022, 0.5780345, 0.389373};
  p.b = {0.218244, 0.1813515, 0.138991};
  p.c12 = 0.003678;
  p.c13 = 0.119189;
  p.c23 = 0.116629;
  return p;
}

inline BlockModelParams identity_params() {
  BlockModelParams p;
  p.a = {1.0, 1.0, 1.0};
  p.b = {0.0, 0.0, 0.0};
  return p;
}

// Valid parameters covering the whole admissible cube: couplings up to
// 0.24, b uniform in the slack left by the row sum, a takes the rest.
inline BlockModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> cdist(0.0, 0.24);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BlockModelParams p;
  p.c12 = cdist(rng);
  p.c13 = cdist(rng);
  p.c23 = cdist(rng);
  const double slack[3] = {1.0 - 2.0 * p.c12 - 2.0 * p.c13, 1.0 - 2.0 * p.c12 - 2.0 * p.c23,
                           1.0 - 2.0 * p.c13 - 2.0 * p.c23};
  for (std::size_t i = 0; i < 3; ++i) {
    p.b[i] = unit(rng) * slack[i];
    p.a[i] = slack[i] - p.b[i];
  }
  return p;
}

// Symmetric matrix with a prescribed spectrum, built by conjugating the
// diagonal with random plane rotations. Independent of the eigensolver.
inline SymMatrix random_rotated(std::mt19937_64& rng, const std::vector<double>& eigs) {
  const std::size_t n = eigs.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = eigs[i];
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int rot = 0; rot < 40; ++rot) {
    const std::size_t p = pick(rng);
    const std::size_t q = pick(rng);
    if (p == q) continue;
    const double th = angle(rng);
    const double c = std::cos(th);
    const double s = std::sin(th);
    for (std::size_t k = 0; k < n; ++k) {
      const double mkp = m(k, p);
      const double mkq = m(k, q);
      m(k, p) = c * mkp - s * mkq;
      m(k, q) = s * mkp + c * mkq;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double mpk = m(p, k);
      const double mqk = m(q, k);
      m(p, k) = c * mpk - s * mqk;
      m(q, k) = s * mpk + c * mqk;
    }
  }
  return SymMatrix(std::move(m));
}

// Random symmetric matrix with entries in [-1, 1]; no spectrum control.
inline SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = entry(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return SymMatrix(std::move(m));
}

// Stirling number of the second kind by inclusion-exclusion. Exact for the
// n <= 12 range the enumerator supports.
inline long long stirling2(int n, int k) {
  long long sum = 0;
  for (int j = 0; j <= k; ++j) {
    long long binom = 1;
    for (int i = 1; i <= j; ++i) binom = binom * (k - i + 1) / i;
    long long pw = 1;
    for (int i = 0; i < n; ++i) pw *= (k - j);
    sum += (j % 2 ? -1 : 1) * binom * pw;
  }
  long long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return sum / fact;
}

// Indicator frame in an explicit (not canonicalized) cell order.
inline Matrix frame_with_cell_order(const std::vector<std::vector<int>>& cells, std::size_t n) {
  Matrix h(n, cells.size());
  for (std::size_t alpha = 0; alpha < cells.size(); ++alpha) {
    const double entry = 1.0 / std::sqrt(static_cast<double>(cells[alpha].size()));
    for (int s : cells[alpha]) h(static_cast<std::size_t>(s), alpha) = entry;
  }
  return h;
}

}  // namespace detgap::test
