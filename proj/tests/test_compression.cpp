#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "detgap/compression.hpp"
#include "detgap/model.hpp"
#include "test_support.hpp"

using namespace detgap;

TEST_CASE("frame: normalized indicator columns in canonical order") {
  const SetPartition p = SetPartition::from_cells(6, {{0}, {1}, {2, 3, 4, 5}});
  const IndicatorFrame h = build_frame(p, 6);
  REQUIRE(h.columns.rows() == 6);
  REQUIRE(h.columns.cols() == 3);
  CHECK(h.columns(0, 0) == 1.0);
  CHECK(h.columns(1, 1) == 1.0);
  for (std::size_t i = 2; i < 6; ++i) CHECK(h.columns(i, 2) == 0.5);
  CHECK(h.columns(0, 2) == 0.0);
  CHECK(h.columns(2, 0) == 0.0);

  const IndicatorFrame block = build_frame(SetPartition::from_rgs({0, 0, 1, 1, 2, 2}), 6);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(block.columns(2 * i, i) == inv_sqrt2);
    CHECK(block.columns(2 * i + 1, i) == inv_sqrt2);
  }
}

TEST_CASE("frame: gram matrix is the identity for all 90 partitions") {
  for (const auto& p : enumerate_partitions(6, 3)) {
    const IndicatorFrame h = build_frame(p, 6);
    const Matrix gram = multiply(transpose(h.columns), h.columns);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::fabs(gram(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-14);
      }
    }
  }
}

TEST_CASE("frame: rejects a partition of the wrong ground set") {
  CHECK_THROWS_AS(build_frame(SetPartition::from_rgs({0, 0, 1, 1}), 6), ShapeError);
}

TEST_CASE("compress: isometry property on the identity operator") {
  const SymMatrix eye = SymMatrix::identity(6);
  for (const auto& p : enumerate_partitions(6, 3)) {
    const SymMatrix q = compress(eye, build_frame(p, 6));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::fabs(q(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-14);
      }
    }
    CHECK(std::fabs(det_compression(eye, p) - 1.0) <= 1e-14);
  }
}

TEST_CASE("compress: certified values on the example model") {
  const SymMatrix t = square(build_P(test::example_params()));
  CHECK(std::fabs(det_compression(t, SetPartition::from_rgs({0, 0, 1, 1, 2, 2})) -
                  0.0480638931) <= 1e-9);
  CHECK(std::fabs(det_compression(t, SetPartition::from_cells(6, {{0, 1, 4, 5}, {2}, {3}})) -
                  0.0702908835) <= 1e-9);
}

TEST_CASE("compress: dimension mismatch is rejected") {
  const SymMatrix small = SymMatrix::identity(3);
  const IndicatorFrame h = build_frame(SetPartition::from_rgs({0, 0, 1, 1, 2, 2}), 6);
  CHECK_THROWS_AS(compress(small, h), ShapeError);
}

TEST_CASE("relaxed benchmark: diagonal and identity cases") {
  CHECK(relaxed_benchmark(SymMatrix::identity(6), 3) == 1.0);
  CHECK(std::fabs(relaxed_benchmark(SymMatrix::diagonal({4.0, 3.0, 2.0, 1.0}), 2) - 12.0) <=
        1e-12);
}

TEST_CASE("relaxed benchmark: example model") {
  const SymMatrix t = square(build_P(test::example_params()));
  CHECK(std::fabs(relaxed_benchmark(t, 3) - 0.0883986324) <= 1e-9);
}

TEST_CASE("relaxed benchmark: domain and shape errors") {
  CHECK_THROWS_AS(relaxed_benchmark(SymMatrix::diagonal({1.0, 2.0, -0.5, 1.0, 1.0, 1.0}), 3),
                  std::domain_error);
  CHECK_THROWS_AS(relaxed_benchmark(SymMatrix::identity(6), 0), ShapeError);
  CHECK_THROWS_AS(relaxed_benchmark(SymMatrix::identity(6), 7), ShapeError);
}

TEST_CASE("det_compression: invariant under cell reordering") {
  std::mt19937_64 rng(5150);
  std::vector<double> eigs(6);
  std::uniform_real_distribution<double> ev(0.0, 2.0);
  for (auto& e : eigs) e = ev(rng);
  const SymMatrix t = test::random_rotated(rng, eigs);

  const std::vector<std::vector<int>> base = {{0, 1, 4, 5}, {2}, {3}};
  std::vector<std::vector<int>> order = base;
  std::sort(order.begin(), order.end());
  std::vector<double> dets;
  do {
    const Matrix h = test::frame_with_cell_order(order, 6);
    dets.push_back(determinant(SymMatrix(multiply(transpose(h), multiply(t.matrix(), h)))));
  } while (std::next_permutation(order.begin(), order.end()));
  REQUIRE(dets.size() == 6);
  for (double d : dets) CHECK(std::fabs(d - dets.front()) <= 1e-14);

  // and the canonicalized value agrees with every ordering
  CHECK(std::fabs(det_compression(t, SetPartition::from_cells(6, base)) - dets.front()) <=
        1e-14);
}

TEST_CASE("interlacing: example model over all 90 partitions") {
  const SymMatrix t = square(build_P(test::example_params()));
  const EigenDecomposition top = eigen_symmetric(t);
  const double relaxed = relaxed_benchmark(t, 3);
  for (const auto& p : enumerate_partitions(6, 3)) {
    const SymMatrix q = compress(t, build_frame(p, 6));
    const EigenDecomposition ritz = eigen_symmetric(q);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(ritz.eigenvalues[j] <= top.eigenvalues[j] + 1e-10);
    }
    CHECK(det_compression(t, p) <= relaxed + 1e-10);
  }
}

TEST_CASE("interlacing: random positive semidefinite operators") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> ev(0.0, 2.0);
  const auto parts = enumerate_partitions(6, 3);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<double> eigs(6);
    for (auto& e : eigs) e = ev(rng);
    const SymMatrix t = test::random_rotated(rng, eigs);
    std::sort(eigs.rbegin(), eigs.rend());
    const double relaxed = relaxed_benchmark(t, 3);
    CHECK(std::fabs(relaxed - eigs[0] * eigs[1] * eigs[2]) <= 1e-10);

    for (const auto& p : parts) {
      const EigenDecomposition ritz = eigen_symmetric(compress(t, build_frame(p, 6)));
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(ritz.eigenvalues[j] <= eigs[j] + 1e-10);
      }
      CHECK(det_compression(t, p) <= relaxed + 1e-10);
    }
  }
}

TEST_CASE("compress: identity chain makes every determinant one") {
  const SymMatrix t = square(build_P(test::identity_params()));
  for (const auto& p : enumerate_partitions(6, 3)) {
    CHECK(std::fabs(det_compression(t, p) - 1.0) <= 1e-12);
  }
}
