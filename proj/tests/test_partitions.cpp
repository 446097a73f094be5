#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "detgap/partitions.hpp"
#include "test_support.hpp"

using namespace detgap;

TEST_CASE("enumerate: certified counts") {
  CHECK(enumerate_partitions(6, 3).size() == 90);
  CHECK(enumerate_partitions(4, 2).size() == 7);

  const auto only = enumerate_partitions(3, 3);
  REQUIRE(only.size() == 1);
  CHECK(only[0].to_string() == "[[0],[1],[2]]");
}

TEST_CASE("enumerate: matches the inclusion-exclusion count for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(static_cast<long long>(
                enumerate_partitions(static_cast<std::size_t>(n), static_cast<std::size_t>(k))
                    .size()) == test::stirling2(n, k));
    }
  }
}

TEST_CASE("enumerate: lexicographic order without duplicates") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{6, 3}, {5, 3}, {7, 2}}) {
    const auto parts = enumerate_partitions(n, k);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      CHECK(parts[i - 1].rgs() < parts[i].rgs());
    }
  }
}

TEST_CASE("enumerate: rejects out-of-range arguments") {
  CHECK_THROWS_AS(enumerate_partitions(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partitions(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partitions(13, 3), std::invalid_argument);
}

TEST_CASE("partition: canonicalization and equality") {
  const SetPartition p = SetPartition::from_cells(6, {{3}, {5, 4, 1, 0}, {2}});
  CHECK(p.to_string() == "[[0,1,4,5],[2],[3]]");
  CHECK(p.rgs() == std::vector<int>{0, 0, 1, 2, 0, 0});
  CHECK(p == SetPartition::from_rgs({0, 0, 1, 2, 0, 0}));
  CHECK(p.size_type() == std::vector<int>{1, 1, 4});
}

TEST_CASE("partition: construction validates the cell system") {
  CHECK_THROWS_AS(SetPartition::from_cells(4, {{0, 1}, {1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_cells(4, {{0, 1}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_cells(4, {{0, 1}, {2, 3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_cells(4, {{0, 1, 2, 3}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_rgs({0, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_rgs({}), std::invalid_argument);
}

TEST_CASE("count matrix: worked examples") {
  const CountMatrix block = count_matrix(SetPartition::from_rgs({0, 0, 1, 1, 2, 2}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK(block.counts[i][a] == (i == a ? 2 : 0));
    }
  }

  const CountMatrix hard = count_matrix(SetPartition::from_cells(6, {{0, 1, 4, 5}, {2}, {3}}));
  CHECK(hard.counts[0] == std::array<int, 3>{2, 0, 0});
  CHECK(hard.counts[1] == std::array<int, 3>{0, 1, 1});
  CHECK(hard.counts[2] == std::array<int, 3>{2, 0, 0});

  const CountMatrix split = count_matrix(SetPartition::from_cells(6, {{0}, {1}, {2, 3, 4, 5}}));
  CHECK(split.counts[0] == std::array<int, 3>{1, 1, 0});
}

TEST_CASE("count matrix: row and column sums over all 90 partitions") {
  for (const auto& p : enumerate_partitions(6, 3)) {
    const CountMatrix cm = count_matrix(p);
    for (std::size_t i = 0; i < 3; ++i) {
      int row = 0;
      for (std::size_t a = 0; a < 3; ++a) {
        CHECK(cm.counts[i][a] >= 0);
        CHECK(cm.counts[i][a] <= 2);
        row += cm.counts[i][a];
      }
      CHECK(row == 2);
    }
    for (std::size_t a = 0; a < 3; ++a) {
      int col = 0;
      for (std::size_t i = 0; i < 3; ++i) col += cm.counts[i][a];
      CHECK(col == static_cast<int>(p.cells()[a].size()));
    }
  }
}

TEST_CASE("count matrix: rejects other shapes") {
  CHECK_THROWS_AS(count_matrix(SetPartition::from_rgs({0, 0, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(count_matrix(SetPartition::from_rgs({0, 0, 1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("classify: worked examples") {
  const FamilyTag t114 = classify(SetPartition::from_cells(6, {{2}, {3}, {0, 1, 4, 5}}));
  CHECK(t114.kind == FamilyTag::Kind::Structured114);
  CHECK(t114.r == 2);
  CHECK(t114.to_string() == "Structured114(r=2)");

  const FamilyTag t123 = classify(SetPartition::from_cells(6, {{0, 1}, {2}, {3, 4, 5}}));
  CHECK(t123.kind == FamilyTag::Kind::Structured123);
  CHECK(t123.p == 1);
  CHECK(t123.q == 3);
  CHECK(t123.r == 2);
  CHECK(t123.to_string() == "Structured123(p=1,q=3,r=2)");

  const FamilyTag other = classify(SetPartition::from_cells(6, {{0, 2}, {1, 3}, {4, 5}}));
  CHECK(other.kind == FamilyTag::Kind::Other);
  CHECK(other.to_string() == "Other(2,2,2)");

  CHECK(classify(SetPartition::from_rgs({0, 0, 1, 1, 2, 2})).kind == FamilyTag::Kind::Block);

  // size type (1,1,4) but the singletons straddle two true blocks
  CHECK(classify(SetPartition::from_cells(6, {{0}, {2}, {1, 3, 4, 5}})).kind ==
        FamilyTag::Kind::Other);
  // size type (1,2,3) but the pair is not a true block
  CHECK(classify(SetPartition::from_cells(6, {{0, 2}, {1}, {3, 4, 5}})).kind ==
        FamilyTag::Kind::Other);
}

TEST_CASE("classify: totals over all 90 partitions") {
  int n114 = 0, n123 = 0, nblock = 0, nother = 0;
  int size114 = 0, size123 = 0, size222 = 0;
  for (const auto& p : enumerate_partitions(6, 3)) {
    switch (classify(p).kind) {
      case FamilyTag::Kind::Structured114: ++n114; break;
      case FamilyTag::Kind::Structured123: ++n123; break;
      case FamilyTag::Kind::Block: ++nblock; break;
      case FamilyTag::Kind::Other: ++nother; break;
    }
    const auto sizes = p.size_type();
    if (sizes == std::vector<int>{1, 1, 4}) ++size114;
    if (sizes == std::vector<int>{1, 2, 3}) ++size123;
    if (sizes == std::vector<int>{2, 2, 2}) ++size222;
  }
  CHECK(n114 == 3);
  CHECK(n123 == 12);
  CHECK(nblock == 1);
  CHECK(nother == 74);
  CHECK(size114 == 15);
  CHECK(size123 == 60);
  CHECK(size222 == 15);
}

TEST_CASE("classify: stable under cell relabeling") {
  std::mt19937_64 rng(424242);
  for (const auto& p : enumerate_partitions(6, 3)) {
    std::vector<std::vector<int>> cells = p.cells();
    std::shuffle(cells.begin(), cells.end(), rng);
    for (auto& cell : cells) std::shuffle(cell.begin(), cell.end(), rng);
    const SetPartition q = SetPartition::from_cells(6, cells);
    CHECK(q == p);
    CHECK(classify(q) == classify(p));
  }
}

TEST_CASE("structured partitions: constructors agree with the classifier") {
  const auto all = structured_partitions();
  REQUIRE(all.size() == 15);
  CHECK(std::set<SetPartition>(all.begin(), all.end()).size() == 15);

  for (int r = 1; r <= 3; ++r) {
    const FamilyTag tag = classify(structured_114_partition(r));
    CHECK(tag.kind == FamilyTag::Kind::Structured114);
    CHECK(tag.r == r);
  }
  CHECK(structured_114_partition(2).to_string() == "[[0,1,4,5],[2],[3]]");

  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      for (int r = 1; r <= 3; ++r) {
        if (p == q || p == r || q == r) continue;
        for (const auto& part : structured_123_partitions(p, q, r)) {
          const FamilyTag tag = classify(part);
          CHECK(tag.kind == FamilyTag::Kind::Structured123);
          CHECK(tag.p == p);
          CHECK(tag.q == q);
          CHECK(tag.r == r);
        }
      }
    }
  }

  CHECK_THROWS_AS(structured_114_partition(0), std::invalid_argument);
  CHECK_THROWS_AS(structured_123_partitions(1, 1, 2), std::invalid_argument);
}
