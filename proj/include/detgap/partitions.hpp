#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace detgap {

// Unordered partition of {0..n-1} into nonempty cells, kept in canonical
// form: cells ordered by their minimal element, states ascending inside a
// cell. The restricted-growth string (state -> cell label, labels first
// seen in increasing order) doubles as the equality and ordering key.
class SetPartition {
 public:
  SetPartition() = default;  // empty placeholder, n() == 0

  static SetPartition from_cells(std::size_t n, std::vector<std::vector<int>> cells);
  static SetPartition from_rgs(std::vector<int> rgs);

  std::size_t n() const { return rgs_.size(); }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<int>& rgs() const { return rgs_; }

  std::vector<int> size_type() const;  // cell sizes, ascending
  std::string to_string() const;       // e.g. [[0,1,4,5],[2],[3]]

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.rgs_ == b.rgs_;
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.rgs_ < b.rgs_;
  }

 private:
  std::vector<int> rgs_;
  std::vector<std::vector<int>> cells_;
};

// All partitions of {0..n-1} into exactly k nonempty cells, in lexicographic
// order of their restricted-growth strings. Requires 1 <= k <= n <= 12.
std::vector<SetPartition> enumerate_partitions(std::size_t n, std::size_t k);

// True blocks of the six-state model.
inline constexpr std::array<std::array<int, 2>, 3> kTrueBlocks{{{0, 1}, {2, 3}, {4, 5}}};

// counts[i][alpha] = |B_i intersect A_alpha| for the six-state model with
// the canonical cell order of p. Requires n=6, k=3.
struct CountMatrix {
  std::array<std::array<int, 3>, 3> counts{};
};
CountMatrix count_matrix(const SetPartition& p);

struct FamilyTag {
  enum class Kind { Structured114, Structured123, Block, Other };
  Kind kind = Kind::Other;
  int r = 0;  // split block, 1-based
  int p = 0;  // intact block, 1-based
  int q = 0;  // attachment block, 1-based
  std::vector<int> sizes;  // size type, ascending

  std::string to_string() const;
  bool operator==(const FamilyTag&) const = default;
};

// Structural match against the two block-aligned subfamilies; everything
// else is tagged Other with its size type. Requires n=6, k=3.
FamilyTag classify(const SetPartition& p);

// Partition that splits true block r (1-based) into singletons and merges
// the other two blocks.
SetPartition structured_114_partition(int r);

// The two partitions that keep block p intact and attach one singleton of
// split block r to block q. {p,q,r} must be a permutation of {1,2,3}.
std::array<SetPartition, 2> structured_123_partitions(int p, int q, int r);

// All 15 structured partitions: (1,1,4) for r=1..3, then (1,2,3) for each
// (p,q,r) in lexicographic order with both singleton choices.
std::vector<SetPartition> structured_partitions();

}  // namespace detgap
