#include "detgap/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace detgap {

namespace {

void require_six_three(const SetPartition& p, const char* op) {
  if (p.n() != 6 || p.cell_count() != 3) {
    throw std::invalid_argument(std::string(op) + ": defined for the 6-state, 3-cell model only");
  }
}

void require_perm123(int p, int q, int r, const char* op) {
  std::array<int, 3> idx{p, q, r};
  std::sort(idx.begin(), idx.end());
  if (idx != std::array<int, 3>{1, 2, 3}) {
    throw std::invalid_argument(std::string(op) + ": (p,q,r) must be a permutation of {1,2,3}");
  }
}

}  // namespace

SetPartition SetPartition::from_cells(std::size_t n, std::vector<std::vector<int>> cells) {
  if (n == 0) throw std::invalid_argument("partition: n must be positive");
  std::vector<int> seen(n, 0);
  for (auto& cell : cells) {
    if (cell.empty()) throw std::invalid_argument("partition: empty cell");
    std::sort(cell.begin(), cell.end());
    for (int s : cell) {
      if (s < 0 || static_cast<std::size_t>(s) >= n) {
        throw std::invalid_argument("partition: state " + std::to_string(s) + " out of range");
      }
      if (seen[s]++) {
        throw std::invalid_argument("partition: state " + std::to_string(s) + " repeated");
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (!seen[s]) {
      throw std::invalid_argument("partition: state " + std::to_string(s) + " not covered");
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  SetPartition out;
  out.cells_ = std::move(cells);
  out.rgs_.assign(n, 0);
  for (std::size_t label = 0; label < out.cells_.size(); ++label) {
    for (int s : out.cells_[label]) out.rgs_[static_cast<std::size_t>(s)] = static_cast<int>(label);
  }
  return out;
}

SetPartition SetPartition::from_rgs(std::vector<int> rgs) {
  if (rgs.empty()) throw std::invalid_argument("partition: empty label string");
  int mx = -1;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] < 0 || rgs[i] > mx + 1) {
      throw std::invalid_argument("partition: not a restricted-growth string at position " +
                                  std::to_string(i));
    }
    mx = std::max(mx, rgs[i]);
  }
  SetPartition out;
  out.cells_.resize(static_cast<std::size_t>(mx) + 1);
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    out.cells_[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i));
  }
  out.rgs_ = std::move(rgs);
  return out;
}

std::vector<int> SetPartition::size_type() const {
  std::vector<int> sizes;
  sizes.reserve(cells_.size());
  for (const auto& c : cells_) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::string SetPartition::to_string() const {
  std::string out = "[";
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (c) out += ',';
    out += '[';
    for (std::size_t i = 0; i < cells_[c].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cells_[c][i]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

std::vector<SetPartition> enumerate_partitions(std::size_t n, std::size_t k) {
  if (k < 1 || k > n || n > 12) {
    throw std::invalid_argument("enumerate_partitions: need 1 <= k <= n <= 12, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  const auto rec = [&](auto&& self, std::size_t pos, int mx) -> void {
    if (pos == n) {
      if (static_cast<std::size_t>(mx) + 1 == k) out.push_back(SetPartition::from_rgs(rgs));
      return;
    }
    const int top = std::min(mx + 1, static_cast<int>(k) - 1);
    for (int label = 0; label <= top; ++label) {
      const int mx2 = std::max(mx, label);
      // prune: the remaining positions must be able to introduce the missing labels
      if (static_cast<std::size_t>(mx2) + 1 + (n - pos - 1) < k) continue;
      rgs[pos] = label;
      self(self, pos + 1, mx2);
    }
  };
  rec(rec, 1, 0);
  return out;
}

CountMatrix count_matrix(const SetPartition& p) {
  require_six_three(p, "count_matrix");
  CountMatrix out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t alpha = 0; alpha < 3; ++alpha) {
      const auto& cell = p.cells()[alpha];
      int c = 0;
      for (int s : kTrueBlocks[i]) {
        if (std::binary_search(cell.begin(), cell.end(), s)) ++c;
      }
      out.counts[i][alpha] = c;
    }
  }
  return out;
}

std::string FamilyTag::to_string() const {
  switch (kind) {
    case Kind::Block:
      return "Block";
    case Kind::Structured114:
      return "Structured114(r=" + std::to_string(r) + ")";
    case Kind::Structured123:
      return "Structured123(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
             ",r=" + std::to_string(r) + ")";
    case Kind::Other:
      break;
  }
  std::string out = "Other(";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes[i]);
  }
  out += ')';
  return out;
}

FamilyTag classify(const SetPartition& p) {
  require_six_three(p, "classify");
  FamilyTag tag;
  tag.sizes = p.size_type();

  if (p.rgs() == std::vector<int>{0, 0, 1, 1, 2, 2}) {
    tag.kind = FamilyTag::Kind::Block;
    return tag;
  }

  if (tag.sizes == std::vector<int>{1, 1, 4}) {
    std::vector<int> singles;
    for (const auto& cell : p.cells()) {
      if (cell.size() == 1) singles.push_back(cell[0]);
    }
    // the two singletons form a true block exactly when they are partners
    if ((singles[0] ^ 1) == singles[1]) {
      tag.kind = FamilyTag::Kind::Structured114;
      tag.r = singles[0] / 2 + 1;
      return tag;
    }
  }

  if (tag.sizes == std::vector<int>{1, 2, 3}) {
    int single = -1;
    const std::vector<int>* pair = nullptr;
    for (const auto& cell : p.cells()) {
      if (cell.size() == 1) single = cell[0];
      if (cell.size() == 2) pair = &cell;
    }
    // intact pair must be a true block; the three-cell is then forced to be
    // the remaining block plus the singleton's partner
    if ((*pair)[0] / 2 == (*pair)[1] / 2) {
      const int pb = (*pair)[0] / 2;
      const int rb = single / 2;
      if (rb != pb) {
        tag.kind = FamilyTag::Kind::Structured123;
        tag.p = pb + 1;
        tag.r = rb + 1;
        tag.q = (0 + 1 + 2) - pb - rb + 1;
        return tag;
      }
    }
  }

  tag.kind = FamilyTag::Kind::Other;
  return tag;
}

SetPartition structured_114_partition(int r) {
  if (r < 1 || r > 3) throw std::invalid_argument("structured_114_partition: r must be 1..3");
  const auto& block = kTrueBlocks[static_cast<std::size_t>(r - 1)];
  std::vector<int> merged;
  for (int s = 0; s < 6; ++s) {
    if (s != block[0] && s != block[1]) merged.push_back(s);
  }
  return SetPartition::from_cells(6, {{block[0]}, {block[1]}, merged});
}

std::array<SetPartition, 2> structured_123_partitions(int p, int q, int r) {
  require_perm123(p, q, r, "structured_123_partitions");
  const auto& bp = kTrueBlocks[static_cast<std::size_t>(p - 1)];
  const auto& bq = kTrueBlocks[static_cast<std::size_t>(q - 1)];
  const auto& br = kTrueBlocks[static_cast<std::size_t>(r - 1)];
  std::array<SetPartition, 2> out;
  for (int which = 0; which < 2; ++which) {
    const int single = br[which];
    const int attached = br[1 - which];
    out[static_cast<std::size_t>(which)] = SetPartition::from_cells(
        6, {{bp[0], bp[1]}, {single}, {bq[0], bq[1], attached}});
  }
  return out;
}

std::vector<SetPartition> structured_partitions() {
  std::vector<SetPartition> out;
  out.reserve(15);
  for (int r = 1; r <= 3; ++r) out.push_back(structured_114_partition(r));
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      for (int r = 1; r <= 3; ++r) {
        if (p == q || p == r || q == r) continue;
        auto both = structured_123_partitions(p, q, r);
        out.push_back(both[0]);
        out.push_back(both[1]);
      }
    }
  }
  return out;
}

}  // namespace detgap
