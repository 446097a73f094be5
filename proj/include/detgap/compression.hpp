#pragma once

#include <cstddef>

#include "detgap/linalg.hpp"
#include "detgap/partitions.hpp"

namespace detgap {

// n x k frame whose columns are normalized cell indicators 1_A / sqrt(|A|),
// ordered by the canonical cell order of the partition. Columns have
// disjoint supports, so the frame is an isometry by construction.
struct IndicatorFrame {
  Matrix columns;
};

IndicatorFrame build_frame(const SetPartition& p, std::size_t n);

// H^T T H for an indicator frame H.
SymMatrix compress(const SymMatrix& t, const IndicatorFrame& h);

// Product of the k largest eigenvalues of T. T must be positive
// semidefinite (minimum eigenvalue >= -1e-10); throws std::domain_error
// otherwise.
double relaxed_benchmark(const SymMatrix& t, std::size_t k);

// det H^T T H; depends only on the unordered partition.
double det_compression(const SymMatrix& t, const SetPartition& p);

}  // namespace detgap
