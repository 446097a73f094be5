#pragma once

#include <array>
#include <optional>
#include <vector>

#include "detgap/linalg.hpp"
#include "detgap/model.hpp"
#include "detgap/partitions.hpp"

namespace detgap {

// Closed determinant of the (1,1,4) partition that splits block r:
// t_r (3 l_rr - 1) / 2. Block indices are 1-based throughout this module.
double det_114(int r, const SymMatrix& l, const std::array<double, 3>& t);

// Closed determinant of a (1,2,3) partition with intact block p, attachment
// block q, split block r: (det L + t_r (3 l_pp - 1)) / 3.
double det_123(int p, int q, int r, const SymMatrix& l, const std::array<double, 3>& t);

// Explicit compression matrices in the ordered cell basis (merged four-cell,
// singleton, singleton) resp. (intact pair, split singleton, three-cell),
// built from L entries and t_r only.
SymMatrix explicit_q_114(int r, const SymMatrix& l, const std::array<double, 3>& t);
SymMatrix explicit_q_123(int p, int q, int r, const SymMatrix& l, const std::array<double, 3>& t);

struct DiagBoundEntry {
  int i = 0;                      // 1-based
  double value = 0.0;             // (3 l_ii - 1) / 2
  std::optional<double> weight;   // position between kappa3^2 and kappa2^2; empty when degenerate
  bool pass = false;
};

// Per-diagonal check that (3 l_ii - 1)/2 lies between kappa3^2 and kappa2^2
// (tolerance 1e-12). L must be K^2 for a symmetric stochastic K with
// eigenvalues 1, kappa2, kappa3.
std::vector<DiagBoundEntry> diag_bound_check(const SymMatrix& l, double kappa2, double kappa3);

struct FamilyDeterminantRow {
  SetPartition partition;
  FamilyTag tag;
  double closed_form = 0.0;
  double explicit_det = 0.0;  // determinant of the explicit matrix route
  double generic = 0.0;       // det H^T T H through the 6x6 model
  double discrepancy = 0.0;   // |closed_form - generic|
};

struct FamilyDeterminants {
  std::vector<FamilyDeterminantRow> rows;  // the 15 structured partitions
  double det_l = 0.0;
  std::array<double, 3> diag_l{};
  std::array<double, 3> t{};
};

// Both determinant routes for every structured partition of a model.
FamilyDeterminants family_determinants(const BlockModelParams& params);

struct FamilyGapEntry {
  SetPartition partition;
  FamilyTag tag;
  double value = 0.0;   // closed-form determinant
  double margin = 0.0;  // kappa2^2 t_* - value
  bool strict = false;  // margin >= 1e-12, i.e. numerically strict
};

struct FamilyGapReport {
  bool applicable = false;  // A1 and A2 both hold; otherwise the bound is vacuous
  RegimeReport regime;
  double bound = 0.0;  // kappa2^2 t_*
  std::vector<FamilyGapEntry> entries;
};

// Strict family-gap inequality for all 15 structured partitions, with
// margins. L must be K^2 of the summarized model.
FamilyGapReport family_gap_check(const SpectralSummary& s, const SymMatrix& l);

}  // namespace detgap
