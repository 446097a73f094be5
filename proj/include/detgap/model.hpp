#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "detgap/linalg.hpp"

namespace detgap {

// A parameter or row-sum constraint of the block model is violated.
class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A model file could not be read or parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The nine scalars of the block-structured six-state chain: intra-block
// diagonal a_i, intra-block off-diagonal b_i, inter-block couplings c_ij.
struct BlockModelParams {
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  double c12 = 0.0;
  double c13 = 0.0;
  double c23 = 0.0;

  // coupling between distinct blocks i and j, zero-based
  double coupling(int i, int j) const;
};

struct ValidationReport {
  std::array<double, 3> row_residuals{};
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the [0,1] bounds and the three row-sum constraints (tolerance
// 1e-12 on the residuals). Never throws.
ValidationReport check_params(const BlockModelParams& params);

// Returns the params when valid, otherwise throws ConstraintViolation
// naming the first offending constraint.
const BlockModelParams& validate(const BlockModelParams& params);

// Flat key-value model format: lines "key = value" with keys
// a1,b1,a2,b2,a3,b3,c12,c13,c23 and decimal values; '#' starts a comment.
BlockModelParams parse_model_text(const std::string& text);
BlockModelParams parse_model_file(const std::string& path);

// 6x6 transition matrix with A_i blocks on the diagonal and c_ij J blocks
// off the diagonal.
SymMatrix build_P(const BlockModelParams& params);

// 3x3 quotient on the normalized block indicators: K[i][i] = a_i + b_i,
// K[i][j] = 2 c_ij.
SymMatrix quotient_K(const BlockModelParams& params);

struct SpectralSummary {
  double kappa2 = 0.0;  // second and third eigenvalues of K, descending
  double kappa3 = 0.0;
  std::array<double, 3> beta{};  // local modes a_r - b_r
  std::array<double, 3> t{};     // beta_r^2
  double t_star = 0.0;
  std::vector<int> argmax_r;  // 1-based blocks with t_r = t_* (ties within 1e-12)
  double relaxed_benchmark = 0.0;  // product of the top-3 eigenvalues of T = P^2
};

SpectralSummary derive_spectral(const BlockModelParams& params);

struct RegimeReport {
  double kappa2_sq = 0.0;
  double kappa3_sq = 0.0;
  double t_star = 0.0;
  bool a1 = false;              // kappa2^2 > t_* > kappa3^2
  double a1_upper_margin = 0.0;  // kappa2^2 - t_*
  double a1_lower_margin = 0.0;  // t_* - kappa3^2

  struct A2Entry {
    int r = 0;           // 1-based
    double value = 0.0;  // (3 l_rr - 1) / 2
    double margin = 0.0;  // kappa2^2 - value
    bool pass = false;
  };
  std::vector<A2Entry> a2_entries;  // one per argmax block
  bool a2 = false;
};

// Strict A1/A2 checks with margins. L must be K^2.
RegimeReport check_regime(const SpectralSummary& s, const SymMatrix& l);

// Everything the reports need, derived once.
struct ModelAnalysis {
  BlockModelParams params;
  SymMatrix p;
  SymMatrix t;  // P^2
  SymMatrix k;
  SymMatrix l;  // K^2
  SpectralSummary spectral;
  RegimeReport regime;
};

ModelAnalysis analyze(const BlockModelParams& params);

}  // namespace detgap
