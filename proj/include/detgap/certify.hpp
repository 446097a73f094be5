#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "detgap/closedform.hpp"
#include "detgap/compression.hpp"
#include "detgap/model.hpp"
#include "detgap/partitions.hpp"

namespace detgap {

// A structured partition's closed-form determinant disagreed with the
// generic compression route; the certificate is void.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CertificateEntry {
  SetPartition partition;
  FamilyTag tag;
  double determinant = 0.0;
  std::optional<double> closed_form;  // structured partitions only
};

struct CertificateReport {
  BlockModelParams params;
  double relaxed = 0.0;
  // all 90 partitions, determinant descending, encoding ascending on ties
  std::vector<CertificateEntry> entries;
  SetPartition maximizer;  // smallest encoding among the tied best
  double maximizer_value = 0.0;
  std::vector<SetPartition> tied_maximizers;  // within 1e-12 of the best
  double block_value = 0.0;
  double gap = 0.0;  // relaxed - maximizer_value
  bool strict_gap = false;
};

// Exhaustive evaluation of all 90 partitions: generic determinants,
// closed-form cross-check for the structured ones (aborts with
// ConsistencyError past 1e-11), maximizer, and the gap verdict.
CertificateReport run_certificate(const BlockModelParams& params);

std::string render_certificate_text(const CertificateReport& rep, double tol);
std::string render_certificate_json(const CertificateReport& rep, double tol);

// Exploratory grid scan over the couplings. Each coupling sweeps
// [c - radius, c + radius] in `steps` values; a_i is recomputed to keep the
// row sums at one; points leaving [0,1] are skipped and counted.
struct GridSpec {
  double radius = 0.0;
  int steps = 1;
};

struct ScanPoint {
  double c12 = 0.0;
  double c13 = 0.0;
  double c23 = 0.0;
  bool skipped = false;
  bool a1 = false;
  bool a2 = false;
  int gap_sign = 0;
};

struct ScanResult {
  GridSpec grid;
  std::vector<ScanPoint> points;
  int total = 0;
  int evaluated = 0;
  int skipped = 0;
  int a1_count = 0;
  int a2_count = 0;
  int both_count = 0;
  int gap_positive = 0;
  int gap_not_positive = 0;
};

ScanResult scan_grid(const BlockModelParams& base, const GridSpec& grid);

}  // namespace detgap
