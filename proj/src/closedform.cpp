#include "detgap/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detgap/compression.hpp"

namespace detgap {

namespace {

constexpr double kBoundTolerance = 1e-12;
constexpr double kStrictTolerance = 1e-12;

void require_block(int r, const char* op) {
  if (r < 1 || r > 3) {
    throw std::invalid_argument(std::string(op) + ": block index must be 1..3");
  }
}

void require_perm(int p, int q, int r, const char* op) {
  std::array<int, 3> idx{p, q, r};
  std::sort(idx.begin(), idx.end());
  if (idx != std::array<int, 3>{1, 2, 3}) {
    throw std::invalid_argument(std::string(op) + ": (p,q,r) must be a permutation of {1,2,3}");
  }
}

void require_l(const SymMatrix& l, const char* op) {
  if (l.dim() != 3) throw ShapeError(std::string(op) + ": L must be 3x3");
}

}  // namespace

double det_114(int r, const SymMatrix& l, const std::array<double, 3>& t) {
  require_l(l, "det_114");
  require_block(r, "det_114");
  const std::size_t ri = static_cast<std::size_t>(r - 1);
  return t[ri] * (3.0 * l(ri, ri) - 1.0) / 2.0;
}

double det_123(int p, int q, int r, const SymMatrix& l, const std::array<double, 3>& t) {
  require_l(l, "det_123");
  require_perm(p, q, r, "det_123");
  const std::size_t pi = static_cast<std::size_t>(p - 1);
  const std::size_t ri = static_cast<std::size_t>(r - 1);
  return (determinant(l) + t[ri] * (3.0 * l(pi, pi) - 1.0)) / 3.0;
}

SymMatrix explicit_q_114(int r, const SymMatrix& l, const std::array<double, 3>& t) {
  require_l(l, "explicit_q_114");
  require_block(r, "explicit_q_114");
  const std::size_t ri = static_cast<std::size_t>(r - 1);
  const std::size_t pi = (ri == 0) ? 1 : 0;
  const std::size_t qi = (ri == 2) ? 1 : 2;

  const double a_r = (l(pi, pi) + l(qi, qi) + 2.0 * l(pi, qi)) / 2.0;
  const double b_r = (l(pi, ri) + l(qi, ri)) / 2.0;
  const double diag = (l(ri, ri) + t[ri]) / 2.0;
  const double cross = (l(ri, ri) - t[ri]) / 2.0;

  Matrix m(3, 3);
  m(0, 0) = a_r;
  m(0, 1) = m(1, 0) = b_r;
  m(0, 2) = m(2, 0) = b_r;
  m(1, 1) = m(2, 2) = diag;
  m(1, 2) = m(2, 1) = cross;
  return SymMatrix(std::move(m));
}

SymMatrix explicit_q_123(int p, int q, int r, const SymMatrix& l, const std::array<double, 3>& t) {
  require_l(l, "explicit_q_123");
  require_perm(p, q, r, "explicit_q_123");
  const std::size_t pi = static_cast<std::size_t>(p - 1);
  const std::size_t qi = static_cast<std::size_t>(q - 1);
  const std::size_t ri = static_cast<std::size_t>(r - 1);
  const double tr = t[ri];

  Matrix m(3, 3);
  m(0, 0) = l(pi, pi);
  m(0, 1) = m(1, 0) = l(pi, ri) / std::sqrt(2.0);
  m(0, 2) = m(2, 0) = (2.0 * l(pi, qi) + l(pi, ri)) / std::sqrt(6.0);
  m(1, 1) = (l(ri, ri) + tr) / 2.0;
  m(1, 2) = m(2, 1) = l(qi, ri) / std::sqrt(3.0) + (l(ri, ri) - tr) / std::sqrt(12.0);
  m(2, 2) = (2.0 * l(qi, qi) + 2.0 * l(qi, ri)) / 3.0 + (l(ri, ri) + tr) / 6.0;
  return SymMatrix(std::move(m));
}

std::vector<DiagBoundEntry> diag_bound_check(const SymMatrix& l, double kappa2, double kappa3) {
  require_l(l, "diag_bound_check");
  const double k2s = kappa2 * kappa2;
  const double k3s = kappa3 * kappa3;
  const double lo = std::min(k2s, k3s);
  const double hi = std::max(k2s, k3s);

  std::vector<DiagBoundEntry> out;
  out.reserve(3);
  for (int i = 0; i < 3; ++i) {
    DiagBoundEntry e;
    e.i = i + 1;
    const std::size_t ii = static_cast<std::size_t>(i);
    e.value = (3.0 * l(ii, ii) - 1.0) / 2.0;
    e.pass = e.value >= lo - kBoundTolerance && e.value <= hi + kBoundTolerance;
    if (k2s != k3s) e.weight = (e.value - k3s) / (k2s - k3s);
    out.push_back(e);
  }
  return out;
}

FamilyDeterminants family_determinants(const BlockModelParams& params) {
  const SymMatrix t_mat = square(build_P(params));
  const SymMatrix l = square(quotient_K(params));

  FamilyDeterminants out;
  out.det_l = determinant(l);
  std::array<double, 3> t{};
  for (std::size_t r = 0; r < 3; ++r) {
    const double beta = params.a[r] - params.b[r];
    t[r] = beta * beta;
    out.diag_l[r] = l(r, r);
  }
  out.t = t;

  for (const SetPartition& part : structured_partitions()) {
    FamilyDeterminantRow row;
    row.partition = part;
    row.tag = classify(part);
    if (row.tag.kind == FamilyTag::Kind::Structured114) {
      row.closed_form = det_114(row.tag.r, l, t);
      row.explicit_det = determinant(explicit_q_114(row.tag.r, l, t));
    } else {
      row.closed_form = det_123(row.tag.p, row.tag.q, row.tag.r, l, t);
      row.explicit_det = determinant(explicit_q_123(row.tag.p, row.tag.q, row.tag.r, l, t));
    }
    row.generic = det_compression(t_mat, part);
    row.discrepancy = std::fabs(row.closed_form - row.generic);
    out.rows.push_back(std::move(row));
  }
  return out;
}

FamilyGapReport family_gap_check(const SpectralSummary& s, const SymMatrix& l) {
  require_l(l, "family_gap_check");
  FamilyGapReport rep;
  rep.regime = check_regime(s, l);
  rep.applicable = rep.regime.a1 && rep.regime.a2;
  rep.bound = rep.regime.kappa2_sq * s.t_star;

  for (const SetPartition& part : structured_partitions()) {
    FamilyGapEntry e;
    e.partition = part;
    e.tag = classify(part);
    e.value = (e.tag.kind == FamilyTag::Kind::Structured114)
                  ? det_114(e.tag.r, l, s.t)
                  : det_123(e.tag.p, e.tag.q, e.tag.r, l, s.t);
    e.margin = rep.bound - e.value;
    e.strict = e.margin >= kStrictTolerance;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace detgap
