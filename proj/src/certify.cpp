#include "detgap/certify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "detgap/format.hpp"

namespace detgap {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kConsistencyTolerance = 1e-11;

struct FamilyCounts {
  int structured114 = 0;
  int structured123 = 0;
  int block = 0;
  int other = 0;
};

FamilyCounts count_families(const std::vector<CertificateEntry>& entries) {
  FamilyCounts c;
  for (const auto& e : entries) {
    switch (e.tag.kind) {
      case FamilyTag::Kind::Structured114: ++c.structured114; break;
      case FamilyTag::Kind::Structured123: ++c.structured123; break;
      case FamilyTag::Kind::Block: ++c.block; break;
      case FamilyTag::Kind::Other: ++c.other; break;
    }
  }
  return c;
}

std::string model_line(const BlockModelParams& p) {
  std::ostringstream out;
  out << "a1=" << fmt10(p.a[0]) << " b1=" << fmt10(p.b[0]) << " a2=" << fmt10(p.a[1])
      << " b2=" << fmt10(p.b[1]) << " a3=" << fmt10(p.a[2]) << " b3=" << fmt10(p.b[2])
      << " c12=" << fmt10(p.c12) << " c13=" << fmt10(p.c13) << " c23=" << fmt10(p.c23);
  return out.str();
}

void model_json(JsonWriter& w, const BlockModelParams& p) {
  w.obj_begin();
  w.key("a1").number10(p.a[0]);
  w.key("b1").number10(p.b[0]);
  w.key("a2").number10(p.a[1]);
  w.key("b2").number10(p.b[1]);
  w.key("a3").number10(p.a[2]);
  w.key("b3").number10(p.b[2]);
  w.key("c12").number10(p.c12);
  w.key("c13").number10(p.c13);
  w.key("c23").number10(p.c23);
  w.obj_end();
}

}  // namespace

CertificateReport run_certificate(const BlockModelParams& params) {
  const ModelAnalysis ma = analyze(params);

  CertificateReport rep;
  rep.params = params;
  rep.relaxed = ma.spectral.relaxed_benchmark;

  for (const SetPartition& part : enumerate_partitions(6, 3)) {
    CertificateEntry e;
    e.partition = part;
    e.tag = classify(part);
    e.determinant = det_compression(ma.t, part);
    if (e.tag.kind == FamilyTag::Kind::Structured114) {
      e.closed_form = det_114(e.tag.r, ma.l, ma.spectral.t);
    } else if (e.tag.kind == FamilyTag::Kind::Structured123) {
      e.closed_form = det_123(e.tag.p, e.tag.q, e.tag.r, ma.l, ma.spectral.t);
    }
    if (e.closed_form && std::fabs(*e.closed_form - e.determinant) >= kConsistencyTolerance) {
      throw ConsistencyError("closed form and compression disagree for " + part.to_string() +
                             ": " + std::to_string(*e.closed_form) + " vs " +
                             std::to_string(e.determinant));
    }
    if (e.tag.kind == FamilyTag::Kind::Block) rep.block_value = e.determinant;
    rep.entries.push_back(std::move(e));
  }

  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const CertificateEntry& a, const CertificateEntry& b) {
              if (a.determinant != b.determinant) return a.determinant > b.determinant;
              return a.partition < b.partition;
            });

  const double best = rep.entries.front().determinant;
  for (const auto& e : rep.entries) {
    if (best - e.determinant <= kTieTolerance) rep.tied_maximizers.push_back(e.partition);
  }
  std::sort(rep.tied_maximizers.begin(), rep.tied_maximizers.end());
  rep.maximizer = rep.tied_maximizers.front();
  for (const auto& e : rep.entries) {
    if (e.partition == rep.maximizer) {
      rep.maximizer_value = e.determinant;
      break;
    }
  }

  rep.gap = rep.relaxed - rep.maximizer_value;
  rep.strict_gap = rep.gap > 0.0;
  return rep;
}

std::string render_certificate_text(const CertificateReport& rep, double tol) {
  const FamilyCounts fam = count_families(rep.entries);
  std::ostringstream out;
  out << "partition compression certificate\n";
  out << "model: " << model_line(rep.params) << "\n";
  out << "partitions: " << rep.entries.size() << "\n";
  out << "relaxed benchmark: " << fmt10(rep.relaxed) << "\n";
  out << "block partition value: " << fmt10(rep.block_value) << "\n";
  out << "maximizer: " << rep.maximizer.to_string() << "\n";
  out << "maximizer determinant: " << fmt10(rep.maximizer_value) << "\n";
  out << "tied maximizers:";
  for (const auto& p : rep.tied_maximizers) out << " " << p.to_string();
  out << "\n";
  out << "gap: " << fmt10(rep.gap) << "\n";
  out << "verdict: " << (rep.strict_gap ? "strict gap" : "no strict gap") << "\n";
  out << "tolerance: " << fmt10(tol) << "\n";
  out << "gap exceeds tolerance: " << (rep.gap >= tol ? "yes" : "no") << "\n";
  out << "families: Structured114=" << fam.structured114 << " Structured123=" << fam.structured123
      << " Block=" << fam.block << " Other=" << fam.other << "\n";
  out << "\n";
  out << "rank  determinant   family                       partition\n";
  int rank = 0;
  for (const auto& e : rep.entries) {
    out << std::setw(4) << ++rank << "  " << fmt10(e.determinant) << "  " << std::left
        << std::setw(27) << e.tag.to_string() << std::right << "  "
        << e.partition.to_string() << "\n";
  }
  return out.str();
}

std::string render_certificate_json(const CertificateReport& rep, double tol) {
  const FamilyCounts fam = count_families(rep.entries);
  JsonWriter w;
  w.obj_begin();
  w.key("report").str("certificate");
  w.key("model");
  model_json(w, rep.params);
  w.key("partition_count").integer(static_cast<long long>(rep.entries.size()));
  w.key("relaxed_benchmark").number10(rep.relaxed);
  w.key("block_partition_value").number10(rep.block_value);
  w.key("maximizer");
  w.obj_begin();
  w.key("partition").raw(rep.maximizer.to_string());
  for (const auto& e : rep.entries) {
    if (e.partition == rep.maximizer) {
      w.key("family").str(e.tag.to_string());
      break;
    }
  }
  w.key("determinant").number10(rep.maximizer_value);
  w.obj_end();
  w.key("tied_maximizers").arr_begin();
  for (const auto& p : rep.tied_maximizers) w.raw(p.to_string());
  w.arr_end();
  w.key("gap").number10(rep.gap);
  w.key("strict_gap").boolean(rep.strict_gap);
  w.key("tolerance").number10(tol);
  w.key("gap_exceeds_tolerance").boolean(rep.gap >= tol);
  w.key("families");
  w.obj_begin();
  w.key("Structured114").integer(fam.structured114);
  w.key("Structured123").integer(fam.structured123);
  w.key("Block").integer(fam.block);
  w.key("Other").integer(fam.other);
  w.obj_end();
  w.key("entries").arr_begin();
  int rank = 0;
  for (const auto& e : rep.entries) {
    w.obj_begin();
    w.key("rank").integer(++rank);
    w.key("partition").raw(e.partition.to_string());
    w.key("family").str(e.tag.to_string());
    w.key("determinant").number10(e.determinant);
    w.obj_end();
  }
  w.arr_end();
  w.obj_end();
  return w.out() + "\n";
}

ScanResult scan_grid(const BlockModelParams& base, const GridSpec& grid) {
  validate(base);
  if (grid.steps < 1) throw std::invalid_argument("scan_grid: steps must be >= 1");
  if (grid.radius < 0.0) throw std::invalid_argument("scan_grid: radius must be >= 0");

  std::vector<double> offsets;
  if (grid.steps == 1) {
    offsets.push_back(0.0);
  } else {
    for (int i = 0; i < grid.steps; ++i) {
      offsets.push_back(-grid.radius +
                        2.0 * grid.radius * static_cast<double>(i) /
                            static_cast<double>(grid.steps - 1));
    }
  }

  ScanResult res;
  res.grid = grid;
  for (double d12 : offsets) {
    for (double d13 : offsets) {
      for (double d23 : offsets) {
        BlockModelParams m = base;
        m.c12 = base.c12 + d12;
        m.c13 = base.c13 + d13;
        m.c23 = base.c23 + d23;
        // keep b fixed, restore the row sums through a
        m.a[0] = 1.0 - m.b[0] - 2.0 * m.c12 - 2.0 * m.c13;
        m.a[1] = 1.0 - m.b[1] - 2.0 * m.c12 - 2.0 * m.c23;
        m.a[2] = 1.0 - m.b[2] - 2.0 * m.c13 - 2.0 * m.c23;

        ScanPoint pt;
        pt.c12 = m.c12;
        pt.c13 = m.c13;
        pt.c23 = m.c23;
        if (!check_params(m).ok()) {
          pt.skipped = true;
          ++res.skipped;
        } else {
          const ModelAnalysis ma = analyze(m);
          const CertificateReport cert = run_certificate(m);
          pt.a1 = ma.regime.a1;
          pt.a2 = ma.regime.a2;
          pt.gap_sign = (cert.gap > 0.0) ? 1 : (cert.gap < 0.0 ? -1 : 0);
          ++res.evaluated;
          if (pt.a1) ++res.a1_count;
          if (pt.a2) ++res.a2_count;
          if (pt.a1 && pt.a2) ++res.both_count;
          if (pt.gap_sign > 0) {
            ++res.gap_positive;
          } else {
            ++res.gap_not_positive;
          }
        }
        res.points.push_back(pt);
      }
    }
  }
  res.total = static_cast<int>(res.points.size());
  return res;
}

}  // namespace detgap
