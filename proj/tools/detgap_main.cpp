#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "detgap/certify.hpp"
#include "detgap/closedform.hpp"
#include "detgap/compression.hpp"
#include "detgap/format.hpp"
#include "detgap/model.hpp"
#include "detgap/partitions.hpp"

namespace {

using namespace detgap;

constexpr int kExitOk = 0;
constexpr int kExitNoStrictGap = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::string model_path;
  std::string format = "text";
  std::string out_path;
  double tol = 1e-9;
  std::size_t n = 6;
  std::size_t k = 3;
  double radius = 0.0;
  int steps = 1;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file '" + opt.out_path + "'");
  out << text;
}

bool json_format(const Options& opt) { return opt.format != "text"; }

// ---- validate ----

int cmd_validate(const Options& opt) {
  const BlockModelParams params = parse_model_file(opt.model_path);
  const ValidationReport rep = check_params(params);
  std::string body;
  if (json_format(opt)) {
    JsonWriter w;
    w.obj_begin();
    w.key("report").str("validate");
    w.key("row_residuals").arr_begin();
    for (double r : rep.row_residuals) w.number10(r);
    w.arr_end();
    w.key("violations").arr_begin();
    for (const auto& v : rep.violations) w.str(v);
    w.arr_end();
    w.key("valid").boolean(rep.ok());
    w.obj_end();
    body = w.out() + "\n";
  } else {
    std::ostringstream out;
    out << "model validation\n";
    for (int i = 0; i < 3; ++i) {
      const double r = rep.row_residuals[static_cast<std::size_t>(i)];
      out << "row " << (i + 1) << " residual: " << fmt10(r) << "  "
          << (std::fabs(r) <= 1e-12 ? "pass" : "fail") << "\n";
    }
    bool range_ok = true;
    for (const auto& v : rep.violations) {
      if (v.find("outside [0,1]") != std::string::npos) range_ok = false;
    }
    out << "parameter range [0,1]: " << (range_ok ? "pass" : "fail") << "\n";
    for (const auto& v : rep.violations) out << "violation: " << v << "\n";
    out << "verdict: " << (rep.ok() ? "valid" : "invalid") << "\n";
    body = out.str();
  }
  emit(opt, body);
  return rep.ok() ? kExitOk : kExitInvalid;
}

// ---- spectrum ----

int cmd_spectrum(const Options& opt) {
  const BlockModelParams params = parse_model_file(opt.model_path);
  const ModelAnalysis ma = analyze(params);
  const auto diag = diag_bound_check(ma.l, ma.spectral.kappa2, ma.spectral.kappa3);

  std::string body;
  if (json_format(opt)) {
    JsonWriter w;
    w.obj_begin();
    w.key("report").str("spectrum");
    w.key("kappa2").number10(ma.spectral.kappa2);
    w.key("kappa3").number10(ma.spectral.kappa3);
    w.key("beta").arr_begin();
    for (double b : ma.spectral.beta) w.number10(b);
    w.arr_end();
    w.key("t").arr_begin();
    for (double t : ma.spectral.t) w.number10(t);
    w.arr_end();
    w.key("t_star").number10(ma.spectral.t_star);
    w.key("argmax_r").arr_begin();
    for (int r : ma.spectral.argmax_r) w.integer(r);
    w.arr_end();
    w.key("relaxed_benchmark").number10(ma.spectral.relaxed_benchmark);
    w.key("kappa2_sq").number10(ma.regime.kappa2_sq);
    w.key("kappa3_sq").number10(ma.regime.kappa3_sq);
    w.key("a1").boolean(ma.regime.a1);
    w.key("a1_upper_margin").number10(ma.regime.a1_upper_margin);
    w.key("a1_lower_margin").number10(ma.regime.a1_lower_margin);
    w.key("a2").boolean(ma.regime.a2);
    w.key("a2_entries").arr_begin();
    for (const auto& e : ma.regime.a2_entries) {
      w.obj_begin();
      w.key("r").integer(e.r);
      w.key("value").number10(e.value);
      w.key("margin").number10(e.margin);
      w.key("pass").boolean(e.pass);
      w.obj_end();
    }
    w.arr_end();
    w.key("diag_bound").arr_begin();
    for (const auto& e : diag) {
      w.obj_begin();
      w.key("i").integer(e.i);
      w.key("value").number10(e.value);
      if (e.weight) {
        w.key("weight").number10(*e.weight);
      } else {
        w.key("weight").raw("null");
      }
      w.key("pass").boolean(e.pass);
      w.obj_end();
    }
    w.arr_end();
    w.obj_end();
    body = w.out() + "\n";
  } else {
    std::ostringstream out;
    out << "spectral summary\n";
    out << "kappa2: " << fmt10(ma.spectral.kappa2) << "\n";
    out << "kappa3: " << fmt10(ma.spectral.kappa3) << "\n";
    for (int r = 0; r < 3; ++r) {
      out << "beta" << (r + 1) << ": " << fmt10(ma.spectral.beta[static_cast<std::size_t>(r)])
          << "  t" << (r + 1) << ": " << fmt10(ma.spectral.t[static_cast<std::size_t>(r)])
          << "\n";
    }
    out << "t_star: " << fmt10(ma.spectral.t_star) << "  argmax r:";
    for (int r : ma.spectral.argmax_r) out << " " << r;
    out << "\n";
    out << "relaxed benchmark: " << fmt10(ma.spectral.relaxed_benchmark) << "\n";
    out << "kappa2^2: " << fmt10(ma.regime.kappa2_sq) << "\n";
    out << "kappa3^2: " << fmt10(ma.regime.kappa3_sq) << "\n";
    out << "A1 (kappa2^2 > t_star > kappa3^2): " << (ma.regime.a1 ? "holds" : "fails")
        << "  margins " << fmt10(ma.regime.a1_upper_margin) << " / "
        << fmt10(ma.regime.a1_lower_margin) << "\n";
    out << "A2 ((3 l_rr - 1)/2 < kappa2^2 at argmax): " << (ma.regime.a2 ? "holds" : "fails")
        << "\n";
    for (const auto& e : ma.regime.a2_entries) {
      out << "  r=" << e.r << "  value " << fmt10(e.value) << "  margin " << fmt10(e.margin)
          << "  " << (e.pass ? "pass" : "fail") << "\n";
    }
    out << "diagonal bound (between kappa3^2 and kappa2^2):\n";
    for (const auto& e : diag) {
      out << "  i=" << e.i << "  value " << fmt10(e.value) << "  weight "
          << (e.weight ? fmt10(*e.weight) : std::string("undefined")) << "  "
          << (e.pass ? "pass" : "fail") << "\n";
    }
    body = out.str();
  }
  emit(opt, body);
  return kExitOk;
}

// ---- certify ----

int cmd_certify(const Options& opt) {
  const BlockModelParams params = parse_model_file(opt.model_path);
  const CertificateReport rep = run_certificate(params);
  emit(opt, json_format(opt) ? render_certificate_json(rep, opt.tol)
                             : render_certificate_text(rep, opt.tol));
  return rep.strict_gap ? kExitOk : kExitNoStrictGap;
}

// ---- enumerate ----

int cmd_enumerate(const Options& opt) {
  const auto parts = enumerate_partitions(opt.n, opt.k);
  const bool tagged = (opt.n == 6 && opt.k == 3);

  int n114 = 0, n123 = 0, nblock = 0, nother = 0;
  std::string body;
  if (json_format(opt)) {
    JsonWriter w;
    w.obj_begin();
    w.key("report").str("enumerate");
    w.key("n").integer(static_cast<long long>(opt.n));
    w.key("k").integer(static_cast<long long>(opt.k));
    w.key("count").integer(static_cast<long long>(parts.size()));
    w.key("partitions").arr_begin();
    for (const auto& p : parts) {
      w.obj_begin();
      w.key("partition").raw(p.to_string());
      if (tagged) {
        const FamilyTag tag = classify(p);
        switch (tag.kind) {
          case FamilyTag::Kind::Structured114: ++n114; break;
          case FamilyTag::Kind::Structured123: ++n123; break;
          case FamilyTag::Kind::Block: ++nblock; break;
          case FamilyTag::Kind::Other: ++nother; break;
        }
        w.key("family").str(tag.to_string());
      }
      w.obj_end();
    }
    w.arr_end();
    if (tagged) {
      w.key("families");
      w.obj_begin();
      w.key("Structured114").integer(n114);
      w.key("Structured123").integer(n123);
      w.key("Block").integer(nblock);
      w.key("Other").integer(nother);
      w.obj_end();
    }
    w.obj_end();
    body = w.out() + "\n";
  } else {
    std::ostringstream out;
    for (const auto& p : parts) {
      if (tagged) {
        const FamilyTag tag = classify(p);
        switch (tag.kind) {
          case FamilyTag::Kind::Structured114: ++n114; break;
          case FamilyTag::Kind::Structured123: ++n123; break;
          case FamilyTag::Kind::Block: ++nblock; break;
          case FamilyTag::Kind::Other: ++nother; break;
        }
        out << std::left << std::setw(28) << p.to_string() << std::right << tag.to_string()
            << "\n";
      } else {
        out << p.to_string() << "\n";
      }
    }
    out << "count: " << parts.size() << "\n";
    if (tagged) {
      out << "families: Structured114=" << n114 << " Structured123=" << n123
          << " Block=" << nblock << " Other=" << nother << "\n";
    }
    body = out.str();
  }
  emit(opt, body);
  return kExitOk;
}

// ---- closed-forms ----

int cmd_closed_forms(const Options& opt) {
  const BlockModelParams params = parse_model_file(opt.model_path);
  validate(params);
  const FamilyDeterminants fam = family_determinants(params);

  std::string body;
  if (json_format(opt)) {
    JsonWriter w;
    w.obj_begin();
    w.key("report").str("closed-forms");
    w.key("det_L").number10(fam.det_l);
    w.key("diag_L").arr_begin();
    for (double v : fam.diag_l) w.number10(v);
    w.arr_end();
    w.key("t").arr_begin();
    for (double v : fam.t) w.number10(v);
    w.arr_end();
    w.key("rows").arr_begin();
    for (const auto& row : fam.rows) {
      w.obj_begin();
      w.key("partition").raw(row.partition.to_string());
      w.key("family").str(row.tag.to_string());
      w.key("closed_form").number10(row.closed_form);
      w.key("explicit_det").number10(row.explicit_det);
      w.key("generic").number10(row.generic);
      w.key("discrepancy").raw(fmt_fixed(row.discrepancy, 15));
      w.obj_end();
    }
    w.arr_end();
    w.obj_end();
    body = w.out() + "\n";
  } else {
    std::ostringstream out;
    out << "closed-form determinants\n";
    out << "det L: " << fmt10(fam.det_l) << "\n";
    out << "diag L: " << fmt10(fam.diag_l[0]) << " " << fmt10(fam.diag_l[1]) << " "
        << fmt10(fam.diag_l[2]) << "\n";
    out << "t: " << fmt10(fam.t[0]) << " " << fmt10(fam.t[1]) << " " << fmt10(fam.t[2]) << "\n\n";
    out << "family                       closed-form   explicit      generic       discrepancy"
           "        partition\n";
    for (const auto& row : fam.rows) {
      out << std::left << std::setw(27) << row.tag.to_string() << std::right << "  "
          << fmt10(row.closed_form) << "  " << fmt10(row.explicit_det) << "  "
          << fmt10(row.generic) << "  " << fmt_fixed(row.discrepancy, 15) << "  "
          << row.partition.to_string() << "\n";
    }
    body = out.str();
  }
  emit(opt, body);
  return kExitOk;
}

// ---- scan ----

int cmd_scan(const Options& opt) {
  const BlockModelParams params = parse_model_file(opt.model_path);
  const ScanResult res = scan_grid(params, GridSpec{opt.radius, opt.steps});

  std::string body;
  if (json_format(opt)) {
    JsonWriter w;
    w.obj_begin();
    w.key("report").str("scan");
    w.key("exploratory").boolean(true);
    w.key("radius").number10(res.grid.radius);
    w.key("steps").integer(res.grid.steps);
    w.key("total").integer(res.total);
    w.key("evaluated").integer(res.evaluated);
    w.key("skipped").integer(res.skipped);
    w.key("a1_holds").integer(res.a1_count);
    w.key("a2_holds").integer(res.a2_count);
    w.key("a1_and_a2").integer(res.both_count);
    w.key("gap_positive").integer(res.gap_positive);
    w.key("gap_not_positive").integer(res.gap_not_positive);
    w.obj_end();
    body = w.out() + "\n";
  } else {
    std::ostringstream out;
    out << "coupling grid scan (exploratory, no claims)\n";
    out << "radius: " << fmt10(res.grid.radius) << "  steps: " << res.grid.steps
        << "  points: " << res.total << "\n";
    out << "evaluated: " << res.evaluated << "  skipped: " << res.skipped << "\n";
    out << "A1 holds: " << res.a1_count << "\n";
    out << "A2 holds: " << res.a2_count << "\n";
    out << "A1 and A2: " << res.both_count << "\n";
    out << "gap positive: " << res.gap_positive << "\n";
    out << "gap not positive: " << res.gap_not_positive << "\n";
    body = out.str();
  }
  emit(opt, body);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral compression gap toolkit for block-structured six-state chains"};
  app.require_subcommand(1);

  Options opt;

  const auto add_common = [&opt](CLI::App* sub, bool needs_model) {
    if (needs_model) {
      sub->add_option("--model", opt.model_path, "model parameter file")->required();
    }
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "json-like"}))
        ->default_val("text");
    sub->add_option("--out", opt.out_path, "write the report to a file instead of stdout");
    sub->add_option("--tol", opt.tol, "certified comparison tolerance")
        ->check(CLI::Range(1e-300, 1e-3))
        ->default_val(1e-9);
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the model constraints");
  add_common(validate_cmd, true);

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "print the spectral summary");
  add_common(spectrum_cmd, true);

  CLI::App* certify_cmd =
      app.add_subcommand("certify", "evaluate all 90 partitions and certify the gap");
  add_common(certify_cmd, true);

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list partitions of n states into k cells");
  add_common(enumerate_cmd, false);
  enumerate_cmd->add_option("--n", opt.n, "number of states")->default_val(6);
  enumerate_cmd->add_option("--k", opt.k, "number of cells")->default_val(3);

  CLI::App* closed_cmd =
      app.add_subcommand("closed-forms", "closed-form vs generic determinants per structured partition");
  add_common(closed_cmd, true);

  CLI::App* scan_cmd = app.add_subcommand("scan", "exploratory grid scan over the couplings");
  add_common(scan_cmd, true);
  scan_cmd->add_option("--radius", opt.radius, "half-width of the coupling grid")
      ->check(CLI::NonNegativeNumber)
      ->default_val(0.0);
  scan_cmd->add_option("--steps", opt.steps, "grid values per coupling")
      ->check(CLI::PositiveNumber)
      ->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(opt);
    if (app.got_subcommand(spectrum_cmd)) return cmd_spectrum(opt);
    if (app.got_subcommand(certify_cmd)) return cmd_certify(opt);
    if (app.got_subcommand(enumerate_cmd)) return cmd_enumerate(opt);
    if (app.got_subcommand(closed_cmd)) return cmd_closed_forms(opt);
    if (app.got_subcommand(scan_cmd)) return cmd_scan(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ConstraintViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
