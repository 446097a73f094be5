#include "detgap/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "detgap/compression.hpp"

namespace detgap {

namespace {

constexpr double kResidualTolerance = 1e-12;
constexpr double kTieTolerance = 1e-12;

const std::array<std::string, 9> kModelKeys = {"a1",  "b1",  "a2",  "b2", "a3",
                                               "b3",  "c12", "c13", "c23"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

double BlockModelParams::coupling(int i, int j) const {
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  if (lo == 0 && hi == 1) return c12;
  if (lo == 0 && hi == 2) return c13;
  return c23;
}

ValidationReport check_params(const BlockModelParams& params) {
  ValidationReport rep;
  const auto check_range = [&rep](const std::string& name, double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      rep.violations.push_back("parameter " + name + " outside [0,1]");
    }
  };
  for (int i = 0; i < 3; ++i) {
    check_range("a" + std::to_string(i + 1), params.a[static_cast<std::size_t>(i)]);
    check_range("b" + std::to_string(i + 1), params.b[static_cast<std::size_t>(i)]);
  }
  check_range("c12", params.c12);
  check_range("c13", params.c13);
  check_range("c23", params.c23);

  rep.row_residuals[0] = params.a[0] + params.b[0] + 2.0 * params.c12 + 2.0 * params.c13 - 1.0;
  rep.row_residuals[1] = params.a[1] + params.b[1] + 2.0 * params.c12 + 2.0 * params.c23 - 1.0;
  rep.row_residuals[2] = params.a[2] + params.b[2] + 2.0 * params.c13 + 2.0 * params.c23 - 1.0;
  for (int i = 0; i < 3; ++i) {
    if (std::fabs(rep.row_residuals[static_cast<std::size_t>(i)]) > kResidualTolerance) {
      std::ostringstream msg;
      msg << "row " << (i + 1) << " sum constraint violated, residual "
          << rep.row_residuals[static_cast<std::size_t>(i)];
      rep.violations.push_back(msg.str());
    }
  }
  return rep;
}

const BlockModelParams& validate(const BlockModelParams& params) {
  const ValidationReport rep = check_params(params);
  if (!rep.ok()) throw ConstraintViolation(rep.violations.front());
  return params;
}

BlockModelParams parse_model_text(const std::string& text) {
  std::map<std::string, double> values;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value', got '" +
                       line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (std::find(kModelKeys.begin(), kModelKeys.end(), key) == kModelKeys.end()) {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (values.count(key)) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    double parsed = 0.0;
    const char* first = val.data();
    const char* last = val.data() + val.size();
    const auto [ptr, ec] = std::from_chars(first, last, parsed);
    if (ec != std::errc{} || ptr != last || val.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": invalid number '" + val + "'");
    }
    values[key] = parsed;
  }
  for (const auto& key : kModelKeys) {
    if (!values.count(key)) throw ParseError("missing key '" + key + "'");
  }
  BlockModelParams params;
  params.a = {values["a1"], values["a2"], values["a3"]};
  params.b = {values["b1"], values["b2"], values["b3"]};
  params.c12 = values["c12"];
  params.c13 = values["c13"];
  params.c23 = values["c23"];
  return params;
}

BlockModelParams parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str());
}

SymMatrix build_P(const BlockModelParams& params) {
  validate(params);
  Matrix m(6, 6);
  for (int bi = 0; bi < 3; ++bi) {
    for (int bj = 0; bj < 3; ++bj) {
      for (int s = 0; s < 2; ++s) {
        for (int u = 0; u < 2; ++u) {
          const std::size_t row = static_cast<std::size_t>(2 * bi + s);
          const std::size_t col = static_cast<std::size_t>(2 * bj + u);
          if (bi == bj) {
            m(row, col) = (s == u) ? params.a[static_cast<std::size_t>(bi)]
                                   : params.b[static_cast<std::size_t>(bi)];
          } else {
            m(row, col) = params.coupling(bi, bj);
          }
        }
      }
    }
  }
  return SymMatrix(std::move(m));
}

SymMatrix quotient_K(const BlockModelParams& params) {
  validate(params);
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          (i == j) ? params.a[static_cast<std::size_t>(i)] + params.b[static_cast<std::size_t>(i)]
                   : 2.0 * params.coupling(i, j);
    }
  }
  return SymMatrix(std::move(m));
}

SpectralSummary derive_spectral(const BlockModelParams& params) {
  validate(params);
  SpectralSummary s;

  const EigenDecomposition ek = eigen_symmetric(quotient_K(params));
  s.kappa2 = ek.eigenvalues[1];
  s.kappa3 = ek.eigenvalues[2];

  for (std::size_t r = 0; r < 3; ++r) {
    s.beta[r] = params.a[r] - params.b[r];
    s.t[r] = s.beta[r] * s.beta[r];
  }
  s.t_star = *std::max_element(s.t.begin(), s.t.end());
  for (int r = 0; r < 3; ++r) {
    if (s.t_star - s.t[static_cast<std::size_t>(r)] < kTieTolerance) s.argmax_r.push_back(r + 1);
  }

  const SymMatrix t_mat = square(build_P(params));
  s.relaxed_benchmark = relaxed_benchmark(t_mat, 3);
  return s;
}

RegimeReport check_regime(const SpectralSummary& s, const SymMatrix& l) {
  if (l.dim() != 3) throw ShapeError("check_regime: L must be 3x3");
  RegimeReport rep;
  rep.kappa2_sq = s.kappa2 * s.kappa2;
  rep.kappa3_sq = s.kappa3 * s.kappa3;
  rep.t_star = s.t_star;
  rep.a1 = rep.kappa2_sq > s.t_star && s.t_star > rep.kappa3_sq;
  rep.a1_upper_margin = rep.kappa2_sq - s.t_star;
  rep.a1_lower_margin = s.t_star - rep.kappa3_sq;

  rep.a2 = true;
  for (int r : s.argmax_r) {
    RegimeReport::A2Entry e;
    e.r = r;
    const std::size_t i = static_cast<std::size_t>(r - 1);
    e.value = (3.0 * l(i, i) - 1.0) / 2.0;
    e.margin = rep.kappa2_sq - e.value;
    e.pass = e.value < rep.kappa2_sq;
    rep.a2 = rep.a2 && e.pass;
    rep.a2_entries.push_back(e);
  }
  return rep;
}

ModelAnalysis analyze(const BlockModelParams& params) {
  validate(params);
  SymMatrix p = build_P(params);
  SymMatrix t = square(p);
  SymMatrix k = quotient_K(params);
  SymMatrix l = square(k);
  SpectralSummary spectral = derive_spectral(params);
  RegimeReport regime = check_regime(spectral, l);
  return ModelAnalysis{params,       std::move(p), std::move(t),    std::move(k),
                       std::move(l), std::move(spectral), std::move(regime)};
}

}  // namespace detgap
