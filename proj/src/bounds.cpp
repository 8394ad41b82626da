#include "bcr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bcr/graph.hpp"
#include "bcr/kuratowski.hpp"
#include "bcr/layouts.hpp"

namespace bcr {

LemmaBound crossing_lemma_bound(const Integer& n, const Integer& m) {
  if (m <= 4 * n) return {Rational(0), true};
  Rational r(Integer(m * m * m), Integer(64 * n * n));
  r.canonicalize();
  return {r, false};
}

std::string theta_class(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::NNIC:
    case ConceptKind::AdjacencyCrossing:
    case ConceptKind::FanCrossing:
    case ConceptKind::WeakFanPlanar:
    case ConceptKind::StrongFanPlanar:
      return "n^2";
    case ConceptKind::KFanCrossingFree:
    case ConceptKind::KApex:
      return "n^2/k";
    case ConceptKind::KEdgeCrossing: return "k";
    case ConceptKind::KGapPlanar: return "n/k";
    default: return "n";
  }
}

int theta_exponent(ConceptKind kind) {
  std::string c = theta_class(kind);
  if (c.rfind("n^2", 0) == 0) return 2;
  if (c[0] == 'n') return 1;
  return 0;
}

bool sharpness_flag(ConceptKind kind) { return has_parameter(kind) && kind != ConceptKind::KGapPlanar; }

bool rectilinear_flag(ConceptKind kind) { return !is_fan_variant(kind); }

RatioUpper ratio_upper(ConceptKind kind, const Integer& n, const Integer& m, int k) {
  if (n < 1 || m < 0) throw ParameterError("n must be positive and m non-negative");
  if (has_parameter(kind) && k < min_k(kind)) throw ParameterError(short_name(kind) + " needs k >= " + std::to_string(min_k(kind)));
  RatioUpper out;
  out.theta_class = theta_class(kind);
  Rational N(n), M(m), K(k);
  Json steps = Json::array();
  auto step = [&](const std::string& what, const Rational& v) {
    steps.push_back(Json{{"step", what}, {"value", to_string(v)}});
  };
  auto maxr = [](const Rational& a, const Rational& b) { return a < b ? b : a; };
  switch (kind) {
    case ConceptKind::KPlanar:
      step("m*k/(k+1)", M * K / (K + 1));
      step("sparse term 4k", 4 * K);
      out.value = maxr(M * K / (K + 1), 4 * K);
      break;
    case ConceptKind::KVertexPlanar:
      step("n*k/(k+1)", N * K / (K + 1));
      step("sparse term k", K);
      out.value = maxr(N * K / (K + 1), K);
      break;
    case ConceptKind::IC:
      out.value = N / 8;
      step("(n/4)/2", out.value);
      break;
    case ConceptKind::NIC:
      out.value = rat(9, 10) * N;
      step("9n/10", out.value);
      break;
    case ConceptKind::KFanCrossingFree:
      step("m^2/(2k)", M * M / (2 * K));
      step("sparse term 8n", 8 * N);
      out.value = maxr(M * M / (2 * K), 8 * N);
      break;
    case ConceptKind::AdjacencyCrossing:
    case ConceptKind::FanCrossing:
      out.simple_only = true;
      [[fallthrough]];
    case ConceptKind::NNIC:
    case ConceptKind::WeakFanPlanar:
    case ConceptKind::StrongFanPlanar:
      step("m^2/4", M * M / 4);
      step("sparse term 8n", 8 * N);
      out.value = maxr(M * M / 4, 8 * N);
      break;
    case ConceptKind::KEdgeCrossing:
      out.value = K;
      step("k", out.value);
      break;
    case ConceptKind::KGapPlanar:
      step("m/k", M / K);
      step("sparse term 4k", 4 * K);
      out.value = maxr(M / K, 4 * K);
      break;
    case ConceptKind::KApex:
      step("m^2/(2(k+1))", M * M / (2 * (K + 1)));
      step("sparse term 8n", 8 * N);
      out.value = maxr(M * M / (2 * (K + 1)), 8 * N);
      break;
    case ConceptKind::Skewness:
      step("m*k/(k+1)", M * K / (K + 1));
      step("sparse term 4k", 4 * K);
      out.value = maxr(M * K / (K + 1), 4 * K);
      break;
  }
  out.trace = Json{{"concept", short_name(kind)},
                   {"class", out.theta_class},
                   {"constants", "implementation-chosen"},
                   {"simple_drawings_only", out.simple_only},
                   {"steps", steps}};
  return out;
}

RatioReport ratio_report(ConceptKind kind, int ell, int k) {
  RatioReport r;
  r.kind = kind;
  r.ell = ell;
  r.k = effective_k(kind, k);
  SizeFormula sz = construction_size(kind, ell, k);
  r.n = sz.n;
  r.m = sz.m;
  r.witness_crossings = crossing_count_formula(kind, Variant::Witness, ell, k);
  r.upper_drawing_crossings = crossing_count_formula(kind, Variant::UpperBound, ell, k);
  CountingBound cb = counting_lower_bound(kind, ell, k);
  r.counting_bound = cb.value;
  r.below_threshold = cb.below_threshold;
  r.empirical_ratio = r.counting_bound / Rational(r.upper_drawing_crossings);
  return r;
}

std::vector<int> growth_grid(ConceptKind kind, int k) {
  int t = ell_threshold(kind, effective_k(kind, k));
  std::vector<int> g;
  int start = std::max(16 * t, 256);
  for (int j = 0; j < 6; ++j) g.push_back(start << j);
  return g;
}

double loglog_slope(const std::vector<RatioReport>& grid) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double cnt = static_cast<double>(grid.size());
  for (const auto& r : grid) {
    double x = std::log(r.n.get_d());
    double y = std::log(to_double(r.empirical_ratio));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

ConceptRow table1_row(ConceptKind kind, int k) {
  if (!has_parameter(kind)) k = effective_k(kind, 1);
  k = std::max(k, min_k(kind));
  ConceptRow row;
  row.kind = kind;
  row.theta_class = theta_class(kind);
  row.exponent = theta_exponent(kind);
  row.sharp = sharpness_flag(kind);
  row.rectilinear = rectilinear_flag(kind);
  row.at_threshold = ratio_report(kind, ell_threshold(kind, effective_k(kind, k)), k);
  for (int ell : growth_grid(kind, k)) row.grid.push_back(ratio_report(kind, ell, k));
  row.slope = loglog_slope(row.grid);
  return row;
}

std::vector<ConceptRow> table1_report(int k) {
  std::vector<ConceptRow> rows;
  for (auto c : all_concepts()) rows.push_back(table1_row(c, k));
  return rows;
}

Json report_to_json(const RatioReport& r) {
  return Json{{"concept", short_name(r.kind)},
              {"n", r.n.get_str()},
              {"m", r.m.get_str()},
              {"ell", r.ell},
              {"k", r.k},
              {"witness_crossings", r.witness_crossings.get_str()},
              {"upper_drawing_crossings", r.upper_drawing_crossings.get_str()},
              {"counting_bound", to_string(r.counting_bound)},
              {"empirical_ratio", to_string(r.empirical_ratio)},
              {"below_threshold", r.below_threshold}};
}

namespace {
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}
}  // namespace

Json table1_to_json(const std::vector<ConceptRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json grid = Json::array();
    for (const auto& r : row.grid) grid.push_back(report_to_json(r));
    out.push_back(Json{{"concept", short_name(row.kind)},
                       {"class", row.theta_class},
                       {"exponent", row.exponent},
                       {"sharp", row.sharp},
                       {"rectilinear", row.rectilinear},
                       {"slope", fmt(row.slope)},
                       {"threshold", report_to_json(row.at_threshold)},
                       {"grid", grid}});
  }
  return out;
}

std::string table1_text(const std::vector<ConceptRow>& rows) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-7s %-6s %-6s %-5s %-4s %-3s %8s %8s %12s %12s\n", "concept", "class", "sharp", "rect",
                "l", "k", "upper", "witness", "bound", "slope");
  out += buf;
  for (const auto& row : rows) {
    const auto& t = row.at_threshold;
    std::string sharp = has_parameter(row.kind) ? (row.sharp ? "yes" : "no") : "-";
    std::snprintf(buf, sizeof buf, "%-7s %-6s %-6s %-5s %-4d %-3d %8s %8s %12s %12s\n", short_name(row.kind).c_str(),
                  row.theta_class.c_str(), sharp.c_str(), row.rectilinear ? "yes" : "no", t.ell, t.k,
                  t.upper_drawing_crossings.get_str().c_str(), t.witness_crossings.get_str().c_str(),
                  to_string(t.counting_bound).c_str(), fmt(row.slope).c_str());
    out += buf;
  }
  return out;
}

}  // namespace bcr
