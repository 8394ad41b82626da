#pragma once

#include <string>
#include <vector>

#include "bcr/concept.hpp"
#include "bcr/rational.hpp"
#include "bcr/verdict.hpp"

namespace bcr {

struct LemmaBound {
  Rational value;
  bool sparse = false;  // m <= 4n, value is 0
};

// m^3 / (64 n^2) for m > 4n
LemmaBound crossing_lemma_bound(const Integer& n, const Integer& m);

struct RatioUpper {
  Rational value;
  std::string theta_class;
  bool simple_only = false;
  Json trace;
};

RatioUpper ratio_upper(ConceptKind kind, const Integer& n, const Integer& m, int k);

// Table 1 entry, e.g. "n^2/k"
std::string theta_class(ConceptKind kind);
// exponent of n in theta_class
int theta_exponent(ConceptKind kind);
bool sharpness_flag(ConceptKind kind);
bool rectilinear_flag(ConceptKind kind);

struct RatioReport {
  ConceptKind kind;
  Integer n, m;
  int ell = 0;
  int k = 0;
  Integer witness_crossings;
  Integer upper_drawing_crossings;
  Rational counting_bound;
  Rational empirical_ratio;
  bool below_threshold = false;
};

RatioReport ratio_report(ConceptKind kind, int ell, int k);

struct ConceptRow {
  ConceptKind kind;
  std::string theta_class;
  int exponent = 0;
  bool sharp = false;
  bool rectilinear = false;
  RatioReport at_threshold;
  std::vector<RatioReport> grid;
  double slope = 0;  // least-squares slope of log ratio against log n
};

// ell grid used for the growth fit: 6 doublings from max(16 * threshold, 256)
std::vector<int> growth_grid(ConceptKind kind, int k);
double loglog_slope(const std::vector<RatioReport>& grid);

ConceptRow table1_row(ConceptKind kind, int k);
std::vector<ConceptRow> table1_report(int k = 2);

Json report_to_json(const RatioReport& r);
Json table1_to_json(const std::vector<ConceptRow>& rows);
std::string table1_text(const std::vector<ConceptRow>& rows);

}  // namespace bcr
