#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bcr/drawing.hpp"
#include "bcr/graph.hpp"

namespace bcr {

using PathTuple = std::array<int, 9>;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// one contributing crossing: c1 < c2, non-adjacent connections
struct CoverageEntry {
  int crossing = -1;
  int c1 = -1;
  int c2 = -1;
  std::vector<int> paths1;  // P_c1[e1]
  std::vector<int> paths2;  // P_c2[e2]
  Rational fraction;
};

struct CoverageLedger {
  std::array<int, 9> widths{};
  Integer kuratowski_count;
  std::vector<CoverageEntry> entries;
  int non_contributing = 0;

  bool covers(const PathTuple& t) const;
};

Integer kuratowski_count(const FrameworkGraph& fg);

// maps every drawing edge to its framework edge by vertex ids
std::vector<int> attribute_edges(const Drawing& d, const FrameworkGraph& fg);

CoverageLedger coverage_ledger(const Drawing& d, const CrossingSet& cs, const FrameworkGraph& fg);
CoverageLedger coverage_ledger(const Drawing& d, const FrameworkGraph& fg);

// BEYONDCR_BUDGET or 10^7
std::uint64_t coverage_budget();

// exact; enumerates tuples when |K| <= budget, else searches merged path classes
Verdict verify_full_coverage(const CoverageLedger& ledger, const FrameworkGraph& fg,
                             std::optional<std::uint64_t> budget = std::nullopt);

struct Restriction {
  Drawing drawing;
  FrameworkGraph fg;
};

// keeps only pole path r of connection c
Restriction restrict(const Drawing& d, const FrameworkGraph& fg, int c, int r);

struct CountingBound {
  Rational value;
  bool below_threshold = false;
  Json trace;
};

CountingBound counting_lower_bound(ConceptKind kind, int ell, int k);

Json ledger_to_json(const CoverageLedger& ledger);
Json tuple_json(const PathTuple& t);

}  // namespace bcr
