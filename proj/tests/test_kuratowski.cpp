#include <gtest/gtest.h>

#include <cstdlib>

#include "bcr/kuratowski.hpp"
#include "bcr/layouts.hpp"
#include "oracles.hpp"

using namespace bcr;

namespace {

struct Inst {
  StandardDrawing sd;
  CrossingSet cs;
  CoverageLedger L;
};

Inst inst(ConceptKind c, int ell, int k, Variant v) {
  StandardDrawing sd = standard_drawing(c, ell, k, v);
  CrossingSet cs = compute_crossings(sd.drawing);
  CoverageLedger L = coverage_ledger(sd.drawing, cs, sd.fg);
  return {std::move(sd), std::move(cs), std::move(L)};
}

}  // namespace

TEST(Ledger, IcWitnessBlueBlueFractions) {
  Inst in = inst(ConceptKind::IC, 2, 1, Variant::Witness);
  ASSERT_EQ(in.L.entries.size(), 4u);
  for (const auto& en : in.L.entries) EXPECT_EQ(en.fraction, Rational(1, 4));
}

TEST(Ledger, KPlanarRedYellowFraction) {
  for (int k = 1; k <= 3; ++k) {
    Inst in = inst(ConceptKind::KPlanar, 2, k, Variant::UpperBound);
    ASSERT_EQ(in.L.entries.size(), static_cast<size_t>(k + 1));
    for (const auto& en : in.L.entries) {
      EXPECT_EQ(en.fraction, rat(1, k + 1));
      // rectangle size by enumeration
      long hit = 0, all = 0;
      for (int p = 0; p < in.L.widths[en.c1]; ++p)
        for (int q = 0; q < in.L.widths[en.c2]; ++q, ++all)
          hit += std::count(en.paths1.begin(), en.paths1.end(), p) && std::count(en.paths2.begin(), en.paths2.end(), q);
      EXPECT_EQ(rat(hit, all), en.fraction);
    }
  }
}

TEST(Ledger, OnlyNonAdjacentConnectionsContribute) {
  Inst in = inst(ConceptKind::AdjacencyCrossing, 2, 1, Variant::Witness);
  EXPECT_EQ(in.L.non_contributing, 54);  // K7-internal crossings
  for (const auto& en : in.L.entries) EXPECT_FALSE(Frame::adjacent(en.c1, en.c2));
}

TEST(Ledger, BundleEdgesLieOnOnePath) {
  Inst in = inst(ConceptKind::KFanCrossingFree, 3, 2, Variant::Witness);
  for (const auto& en : in.L.entries) {
    EXPECT_EQ(en.paths1.size(), 1u);
    EXPECT_EQ(en.paths2.size(), 1u);
  }
}

TEST(Ledger, CrossingFreeDrawingGivesEmptyLedger) {
  Recipe r;
  for (auto col : {Color::Red, Color::Blue, Color::Yellow, Color::Gray}) r[col] = ConGraphSpec::single_edge();
  FrameworkGraph fg = build_framework_graph(build_frame(Coloring::Standard), r);
  // a crossing-free sub-drawing of the bare frame
  Drawing part;
  part.graph.add_vertex("v1");
  part.graph.add_vertex("w1");
  part.pos = {{0, 0}, {1, 0}};
  part.graph.add_edge(0, 1);
  part.set_straight(0);
  CoverageLedger L = coverage_ledger(part, fg);
  EXPECT_TRUE(L.entries.empty());
  EXPECT_FALSE(verify_full_coverage(L, fg).holds);
}

TEST(Ledger, UnattributableEdgeIsAnError) {
  StandardDrawing sd = standard_drawing(ConceptKind::IC, 2, 1, Variant::Witness);
  Drawing d = sd.drawing;
  int a = d.graph.find_vertex("v1"), b = d.graph.find_vertex("v2");
  int e = d.graph.add_edge(a, b);
  d.curve.emplace_back();
  d.set_straight(e);
  EXPECT_THROW(coverage_ledger(d, CrossingSet{}, sd.fg), GraphError);
}

TEST(Coverage, MatchesBruteForceOnEveryTuple) {
  for (auto c : {ConceptKind::IC, ConceptKind::NIC, ConceptKind::KApex, ConceptKind::Skewness, ConceptKind::KPlanar})
    for (auto v : {Variant::Witness, Variant::UpperBound}) {
      Inst in = inst(c, 2, min_k(c), v);
      if (in.L.kuratowski_count > 300000) continue;
      long mismatch = 0, covered = 0;
      oracle::for_each_tuple(in.sd.fg, [&](const PathTuple& t) {
        bool a = in.L.covers(t), b = oracle::covered_by_drawing(in.sd.drawing, in.cs, in.sd.fg, t);
        mismatch += a != b;
        covered += a;
      });
      EXPECT_EQ(mismatch, 0) << short_name(c) << " " << variant_name(v);
      EXPECT_EQ(Integer(covered), in.L.kuratowski_count) << short_name(c);
    }
}

TEST(Coverage, FractionSumBoundsCoveredShare) {
  // drop entries to get partial coverage and compare the sum rule against enumeration
  Inst in = inst(ConceptKind::NIC, 3, 1, Variant::Witness);
  CoverageLedger part = in.L;
  part.entries.resize(part.entries.size() / 2);
  Rational sum(0);
  for (const auto& en : part.entries) sum += en.fraction;
  long covered = 0, all = 0;
  oracle::for_each_tuple(in.sd.fg, [&](const PathTuple& t) {
    covered += part.covers(t);
    ++all;
  });
  Rational share = rat(covered, all);
  EXPECT_GE(sum, share);
  EXPECT_EQ(sum, share);  // blue-blue rectangles are disjoint here
  Verdict v = verify_full_coverage(part, in.sd.fg);
  EXPECT_FALSE(v.holds);
  PathTuple t{};
  for (int c = 0; c < 9; ++c) t[c] = (*v.witness)["uncovered"][Frame::connection_name(c)].get<int>();
  EXPECT_FALSE(part.covers(t));
}

TEST(Coverage, StandardDrawingsAreFullyCovered) {
  for (auto c : all_concepts()) {
    FigureParams fp = figure_params(c);
    for (auto v : {Variant::Witness, Variant::UpperBound}) {
      Inst in = inst(c, fp.ell, fp.k, v);
      EXPECT_TRUE(verify_full_coverage(in.L, in.sd.fg).holds) << short_name(c) << " " << variant_name(v);
    }
  }
}

TEST(Coverage, EmptyLedgerFailsWithWitness) {
  Inst in = inst(ConceptKind::KPlanar, 2, 1, Variant::Witness);
  in.L.entries.clear();
  Verdict v = verify_full_coverage(in.L, in.sd.fg);
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(v.witness->contains("uncovered"));
}

TEST(Coverage, SingleRedYellowCrossingCoversEverythingWhenWidthsAreOne) {
  // red-yellow with both widths 1: the rectangle is the full product
  Inst in = inst(ConceptKind::KApex, 1, 1, Variant::UpperBound);
  ASSERT_EQ(in.L.entries.size(), 1u);
  EXPECT_EQ(in.L.entries[0].fraction, Rational(1));
  EXPECT_TRUE(verify_full_coverage(in.L, in.sd.fg).holds);
}

TEST(Coverage, ClassSearchAgreesAndBudgetIsEnforced) {
  Inst in = inst(ConceptKind::KPlanar, 3, 2, Variant::Witness);
  Verdict full = verify_full_coverage(in.L, in.sd.fg, 100000000);
  Verdict classes = verify_full_coverage(in.L, in.sd.fg, 1000);
  EXPECT_EQ((*full.certificate)["method"], "enumeration");
  EXPECT_EQ((*classes.certificate)["method"], "path-classes");
  EXPECT_EQ(full.holds, classes.holds);
  CoverageLedger part = in.L;
  part.entries.pop_back();
  EXPECT_EQ(verify_full_coverage(part, in.sd.fg, 100000000).holds, verify_full_coverage(part, in.sd.fg, 1000).holds);
  EXPECT_THROW(verify_full_coverage(in.L, in.sd.fg, 2), BudgetExceeded);
}

TEST(Coverage, BudgetFromEnvironment) {
  setenv("BEYONDCR_BUDGET", "1234", 1);
  EXPECT_EQ(coverage_budget(), 1234u);
  setenv("BEYONDCR_BUDGET", "junk", 1);
  EXPECT_EQ(coverage_budget(), 10000000u);
  unsetenv("BEYONDCR_BUDGET");
}

TEST(Restrict, WidthOneIsIdentity) {
  Inst in = inst(ConceptKind::KPlanar, 2, 1, Variant::Witness);
  int yellow = in.sd.fg.frame.connections_of(Color::Yellow)[0];
  Restriction r = restrict(in.sd.drawing, in.sd.fg, yellow, 0);
  EXPECT_EQ(r.fg.graph.ids(), in.sd.fg.graph.ids());
  EXPECT_EQ(r.fg.graph.edges(), in.sd.fg.graph.edges());
  EXPECT_EQ(r.drawing.curve, in.sd.drawing.curve);
  EXPECT_THROW(restrict(in.sd.drawing, in.sd.fg, yellow, 1), ParameterError);
}

TEST(Restrict, DividesKuratowskiCountByWidth) {
  Inst in = inst(ConceptKind::KPlanar, 3, 2, Variant::Witness);
  for (int c = 0; c < 9; ++c) {
    Restriction r = restrict(in.sd.drawing, in.sd.fg, c, 0);
    EXPECT_EQ(r.fg.kuratowski_count() * in.sd.fg.cons[c].width(), in.sd.fg.kuratowski_count());
    EXPECT_EQ(r.fg.cons[c].width(), 1);
  }
}

TEST(Restrict, RedPathUncrossedByYellowLeavesNoRedYellowEntries) {
  Inst in = inst(ConceptKind::KPlanar, 3, 2, Variant::UpperBound);
  int red = in.sd.fg.frame.connections_of(Color::Red)[0];
  int yellow = in.sd.fg.frame.connections_of(Color::Yellow)[0];
  // find a red path without red-yellow crossings; in this drawing every path is crossed once
  std::set<int> crossed;
  for (const auto& en : in.L.entries)
    if (en.c1 == std::min(red, yellow) && en.c2 == std::max(red, yellow))
      for (int p : (en.c1 == red ? en.paths1 : en.paths2)) crossed.insert(p);
  EXPECT_EQ(static_cast<int>(crossed.size()), in.sd.fg.cons[red].width());
  // the witness drawing has none at all
  Inst w = inst(ConceptKind::KPlanar, 3, 2, Variant::Witness);
  Restriction r = restrict(w.sd.drawing, w.sd.fg, red, 0);
  CoverageLedger L = coverage_ledger(r.drawing, r.fg);
  for (const auto& en : L.entries) EXPECT_FALSE((en.c1 == red || en.c2 == red) && (en.c1 == yellow || en.c2 == yellow));
  EXPECT_TRUE(verify_full_coverage(L, r.fg).holds);
}

TEST(Restrict, ComposesInEitherOrder) {
  Inst in = inst(ConceptKind::KVertexPlanar, 2, 2, Variant::Witness);
  auto once = [&](int c, int p) { return restrict(in.sd.drawing, in.sd.fg, c, p); };
  Restriction a1 = once(0, 1), b1 = once(4, 2);
  Restriction a = restrict(a1.drawing, a1.fg, 4, 2), b = restrict(b1.drawing, b1.fg, 0, 1);
  EXPECT_EQ(a.fg.graph.ids(), b.fg.graph.ids());
  EXPECT_EQ(a.fg.graph.edges(), b.fg.graph.edges());
  EXPECT_EQ(a.drawing.curve, b.drawing.curve);
  EXPECT_EQ(ledger_to_json(coverage_ledger(a.drawing, a.fg)), ledger_to_json(coverage_ledger(b.drawing, b.fg)));
}

TEST(CountingBound, PaperExamples) {
  EXPECT_EQ(counting_lower_bound(ConceptKind::IC, 2, 1).value, Rational(4));
  EXPECT_EQ(counting_lower_bound(ConceptKind::KPlanar, 41, 1).value, Rational(41));
  EXPECT_FALSE(counting_lower_bound(ConceptKind::KPlanar, 41, 1).below_threshold);
  EXPECT_TRUE(counting_lower_bound(ConceptKind::KPlanar, 40, 1).below_threshold);
  EXPECT_EQ(counting_lower_bound(ConceptKind::KVertexPlanar, 11, 1).value, Rational(11));
  EXPECT_EQ(counting_lower_bound(ConceptKind::NIC, 4, 1).value, Rational(2));
  EXPECT_EQ(counting_lower_bound(ConceptKind::KGapPlanar, 5, 2).value, Rational(20));
  EXPECT_EQ(counting_lower_bound(ConceptKind::KApex, 3, 2).value, Rational(36));
  EXPECT_EQ(counting_lower_bound(ConceptKind::Skewness, 3, 2).value, Rational(12));
}

TEST(CountingBound, TraceListsSteps) {
  CountingBound b = counting_lower_bound(ConceptKind::KFanCrossingFree, 109, 2);
  ASSERT_TRUE(b.trace["steps"].is_array());
  EXPECT_GE(b.trace["steps"].size(), 3u);
  EXPECT_EQ(b.trace["steps"].back()["value"], to_string(b.value));
}

TEST(CountingBound, SoundAgainstWitnessDrawings) {
  for (auto c : all_concepts())
    for (int ell = 1; ell <= 4; ++ell)
      for (int k = 1; k <= 3; ++k) {
        try {
          recipe_for(c, ell, k);
        } catch (const ParameterError&) {
          continue;
        }
        StandardDrawing sd = standard_drawing(c, ell, k, Variant::Witness);
        EXPECT_LE(counting_lower_bound(c, ell, k).value, Rational(compute_crossings(sd.drawing).size()))
            << short_name(c) << " " << ell << " " << k;
      }
}
