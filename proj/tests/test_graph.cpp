#include <gtest/gtest.h>

#include "bcr/graph.hpp"
#include "oracles.hpp"

using namespace bcr;

TEST(Graph, RejectsSelfLoopsParallelEdgesAndUnknownIds) {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("a", "b");
  EXPECT_THROW(g.add_edge("b", "a"), GraphError);
  EXPECT_THROW(g.add_edge("a", "a"), GraphError);
  EXPECT_THROW(g.add_edge("a", "zz"), GraphError);
  EXPECT_THROW(g.add_vertex("a"), GraphError);
}

TEST(Graph, EdgesAreStoredSmallerIndexFirst) {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  int e = g.add_edge("c", "a");
  EXPECT_EQ(g.edge(e)[0], 0);
  EXPECT_EQ(g.edge(e)[1], 2);
  EXPECT_EQ(g.edge_key(e), "a|c");
  EXPECT_EQ(g.find_edge(2, 0), e);
}

TEST(Frame, StandardAndAlternateColorCounts) {
  Frame s = build_frame(Coloring::Standard);
  EXPECT_EQ(s.count(Color::Red), 1);
  EXPECT_EQ(s.count(Color::Yellow), 1);
  EXPECT_EQ(s.count(Color::Blue), 2);
  EXPECT_EQ(s.count(Color::Gray), 5);
  Frame a = build_frame(Coloring::Alternate);
  EXPECT_EQ(a.count(Color::Red), 2);
  EXPECT_EQ(a.count(Color::Blue), 1);
  EXPECT_EQ(a.count(Color::Gray), 6);
}

TEST(Frame, AdjacencyMeansSharedNode) {
  int non_adjacent = 0;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      if (a != b && !Frame::adjacent(a, b)) ++non_adjacent;
  // every connection of K3,3 has 4 non-adjacent ones
  EXPECT_EQ(non_adjacent, 9 * 4);
}

TEST(ConGraph, ClosedFormsMatchInstantiation) {
  std::vector<ConGraphSpec> specs{ConGraphSpec::single_edge(), ConGraphSpec::triangle(), ConGraphSpec::k7()};
  for (int i = 1; i <= 4; ++i)
    for (int j = 2; j <= 5; ++j) {
      specs.push_back(ConGraphSpec::bundle(i, j));
      specs.push_back(ConGraphSpec::bundle_plus(i, j));
    }
  for (int ell = 1; ell <= 3; ++ell)
    for (int k = 1; k <= 3; ++k) {
      specs.push_back(ConGraphSpec::apex_blue(ell, k));
      specs.push_back(ConGraphSpec::skew_blue(ell, k));
    }
  for (const auto& s : specs) {
    ConGraph g = instantiate_congraph(s);
    SCOPED_TRACE(s.describe());
    EXPECT_EQ(Integer(static_cast<long>(g.names.size()) - 2), s.internal_vertex_count());
    EXPECT_EQ(Integer(static_cast<long>(g.edges.size())), s.edge_count());
    EXPECT_EQ(Integer(static_cast<long>(g.paths.size())), s.width());
    int h = 0;
    for (const auto& p : g.paths) {
      EXPECT_EQ(p.front(), 0);
      EXPECT_EQ(p.back(), 1);
      h = std::max(h, static_cast<int>(p.size()) - 1);
    }
    EXPECT_EQ(h, s.height());
  }
}

TEST(ConGraph, PathsAreEdgeDisjoint) {
  for (auto s : {ConGraphSpec::k7(), ConGraphSpec::bundle_plus(3, 3), ConGraphSpec::apex_blue(2, 2),
                 ConGraphSpec::skew_blue(2, 3)}) {
    ConGraph g = instantiate_congraph(s);
    std::set<std::pair<int, int>> used;
    for (const auto& p : g.paths)
      for (size_t i = 0; i + 1 < p.size(); ++i)
        EXPECT_TRUE(used.insert(std::minmax(p[i], p[i + 1])).second) << s.describe();
  }
}

TEST(ConGraph, BundlesOfLengthOneWithSeveralPathsAreRejected) {
  EXPECT_THROW(instantiate_congraph(ConGraphSpec::bundle(2, 1)), ParameterError);
  EXPECT_THROW(instantiate_congraph(ConGraphSpec::bundle_plus(1, 1)), ParameterError);
  EXPECT_NO_THROW(instantiate_congraph(ConGraphSpec::bundle(1, 1)));
}

TEST(Construction, SizeFormulaMatchesGraph) {
  for (auto c : all_concepts())
    for (int ell = 1; ell <= 4; ++ell)
      for (int k = 1; k <= 4; ++k) {
        FrameworkGraph fg;
        try {
          fg = construction_for(c, ell, k);
        } catch (const ParameterError&) {
          EXPECT_THROW(construction_size(c, ell, k), ParameterError);
          continue;
        }
        SizeFormula sz = construction_size(c, ell, k);
        EXPECT_EQ(sz.n, Integer(fg.graph.n())) << short_name(c) << " " << ell << " " << k;
        EXPECT_EQ(sz.m, Integer(fg.graph.m())) << short_name(c) << " " << ell << " " << k;
      }
}

TEST(Construction, IcVertexCount) {
  for (int ell = 1; ell <= 6; ++ell) EXPECT_EQ(construction_for(ConceptKind::IC, ell, 1).graph.n(), 4 * ell * ell + 12);
}

TEST(Construction, EveryEdgeBelongsToAConnectionAndItsPaths) {
  FrameworkGraph fg = construction_for(ConceptKind::KApex, 2, 2);
  for (int e = 0; e < fg.graph.m(); ++e) {
    int c = fg.edge_con[e];
    ASSERT_GE(c, 0);
    for (int p : fg.edge_paths[e]) {
      const auto& pe = fg.cons[c].path_edges[p];
      EXPECT_NE(std::find(pe.begin(), pe.end(), e), pe.end());
    }
  }
}

TEST(Construction, BelowThresholdIsFlagged) {
  EXPECT_TRUE(construction_for(ConceptKind::KPlanar, 3, 1).below_threshold);
  EXPECT_FALSE(construction_for(ConceptKind::IC, 2, 1).below_threshold);
  EXPECT_TRUE(construction_for(ConceptKind::Skewness, 2, 2).below_threshold);
}

TEST(Construction, NnicUsesTheFanCrossingFreeGraphWithKTwo) {
  FrameworkGraph a = construction_for(ConceptKind::NNIC, 3, 7);
  FrameworkGraph b = construction_for(ConceptKind::KFanCrossingFree, 3, 2);
  EXPECT_EQ(a.graph.ids(), b.graph.ids());
  EXPECT_EQ(a.graph.edges(), b.graph.edges());
}

TEST(Kuratowski, CountIsProductOfWidthsByEnumeration) {
  struct Case {
    ConceptKind c;
    int ell, k;
  };
  for (auto [c, ell, k] : {Case{ConceptKind::IC, 2, 1}, Case{ConceptKind::NIC, 2, 1}, Case{ConceptKind::KApex, 1, 2},
                           Case{ConceptKind::Skewness, 2, 1}, Case{ConceptKind::KEdgeCrossing, 1, 2}}) {
    FrameworkGraph fg = construction_for(c, ell, k);
    long n = 0;
    oracle::for_each_tuple(fg, [&](const PathTuple&) { ++n; });
    EXPECT_EQ(Integer(n), fg.kuratowski_count()) << short_name(c);
  }
}

TEST(Kuratowski, IcAtTwoCountsTriangleWidths) {
  // triangles have width 2: 2 (red) * 2^5 (gray) * 2^2 (blue) * 1 (yellow)
  EXPECT_EQ(construction_for(ConceptKind::IC, 2, 1).kuratowski_count(), Integer(256));
}

TEST(Kuratowski, KPlanarSpotValue) {
  Integer expect = Integer(3) * 1 * 36 * 7776;  // 3 * 1 * 6^2 * 6^5
  EXPECT_EQ(construction_for(ConceptKind::KPlanar, 3, 2).kuratowski_count(), expect);
}

TEST(Kuratowski, AllSingleEdgesGiveOne) {
  Recipe r;
  for (auto col : {Color::Red, Color::Blue, Color::Yellow, Color::Gray}) r[col] = ConGraphSpec::single_edge();
  FrameworkGraph fg = build_framework_graph(build_frame(Coloring::Standard), r);
  EXPECT_EQ(fg.kuratowski_count(), Integer(1));
  EXPECT_EQ(fg.graph.n(), 6);
  EXPECT_EQ(fg.graph.m(), 9);
}

TEST(Kuratowski, EveryTupleIsAK33Subdivision) {
  for (auto c : {ConceptKind::IC, ConceptKind::AdjacencyCrossing, ConceptKind::KApex, ConceptKind::Skewness,
                 ConceptKind::KVertexPlanar}) {
    FrameworkGraph fg = construction_for(c, 1, min_k(c));
    long bad = 0;
    oracle::for_each_tuple(fg, [&](const PathTuple& t) { bad += !oracle::is_k33_subdivision(fg, t); });
    EXPECT_EQ(bad, 0) << short_name(c);
  }
}
