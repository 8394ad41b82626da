#include <gtest/gtest.h>

#include "bcr/checkers.hpp"
#include "bcr/fixtures.hpp"
#include "bcr/io.hpp"
#include "bcr/layouts.hpp"
#include "bcr/svg.hpp"
#include "helpers.hpp"

using namespace bcr;

TEST(Io, DrawingRoundTrip) {
  StandardDrawing sd = standard_drawing(ConceptKind::WeakFanPlanar, 2, 1, Variant::UpperBound);
  Json j = drawing_to_json(sd.drawing, framework_meta(sd.fg));
  Drawing back = drawing_from_json(parse_json_text(dump(j), "mem"));
  EXPECT_EQ(back.graph.ids(), sd.drawing.graph.ids());
  EXPECT_EQ(back.graph.edges(), sd.drawing.graph.edges());
  EXPECT_EQ(back.pos, sd.drawing.pos);
  EXPECT_EQ(back.curve, sd.drawing.curve);
  EXPECT_EQ(drawing_meta(j)["concept"], "wfp");
}

TEST(Io, VerdictsSurviveSerialization) {
  for (auto c : {ConceptKind::IC, ConceptKind::KGapPlanar, ConceptKind::StrongFanPlanar}) {
    FigureParams fp = figure_params(c);
    for (auto v : {Variant::Witness, Variant::UpperBound}) {
      StandardDrawing sd = standard_drawing(c, fp.ell, fp.k, v);
      Drawing back = drawing_from_json(parse_json_text(dump(drawing_to_json(sd.drawing)), "mem"));
      Concept con{c, fp.k};
      EXPECT_EQ(to_json(check_concept(con, sd.drawing, compute_crossings(sd.drawing))),
                to_json(check_concept(con, back, compute_crossings(back))));
    }
  }
}

TEST(Io, RationalsAreStrings) {
  Drawing d = helpers::make({{"a", 0, 0}, {"b", 3, 1}}, {{"a", "b"}});
  d.pos[1] = {rat(6, 4), rat(-1, 3)};
  d.set_straight(0);
  Json j = drawing_to_json(d);
  EXPECT_EQ(j["positions"]["b"][0], "3/2");
  EXPECT_EQ(j["positions"]["b"][1], "-1/3");
}

TEST(Io, ReversedCurveAndMissingCurve) {
  Json j = parse_json_text(R"({"graph":{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]},
    "positions":{"a":["0","0"],"b":["2","0"],"c":["2","2"]},
    "curves":{"a|b":[["2","0"],["1","1"],["0","0"]],"c|b":[["2","2"],["3","1"],["2","0"]]}})",
                           "inline");
  Drawing d = drawing_from_json(j);
  EXPECT_EQ(d.curve[0].front(), (Point{0, 0}));
  EXPECT_EQ(d.curve[0].size(), 3u);
  EXPECT_EQ(d.curve[1].front(), (Point{2, 0}));
  EXPECT_EQ(d.curve[1][1], (Point{3, 1}));
  Json partial = j;
  partial["curves"].erase("c|b");
  EXPECT_EQ(drawing_from_json(partial).curve[1].size(), 2u);
}

TEST(Io, MalformedJsonReportsLineAndColumn) {
  try {
    parse_json_text("{\n  \"graph\": [1,\n", "bad.json");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.json:"), std::string::npos) << e.what();
  }
}

TEST(Io, MissingFieldsAreNamed) {
  Json j = parse_json_text(R"({"graph":{"vertices":["a"],"edges":[]}})", "x");
  try {
    drawing_from_json(j);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.field, "positions");
  }
  Json bad = parse_json_text(R"({"graph":{"vertices":["a"],"edges":[]},"positions":{"a":["1/0","0"]}})", "x");
  EXPECT_THROW(drawing_from_json(bad), FormatError);
}

TEST(Io, GraphRoundTrip) {
  FrameworkGraph fg = construction_for(ConceptKind::Skewness, 3, 2);
  Graph g = graph_from_json(graph_to_json(fg.graph));
  EXPECT_EQ(g.ids(), fg.graph.ids());
  EXPECT_EQ(g.edges(), fg.graph.edges());
}

TEST(Svg, DeterministicAndEscaped) {
  Drawing d = helpers::make({{"a<&>", 0, 0}, {"b", 2, 2}, {"c", 0, 2}, {"e", 2, 0}}, {{"a<&>", "b"}, {"c", "e"}});
  CrossingSet cs = compute_crossings(d);
  SvgStyle st;
  st.crossings = &cs;
  std::string s = to_svg(d, st);
  EXPECT_EQ(s, to_svg(d, st));
  EXPECT_NE(s.find("a&lt;&amp;&gt;"), std::string::npos);
  EXPECT_EQ(s.find("a<&>"), std::string::npos);
  EXPECT_NE(s.find("class=\"crossing\""), std::string::npos);
}

TEST(Fixtures, GoldenSetIsStable) {
  auto a = golden_files();
  EXPECT_EQ(a, golden_files());
  EXPECT_GT(a.size(), 30u);
}
