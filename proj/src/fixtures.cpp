#include "bcr/fixtures.hpp"

#include <filesystem>

#include "bcr/io.hpp"
#include "bcr/layouts.hpp"
#include "bcr/svg.hpp"

namespace bcr {

namespace {

struct Builder {
  Drawing d;
  int vertex(const std::string& id, const Point& p) {
    int v = d.graph.add_vertex(id);
    d.pos.push_back(p);
    return v;
  }
  int edge(int u, int v, std::vector<Point> bends = {}) {
    int e = d.graph.add_edge(u, v);
    std::vector<Point> c{d.pos[u]};
    c.insert(c.end(), bends.begin(), bends.end());
    c.push_back(d.pos[v]);
    if (d.graph.edge(e)[0] != u) std::reverse(c.begin(), c.end());
    d.curve.push_back(c);
    return e;
  }
};

}  // namespace

AppendixFixture appendix_fcf_fixture() {
  Builder b;
  AppendixFixture f;
  Json labels = Json::object();
  for (int copy = 0; copy < 2; ++copy) {
    std::string pre = "g" + std::to_string(copy + 1) + ".";
    Point shift{rat(12 * copy), rat(0)};
    auto P = [&](long x, long xd, long y, long yd) { return shift + Point{rat(x, xd), rat(y, yd)}; };
    int A = b.vertex(pre + "A", P(0, 1, 0, 1));
    int B = b.vertex(pre + "B", P(4, 1, 0, 1));
    int C = b.vertex(pre + "C", P(2, 1, 2, 1));
    int D = b.vertex(pre + "D", P(2, 1, -2, 1));
    int E = b.vertex(pre + "E", P(3, 2, 1, 2));
    // walls with the side their K5 guard sits on (+1 left of the wall direction)
    struct Wall {
      int s, t, side;
      std::string name;
    };
    std::vector<Wall> walls{{A, E, -1, "AE"}, {E, C, -1, "EC"}, {B, D, 1, "BD"}, {D, A, 1, "DA"}};
    for (const auto& w : walls) {
      int e = b.edge(w.s, w.t);
      f.walls.push_back(e);
      labels[b.d.graph.edge_key(e)] = "wall";
      Point ps = b.d.pos[w.s], dir = b.d.pos[w.t] - ps;
      Point perp = rat(w.side, 16) * Point{-dir.y, dir.x};
      const std::array<std::array<long, 2>, 3> local{{{6, 8}, {2, 1}, {7, 1}}};  // tenths
      std::vector<int> k5{w.s, w.t};
      for (int i = 0; i < 3; ++i)
        k5.push_back(b.vertex(pre + w.name + "." + std::to_string(i + 2),
                              ps + rat(local[i][0], 10) * dir + rat(local[i][1], 10) * perp));
      for (size_t i = 0; i < k5.size(); ++i)
        for (size_t j = i + 1; j < k5.size(); ++j) {
          if (i == 0 && j == 1) continue;
          int g = b.edge(k5[i], k5[j]);
          f.guards.push_back(g);
          labels[b.d.graph.edge_key(g)] = "guard";
        }
    }
    std::vector<int> ls{b.edge(A, B), b.edge(C, D), b.edge(A, C),
                        b.edge(B, E, {P(4, 1, -3, 1), P(-1, 1, -3, 1), P(-1, 1, 3, 2)})};
    for (int i = 0; i < 4; ++i) {
      f.loners.push_back(ls[i]);
      labels[b.d.graph.edge_key(ls[i])] = "loner " + std::to_string(i + 1);
    }
  }
  f.drawing = std::move(b.d);
  f.meta = Json{{"fixture", "fcf-not-nnic"}, {"edge_roles", labels}};
  return f;
}

Drawing k5_fcf_fixture() {
  Builder b;
  std::vector<int> v{b.vertex("v", {rat(0), rat(0)}), b.vertex("q1", {rat(4), rat(-2)}),
                     b.vertex("q2", {rat(4), rat(2)}), b.vertex("q3", {rat(1), rat(0)}),
                     b.vertex("q4", {rat(3), rat(-1)})};
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) b.edge(v[i], v[j]);
  return b.d;
}

std::vector<std::pair<std::string, std::string>> golden_files() {
  std::vector<std::pair<std::string, std::string>> out;
  auto add_drawing = [&](const std::string& stem, const Drawing& d, const Json& meta, const SvgStyle& style) {
    out.push_back({stem + ".json", dump(drawing_to_json(d, meta))});
    out.push_back({stem + ".svg", to_svg(d, style)});
  };
  {
    auto f = appendix_fcf_fixture();
    CrossingSet cs = compute_crossings(f.drawing);
    SvgStyle st;
    st.edge_color.assign(f.drawing.graph.m(), "black");
    for (int e : f.walls) st.edge_color[e] = "#d62728";
    for (int e : f.guards) st.edge_color[e] = "#8c8c8c";
    st.crossings = &cs;
    add_drawing("fig5", f.drawing, f.meta, st);
  }
  {
    Drawing d = k5_fcf_fixture();
    CrossingSet cs = compute_crossings(d);
    SvgStyle st;
    st.crossings = &cs;
    add_drawing("k5", d, Json{{"fixture", "k5-one-crossing"}}, st);
  }
  for (auto c : all_concepts()) {
    FigureParams fp = figure_params(c);
    for (auto v : {Variant::Witness, Variant::UpperBound}) {
      StandardDrawing sd = standard_drawing(c, fp.ell, fp.k, v);
      CrossingSet cs = compute_crossings(sd.drawing);
      SvgStyle st = framework_style(sd.fg);
      st.crossings = &cs;
      add_drawing(variant_name(v) + "_" + short_name(c) + "_l" + std::to_string(fp.ell) + "_k" + std::to_string(sd.fg.k),
                  sd.drawing, framework_meta(sd.fg), st);
    }
  }
  // the IC instance used by the CLI examples
  {
    StandardDrawing sd = standard_drawing(ConceptKind::IC, 2, 1, Variant::Witness);
    out.push_back({"witness_ic_l2.json", dump(drawing_to_json(sd.drawing, framework_meta(sd.fg)))});
  }
  return out;
}

std::vector<std::string> write_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> names;
  for (const auto& [name, text] : golden_files()) {
    write_text_file((std::filesystem::path(dir) / name).string(), text);
    names.push_back(name);
  }
  return names;
}

}  // namespace bcr
