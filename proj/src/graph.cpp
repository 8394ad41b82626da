#include "bcr/graph.hpp"

#include <algorithm>

namespace bcr {

std::uint64_t Graph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

int Graph::add_vertex(const std::string& id) {
  if (id.empty()) throw GraphError("empty vertex id");
  if (vindex_.count(id)) throw GraphError("duplicate vertex id '" + id + "'");
  int v = n();
  ids_.push_back(id);
  vindex_[id] = v;
  inc_.emplace_back();
  return v;
}

int Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("self-loop at '" + ids_[u] + "'");
  if (eindex_.count(key(u, v)))
    throw GraphError("parallel edge '" + ids_[u] + "'-'" + ids_[v] + "'");
  if (u > v) std::swap(u, v);
  int e = m();
  edges_.push_back({u, v});
  eindex_[key(u, v)] = e;
  inc_[u].push_back(e);
  inc_[v].push_back(e);
  return e;
}

int Graph::add_edge(const std::string& u, const std::string& v) {
  int a = find_vertex(u), b = find_vertex(v);
  if (a < 0) throw GraphError("unknown vertex '" + u + "'");
  if (b < 0) throw GraphError("unknown vertex '" + v + "'");
  return add_edge(a, b);
}

int Graph::find_vertex(const std::string& id) const {
  auto it = vindex_.find(id);
  return it == vindex_.end() ? -1 : it->second;
}

int Graph::find_edge(int u, int v) const {
  auto it = eindex_.find(key(u, v));
  return it == eindex_.end() ? -1 : it->second;
}

bool Graph::adjacent_edges(int e, int f) const {
  const auto& a = edges_[e];
  const auto& b = edges_[f];
  return a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
}

bool Graph::incident_to(int e, int v) const { return edges_[e][0] == v || edges_[e][1] == v; }

int Graph::other_end(int e, int v) const { return edges_[e][0] == v ? edges_[e][1] : edges_[e][0]; }

std::string Graph::edge_key(int e) const { return ids_[edges_[e][0]] + "|" + ids_[edges_[e][1]]; }

std::string color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Blue: return "blue";
    case Color::Yellow: return "yellow";
    case Color::Gray: return "gray";
  }
  return "?";
}

std::string Frame::node_name(int node) {
  return (node < 3 ? "v" : "w") + std::to_string(node % 3 + 1);
}

std::string Frame::connection_name(int c) {
  auto nd = nodes(c);
  return node_name(nd[0]) + node_name(nd[1]);
}

bool Frame::adjacent(int c1, int c2) {
  auto a = nodes(c1), b = nodes(c2);
  return a[0] == b[0] || a[1] == b[1];
}

int Frame::count(Color col) const {
  return static_cast<int>(std::count(color.begin(), color.end(), col));
}

std::vector<int> Frame::connections_of(Color col) const {
  std::vector<int> out;
  for (int c = 0; c < 9; ++c)
    if (color[c] == col) out.push_back(c);
  return out;
}

Frame build_frame(Coloring coloring) {
  Frame f;
  f.coloring = coloring;
  f.color.fill(Color::Gray);
  if (coloring == Coloring::Standard) {
    // 4-cycle v1 w1 v2 w2: blue, yellow, blue, red
    f.color[Frame::connection(0, 0)] = Color::Blue;
    f.color[Frame::connection(1, 0)] = Color::Yellow;
    f.color[Frame::connection(1, 1)] = Color::Blue;
    f.color[Frame::connection(0, 1)] = Color::Red;
  } else {
    f.color[Frame::connection(0, 0)] = Color::Blue;
    f.color[Frame::connection(0, 1)] = Color::Red;
    f.color[Frame::connection(1, 0)] = Color::Red;
  }
  return f;
}

std::string ConGraphSpec::describe() const {
  switch (kind) {
    case ConKind::Bundle:
      if (i == 1 && j == 1) return "SingleEdge";
      return "Bundle(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case ConKind::BundlePlus:
      return "BundlePlus(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case ConKind::K7: return "K7";
    case ConKind::ApexBlue: return "ApexBlue(" + std::to_string(ell) + "," + std::to_string(k) + ")";
    case ConKind::SkewBlue: return "SkewBlue(" + std::to_string(ell) + "," + std::to_string(k) + ")";
  }
  return "?";
}

Integer ConGraphSpec::internal_vertex_count() const {
  switch (kind) {
    case ConKind::Bundle:
    case ConKind::BundlePlus: return Integer(i) * (j - 1);
    case ConKind::K7: return 5;
    case ConKind::ApexBlue: return Integer(k) * (2 * Integer(ell) + 5);
    case ConKind::SkewBlue: return Integer(k) * 4;
  }
  return 0;
}

Integer ConGraphSpec::edge_count() const {
  switch (kind) {
    case ConKind::Bundle: return Integer(i) * j;
    case ConKind::BundlePlus: return Integer(i) * j + 1;
    case ConKind::K7: return 21;
    case ConKind::ApexBlue: return Integer(k) * (4 * Integer(ell) + 10);
    case ConKind::SkewBlue: return Integer(k) * 10;
  }
  return 0;
}

Integer ConGraphSpec::width() const {
  switch (kind) {
    case ConKind::Bundle: return i;
    case ConKind::BundlePlus: return Integer(i) + 1;
    case ConKind::K7: return 6;
    case ConKind::ApexBlue: return Integer(ell) * k;
    case ConKind::SkewBlue: return k;
  }
  return 0;
}

int ConGraphSpec::height() const {
  switch (kind) {
    case ConKind::Bundle:
    case ConKind::BundlePlus: return j;
    case ConKind::K7: return 2;
    case ConKind::ApexBlue: return 4;
    case ConKind::SkewBlue: return 3;
  }
  return 0;
}

namespace {

struct LocalBuilder {
  ConGraph g;
  int vertex(const std::string& name) {
    g.names.push_back(name);
    return static_cast<int>(g.names.size()) - 1;
  }
  void edge(int a, int b) { g.edges.push_back({a, b}); }
};

void build_bundle(LocalBuilder& b, int i, int j, bool plus) {
  for (int q = 0; q < i; ++q) {
    std::vector<int> path{0};
    for (int r = 1; r < j; ++r)
      path.push_back(b.vertex("p" + std::to_string(q) + "." + std::to_string(r)));
    path.push_back(1);
    for (size_t x = 0; x + 1 < path.size(); ++x) b.edge(path[x], path[x + 1]);
    b.g.paths.push_back(path);
  }
  if (plus) {
    b.edge(0, 1);
    b.g.paths.push_back({0, 1});
  }
}

void build_k7(LocalBuilder& b) {
  for (int x = 2; x <= 6; ++x) b.vertex("k" + std::to_string(x));
  for (int a = 0; a < 7; ++a)
    for (int c = a + 1; c < 7; ++c) b.edge(a, c);
  for (int x = 2; x <= 6; ++x) b.g.paths.push_back({0, x, 1});
  b.g.paths.push_back({0, 1});
}

void build_apex(LocalBuilder& b, int ell, int k) {
  for (int p = 0; p < k; ++p) {
    std::string ps = std::to_string(p);
    int v = b.vertex("v" + ps);
    std::vector<int> as, bs, xs;
    for (int i = 0; i < ell; ++i) as.push_back(b.vertex("a" + ps + "." + std::to_string(i)));
    for (int i = 0; i < ell; ++i) bs.push_back(b.vertex("b" + ps + "." + std::to_string(i)));
    for (int i = 1; i <= 4; ++i) xs.push_back(b.vertex("x" + ps + "." + std::to_string(i)));
    for (int i = 0; i < ell; ++i) {
      b.edge(0, as[i]);
      b.edge(as[i], v);
      b.edge(v, bs[i]);
      b.edge(bs[i], 1);
      b.g.paths.push_back({0, as[i], v, bs[i], 1});
    }
    std::vector<int> k5{v, xs[0], xs[1], xs[2], xs[3]};
    for (int a = 0; a < 5; ++a)
      for (int c = a + 1; c < 5; ++c) b.edge(k5[a], k5[c]);
  }
}

void build_skew(LocalBuilder& b, int k) {
  for (int p = 0; p < k; ++p) {
    std::string ps = std::to_string(p);
    int v = b.vertex("v" + ps);
    int w1 = b.vertex("w" + ps + ".1");
    int w2 = b.vertex("w" + ps + ".2");
    int w3 = b.vertex("w" + ps + ".3");
    b.edge(v, 1);
    for (int w : {w1, w2, w3}) b.edge(0, w);
    for (int w : {w1, w2, w3}) b.edge(v, w);
    b.edge(w1, w2);
    b.edge(w1, w3);
    b.edge(w2, w3);
    b.g.paths.push_back({0, w3, v, 1});
  }
}

}  // namespace

namespace {

void check_bundle(const ConGraphSpec& spec) {
  if (spec.kind != ConKind::Bundle && spec.kind != ConKind::BundlePlus) return;
  if (spec.i < 1 || spec.j < 1) throw ParameterError("bundle needs i >= 1 and j >= 1");
  if (spec.j == 1 && (spec.i > 1 || spec.kind == ConKind::BundlePlus))
    throw ParameterError(spec.describe() + " would contain parallel pole edges");
}

}  // namespace

ConGraph instantiate_congraph(const ConGraphSpec& spec) {
  LocalBuilder b;
  b.vertex("s");
  b.vertex("t");
  switch (spec.kind) {
    case ConKind::Bundle:
    case ConKind::BundlePlus: {
      bool plus = spec.kind == ConKind::BundlePlus;
      check_bundle(spec);
      build_bundle(b, spec.i, spec.j, plus);
      break;
    }
    case ConKind::K7: build_k7(b); break;
    case ConKind::ApexBlue:
      if (spec.ell < 1 || spec.k < 1) throw ParameterError("ApexBlue needs l >= 1 and k >= 1");
      build_apex(b, spec.ell, spec.k);
      break;
    case ConKind::SkewBlue:
      if (spec.k < 1) throw ParameterError("SkewBlue needs k >= 1");
      build_skew(b, spec.k);
      break;
  }
  return b.g;
}

int Connection::height() const {
  int h = 0;
  for (const auto& p : path_edges) h = std::max(h, static_cast<int>(p.size()));
  return h;
}

Integer FrameworkGraph::kuratowski_count() const {
  Integer prod = 1;
  for (const auto& c : cons) prod *= c.width();
  return prod;
}

FrameworkGraph build_framework_graph(const Frame& frame, const Recipe& recipe) {
  FrameworkGraph fg;
  fg.frame = frame;
  for (int node = 0; node < 6; ++node) fg.node_vertex[node] = fg.graph.add_vertex(Frame::node_name(node));
  std::array<ConGraph, 9> locals;
  for (int c = 0; c < 9; ++c) {
    auto it = recipe.find(frame.color[c]);
    if (it == recipe.end())
      throw ParameterError("recipe has no con-graph for color " + color_name(frame.color[c]));
    locals[c] = instantiate_congraph(it->second);
    Connection& con = fg.cons[c];
    con.id = c;
    con.color = frame.color[c];
    con.spec = it->second;
    auto nd = Frame::nodes(c);
    con.s = fg.node_vertex[nd[0]];
    con.t = fg.node_vertex[nd[1]];
    con.local_to_graph = {con.s, con.t};
    for (size_t lv = 2; lv < locals[c].names.size(); ++lv)
      con.local_to_graph.push_back(
          fg.graph.add_vertex(Frame::connection_name(c) + ":" + locals[c].names[lv]));
  }
  for (int c = 0; c < 9; ++c) {
    Connection& con = fg.cons[c];
    for (const auto& le : locals[c].edges)
      con.edges.push_back(fg.graph.add_edge(con.local_to_graph[le[0]], con.local_to_graph[le[1]]));
    for (const auto& lp : locals[c].paths) {
      std::vector<int> pv, pe;
      for (int lv : lp) pv.push_back(con.local_to_graph[lv]);
      for (size_t x = 0; x + 1 < pv.size(); ++x) pe.push_back(fg.graph.find_edge(pv[x], pv[x + 1]));
      con.path_vertices.push_back(pv);
      con.path_edges.push_back(pe);
    }
  }
  fg.edge_con.assign(fg.graph.m(), -1);
  fg.edge_paths.assign(fg.graph.m(), {});
  fg.vertex_con.assign(fg.graph.n(), -1);
  for (int c = 0; c < 9; ++c) {
    const Connection& con = fg.cons[c];
    for (int e : con.edges) fg.edge_con[e] = c;
    for (size_t lv = 2; lv < con.local_to_graph.size(); ++lv) fg.vertex_con[con.local_to_graph[lv]] = c;
    for (int q = 0; q < con.width(); ++q)
      for (int e : con.path_edges[q]) fg.edge_paths[e].push_back(q);
  }
  return fg;
}

int effective_k(ConceptKind kind, int k) {
  if (kind == ConceptKind::NNIC) return 2;
  if (!has_parameter(kind)) return 1;
  return k;
}

Recipe recipe_for(ConceptKind kind, int ell, int k) {
  if (ell < 1) throw ParameterError("l must be >= 1");
  k = effective_k(kind, k);
  if (k < min_k(kind))
    throw ParameterError(short_name(kind) + " needs k >= " + std::to_string(min_k(kind)));
  using S = ConGraphSpec;
  Recipe r;
  r[Color::Yellow] = S::single_edge();
  int lk = ell * k;
  switch (kind) {
    case ConceptKind::KPlanar:
      r[Color::Red] = S::bundle(k + 1, 2);
      r[Color::Blue] = S::bundle(lk, ell);
      r[Color::Gray] = S::bundle(lk, 2);
      break;
    case ConceptKind::KVertexPlanar:
      r[Color::Red] = S::bundle(k + 1, 2);
      r[Color::Blue] = S::bundle(lk, 2 * ell + 1);
      r[Color::Gray] = S::bundle(lk, 2);
      break;
    case ConceptKind::IC:
      r[Color::Red] = S::triangle();
      r[Color::Gray] = S::triangle();
      r[Color::Blue] = S::bundle(ell, 2 * ell + 1);
      break;
    case ConceptKind::NIC:
      r[Color::Red] = S::bundle_plus(1, 2);
      r[Color::Blue] = S::bundle(ell, ell + 2);
      r[Color::Gray] = S::bundle(ell, 2);
      break;
    case ConceptKind::NNIC:
    case ConceptKind::KFanCrossingFree:
      r[Color::Red] = S::bundle(2 * k, 2);
      r[Color::Blue] = S::bundle(lk, 3);
      r[Color::Gray] = S::bundle(lk, 2);
      break;
    case ConceptKind::AdjacencyCrossing:
    case ConceptKind::FanCrossing:
    case ConceptKind::WeakFanPlanar:
    case ConceptKind::StrongFanPlanar:
      r[Color::Red] = S::k7();
      r[Color::Gray] = S::k7();
      r[Color::Blue] = S::bundle(ell, 2);
      break;
    case ConceptKind::KEdgeCrossing:
      r[Color::Red] = S::bundle(k, 2);
      r[Color::Gray] = S::bundle(lk, 2);
      r[Color::Blue] = S::bundle(k / 2, 2);
      break;
    case ConceptKind::KGapPlanar:
      r[Color::Blue] = S::bundle(5 * k, 2);
      r[Color::Red] = S::bundle(5 * k, 2);
      r[Color::Gray] = S::bundle(lk, 5);
      break;
    case ConceptKind::KApex:
      r[Color::Red] = S::single_edge();
      r[Color::Gray] = S::bundle(lk, 2);
      r[Color::Blue] = S::apex_blue(ell, k);
      break;
    case ConceptKind::Skewness:
      r[Color::Red] = S::single_edge();
      r[Color::Gray] = S::bundle(lk, 2);
      r[Color::Blue] = S::skew_blue(ell, k);
      break;
  }
  for (const auto& [col, spec] : r) check_bundle(spec);
  return r;
}

FrameworkGraph construction_for(ConceptKind kind, int ell, int k) {
  Recipe r = recipe_for(kind, ell, k);
  Frame f = build_frame(uses_alternate_frame(kind) ? Coloring::Alternate : Coloring::Standard);
  FrameworkGraph fg = build_framework_graph(f, r);
  fg.concept_kind = kind;
  fg.ell = ell;
  fg.k = effective_k(kind, k);
  fg.below_threshold = ell < ell_threshold(kind, fg.k);
  return fg;
}

SizeFormula construction_size(ConceptKind kind, int ell, int k) {
  Recipe r = recipe_for(kind, ell, k);
  Frame f = build_frame(uses_alternate_frame(kind) ? Coloring::Alternate : Coloring::Standard);
  SizeFormula s{6, 0};
  for (int c = 0; c < 9; ++c) {
    const auto& spec = r.at(f.color[c]);
    s.n += spec.internal_vertex_count();
    s.m += spec.edge_count();
  }
  return s;
}

}  // namespace bcr
