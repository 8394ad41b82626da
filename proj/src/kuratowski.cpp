#include "bcr/kuratowski.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace bcr {

bool CoverageLedger::covers(const PathTuple& t) const {
  for (const auto& en : entries)
    if (std::binary_search(en.paths1.begin(), en.paths1.end(), t[en.c1]) &&
        std::binary_search(en.paths2.begin(), en.paths2.end(), t[en.c2]))
      return true;
  return false;
}

Integer kuratowski_count(const FrameworkGraph& fg) { return fg.kuratowski_count(); }

std::vector<int> attribute_edges(const Drawing& d, const FrameworkGraph& fg) {
  std::vector<int> out(d.graph.m());
  for (int e = 0; e < d.graph.m(); ++e) {
    auto [u, v] = d.graph.edge(e);
    int fu = fg.graph.find_vertex(d.graph.id(u)), fv = fg.graph.find_vertex(d.graph.id(v));
    int fe = (fu < 0 || fv < 0) ? -1 : fg.graph.find_edge(fu, fv);
    if (fe < 0) throw GraphError("edge " + d.graph.edge_key(e) + " is not attributable to a connection");
    out[e] = fe;
  }
  return out;
}

CoverageLedger coverage_ledger(const Drawing& d, const CrossingSet& cs, const FrameworkGraph& fg) {
  std::vector<int> to_fg = attribute_edges(d, fg);
  CoverageLedger L;
  for (int c = 0; c < 9; ++c) L.widths[c] = fg.cons[c].width();
  L.kuratowski_count = fg.kuratowski_count();
  for (int x = 0; x < cs.size(); ++x) {
    const Crossing& cr = cs.crossings[x];
    int e1 = to_fg[cr.a], e2 = to_fg[cr.b];
    int c1 = fg.edge_con[e1], c2 = fg.edge_con[e2];
    if (cr.a == cr.b || c1 == c2 || Frame::adjacent(c1, c2)) {
      ++L.non_contributing;
      continue;
    }
    if (c1 > c2) {
      std::swap(c1, c2);
      std::swap(e1, e2);
    }
    CoverageEntry en;
    en.crossing = x;
    en.c1 = c1;
    en.c2 = c2;
    en.paths1 = fg.edge_paths[e1];
    en.paths2 = fg.edge_paths[e2];
    std::sort(en.paths1.begin(), en.paths1.end());
    std::sort(en.paths2.begin(), en.paths2.end());
    en.fraction = rat(static_cast<long>(en.paths1.size() * en.paths2.size()),
                      static_cast<long>(L.widths[c1]) * L.widths[c2]);
    L.entries.push_back(std::move(en));
  }
  return L;
}

CoverageLedger coverage_ledger(const Drawing& d, const FrameworkGraph& fg) {
  return coverage_ledger(d, compute_crossings(d), fg);
}

std::uint64_t coverage_budget() {
  if (const char* s = std::getenv("BEYONDCR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return 10000000ULL;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct Choice {
  int path;  // representative
  Bits side1, side2;
};

struct Search {
  int words = 0;
  std::array<std::vector<Choice>, 9> choices;
  std::uint64_t nodes = 0;
  std::uint64_t node_budget = 0;
  PathTuple current{};
  std::optional<PathTuple> uncovered;

  static bool meets(const Bits& a, const Bits& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] & b[i]) return true;
    return false;
  }

  // returns true when some tuple below is uncovered
  bool dfs(int level, const Bits& s1, const Bits& s2) {
    if (node_budget && ++nodes > node_budget) throw BudgetExceeded("coverage search exceeded budget");
    if (meets(s1, s2)) return false;
    if (level == 9) {
      uncovered = current;
      return true;
    }
    Bits n1(words), n2(words);
    for (const Choice& ch : choices[level]) {
      for (int i = 0; i < words; ++i) {
        n1[i] = s1[i] | ch.side1[i];
        n2[i] = s2[i] | ch.side2[i];
      }
      current[level] = ch.path;
      if (dfs(level + 1, n1, n2)) return true;
    }
    return false;
  }
};

}  // namespace

Verdict verify_full_coverage(const CoverageLedger& ledger, const FrameworkGraph& fg,
                             std::optional<std::uint64_t> budget) {
  std::uint64_t cap = budget ? *budget : coverage_budget();
  for (int c = 0; c < 9; ++c)
    if (ledger.widths[c] != fg.cons[c].width()) throw std::invalid_argument("ledger does not belong to this framework");
  const int E = static_cast<int>(ledger.entries.size());
  Search s;
  s.words = std::max(1, (E + 63) / 64);
  std::array<std::vector<Choice>, 9> raw;
  for (int c = 0; c < 9; ++c)
    for (int p = 0; p < ledger.widths[c]; ++p) raw[c].push_back({p, Bits(s.words), Bits(s.words)});
  for (int i = 0; i < E; ++i) {
    const auto& en = ledger.entries[i];
    for (int p : en.paths1) raw[en.c1][p].side1[i / 64] |= 1ULL << (i % 64);
    for (int p : en.paths2) raw[en.c2][p].side2[i / 64] |= 1ULL << (i % 64);
  }
  bool literal = ledger.kuratowski_count <= Integer(std::to_string(cap));
  std::string method = literal ? "enumeration" : "path-classes";
  for (int c = 0; c < 9; ++c) {
    if (literal) {
      s.choices[c] = std::move(raw[c]);
      continue;
    }
    std::map<std::pair<Bits, Bits>, int> seen;
    for (auto& ch : raw[c])
      if (seen.emplace(std::make_pair(ch.side1, ch.side2), ch.path).second) s.choices[c].push_back(std::move(ch));
  }
  if (!literal) s.node_budget = cap;
  Bits zero(s.words);
  std::string name = "full-coverage";
  if (s.dfs(0, zero, zero)) return Verdict::fail(name, Json{{"uncovered", tuple_json(*s.uncovered)}, {"method", method}});
  return Verdict::pass(name, Json{{"kuratowski_count", ledger.kuratowski_count.get_str()},
                                  {"contributing_crossings", E},
                                  {"method", method}});
}

Restriction restrict(const Drawing& d, const FrameworkGraph& fg, int c, int r) {
  if (c < 0 || c >= 9) throw ParameterError("connection index out of range");
  const Connection& con = fg.cons[c];
  if (r < 0 || r >= con.width())
    throw ParameterError("path " + std::to_string(r) + " is not a pole path of " + Frame::connection_name(c));
  std::vector<int> to_fg = attribute_edges(d, fg);
  std::vector<char> keep_v(fg.graph.n(), 1), keep_e(fg.graph.m(), 1);
  for (int e : con.edges) keep_e[e] = 0;
  for (int e : con.path_edges[r]) keep_e[e] = 1;
  for (size_t lv = 2; lv < con.local_to_graph.size(); ++lv) keep_v[con.local_to_graph[lv]] = 0;
  for (int v : con.path_vertices[r]) keep_v[v] = 1;

  Restriction out;
  FrameworkGraph& g = out.fg;
  std::vector<int> vmap(fg.graph.n(), -1), emap(fg.graph.m(), -1);
  for (int v = 0; v < fg.graph.n(); ++v)
    if (keep_v[v]) {
      vmap[v] = g.graph.add_vertex(fg.graph.id(v));
      g.vertex_con.push_back(fg.vertex_con[v]);
    }
  for (int e = 0; e < fg.graph.m(); ++e)
    if (keep_e[e]) {
      emap[e] = g.graph.add_edge(vmap[fg.graph.edge(e)[0]], vmap[fg.graph.edge(e)[1]]);
      g.edge_con.push_back(fg.edge_con[e]);
      g.edge_paths.push_back(c == fg.edge_con[e] ? std::vector<int>{0} : fg.edge_paths[e]);
    }
  g.frame = fg.frame;
  g.concept_kind = fg.concept_kind;
  g.ell = fg.ell;
  g.k = fg.k;
  g.below_threshold = fg.below_threshold;
  for (int i = 0; i < 6; ++i) g.node_vertex[i] = vmap[fg.node_vertex[i]];
  auto remap = [](const std::vector<int>& xs, const std::vector<int>& m) {
    std::vector<int> o;
    for (int x : xs)
      if (m[x] >= 0) o.push_back(m[x]);
    return o;
  };
  for (int q = 0; q < 9; ++q) {
    const Connection& src = fg.cons[q];
    Connection& dst = g.cons[q];
    dst.id = src.id;
    dst.color = src.color;
    dst.s = vmap[src.s];
    dst.t = vmap[src.t];
    if (q != c) {
      dst.spec = src.spec;
      dst.local_to_graph = remap(src.local_to_graph, vmap);
      dst.edges = remap(src.edges, emap);
      for (const auto& p : src.path_vertices) dst.path_vertices.push_back(remap(p, vmap));
      for (const auto& p : src.path_edges) dst.path_edges.push_back(remap(p, emap));
    } else {
      dst.spec = ConGraphSpec::bundle(1, static_cast<int>(src.path_edges[r].size()));
      dst.local_to_graph = {dst.s, dst.t};
      for (int v : src.path_vertices[r])
        if (v != src.s && v != src.t) dst.local_to_graph.push_back(vmap[v]);
      dst.edges = remap(src.path_edges[r], emap);
      dst.path_vertices = {remap(src.path_vertices[r], vmap)};
      dst.path_edges = {dst.edges};
    }
  }
  // drawing: same vertex and edge order as the restricted framework graph
  Drawing& nd = out.drawing;
  std::vector<int> fg_to_d(fg.graph.m(), -1);
  for (int e = 0; e < d.graph.m(); ++e) fg_to_d[to_fg[e]] = e;
  std::vector<int> dv(fg.graph.n(), -1);
  for (int v = 0; v < fg.graph.n(); ++v) {
    if (!keep_v[v]) continue;
    int src = d.graph.find_vertex(fg.graph.id(v));
    if (src < 0) continue;
    dv[v] = nd.graph.add_vertex(fg.graph.id(v));
    nd.pos.push_back(d.pos[src]);
  }
  for (int fe = 0; fe < fg.graph.m(); ++fe) {
    if (!keep_e[fe] || fg_to_d[fe] < 0) continue;
    int e = fg_to_d[fe];
    int a = dv[fg.graph.edge(fe)[0]], b = dv[fg.graph.edge(fe)[1]];
    int ne = nd.graph.add_edge(a, b);
    auto curve = d.curve[e];
    if (nd.pos[nd.graph.edge(ne)[0]] != curve.front()) std::reverse(curve.begin(), curve.end());
    nd.curve.push_back(std::move(curve));
  }
  return out;
}

namespace {

struct Trace {
  Json steps = Json::array();
  void add(const std::string& what, const Rational& v, const std::string& reason) {
    steps.push_back(Json{{"step", what}, {"value", to_string(v)}, {"reason", reason}});
  }
};

Rational clamp0(const Rational& r) { return r < 0 ? Rational(0) : r; }

}  // namespace

CountingBound counting_lower_bound(ConceptKind kind, int ell, int k) {
  if (ell < 1) throw ParameterError("l must be >= 1");
  k = effective_k(kind, k);
  if (k < min_k(kind)) throw ParameterError(short_name(kind) + " needs k >= " + std::to_string(min_k(kind)));
  CountingBound out;
  out.below_threshold = ell < ell_threshold(kind, k);
  Trace tr;
  Rational L(ell), K(k), lk(ell * k);
  // remaining share of K that the cheap crossings must cover, and what one of them covers
  Rational remaining(1), per(1), extra(0);
  switch (kind) {
    case ConceptKind::KPlanar: {
      Rational gray = Rational(40) / L;
      tr.add("gray share", gray, "5 gray con-graphs, 4 non-adjacent connections each, at most 2/l per pair");
      remaining = clamp0(1 - gray);
      tr.add("blue-blue share", remaining, "the rest needs blue-blue crossings");
      per = 1 / (lk * lk);
      tr.add("per blue-blue crossing", per, "blue width l*k on both sides");
      break;
    }
    case ConceptKind::KVertexPlanar: {
      Rational gray = Rational(10) / L;
      tr.add("gray share", gray, "5 gray con-graphs, at most 2/l each");
      remaining = clamp0(1 - gray);
      tr.add("blue-blue share", remaining, "the rest needs blue-blue crossings");
      per = 1 / (lk * lk);
      tr.add("per blue-blue crossing", per, "blue width l*k on both sides");
      break;
    }
    case ConceptKind::IC:
      tr.add("blue-blue share", remaining, "yellow is adjacent to both blue connections; red and gray keep an uncrossed path");
      per = 1 / (L * L);
      tr.add("per blue-blue crossing", per, "blue width l");
      break;
    case ConceptKind::NIC: {
      Rational yellow = rat(1, 2), red = Rational(3) / (2 * L);
      tr.add("yellow share", yellow, "the yellow edge is crossed at most once, other widths >= 2");
      tr.add("red-gray share", red, "three red edges, one crossing each, 1/(2l) per crossing");
      remaining = clamp0(1 - yellow - red);
      tr.add("gray/blue share", remaining, "the rest needs gray or blue crossings");
      per = 1 / (L * L);
      tr.add("per crossing", per, "width l on both sides");
      break;
    }
    case ConceptKind::NNIC:
    case ConceptKind::KFanCrossingFree: {
      Rational gray = Rational(9 * 4 * (k - 1) * 3) / lk;
      tr.add("gray share", gray, "9 connections, 4(k-1) gray crossings per edge, height 3");
      remaining = clamp0(1 - gray);
      tr.add("blue-blue share", remaining, "the rest needs blue-blue crossings");
      per = 1 / (lk * lk);
      tr.add("per blue-blue crossing", per, "blue width l*k on both sides");
      break;
    }
    case ConceptKind::AdjacencyCrossing:
    case ConceptKind::FanCrossing:
    case ConceptKind::WeakFanPlanar:
    case ConceptKind::StrongFanPlanar:
      tr.add("blue-blue share", remaining, "each K7 keeps a pole path crossed only inside its con-graph; yellow is adjacent to blue");
      per = 1 / (L * L);
      tr.add("per blue-blue crossing", per, "blue width l");
      extra = 54;
      tr.add("K7 internal crossings", extra, "six edge-disjoint K7 con-graphs, crossing number 9 each");
      break;
    case ConceptKind::KEdgeCrossing: {
      remaining = rat(1, 2);
      tr.add("red/gray-yellow share", rat(k / 2 - 1, k), "at most k/2-1 crossed red or gray edges, 1/k each, at most 1/2");
      tr.add("remaining share", remaining, "the rest needs other crossings");
      int b = k / 2;
      per = rat(1, b * b);
      tr.add("per crossing", per, "blue width floor(k/2) on both sides");
      break;
    }
    case ConceptKind::KGapPlanar: {
      Rational red = rat(20 * k * k, 25 * k * k);
      tr.add("red-red share", red, "20k^2 red-red crossings at 1/(25k^2) each");
      remaining = 1 - red;
      tr.add("gray share", remaining, "blue is adjacent to red; the rest needs gray crossings");
      per = 1 / (lk * 5 * K);
      tr.add("per gray crossing", per, "gray width l*k against width 5k");
      break;
    }
    case ConceptKind::KApex:
      tr.add("blue-gray share", remaining, "every K5 in blue needs an apex, so all apex vertices are blue");
      per = 1 / (lk * lk);
      tr.add("per blue-gray crossing", per, "gray width l*k, blue paths per apex l");
      break;
    case ConceptKind::Skewness:
      tr.add("blue-gray share", remaining, "all skewness edges are blue");
      per = 1 / (L * K * K);
      tr.add("per blue-gray crossing", per, "gray width l*k, one blue path per skewness edge");
      break;
  }
  out.value = remaining / per + extra;
  tr.add("bound", out.value, "share / per-crossing share" + std::string(extra != 0 ? " + internal crossings" : ""));
  if (out.below_threshold) tr.add("below threshold", Rational(ell_threshold(kind, k)), "shares clamped at 0");
  out.trace = Json{{"concept", short_name(kind)}, {"ell", ell}, {"k", k}, {"below_threshold", out.below_threshold},
                   {"steps", tr.steps}};
  return out;
}

Json tuple_json(const PathTuple& t) {
  Json j = Json::object();
  for (int c = 0; c < 9; ++c) j[Frame::connection_name(c)] = t[c];
  return j;
}

Json ledger_to_json(const CoverageLedger& L) {
  Json entries = Json::array();
  for (const auto& en : L.entries)
    entries.push_back(Json{{"crossing", en.crossing},
                           {"connections", {Frame::connection_name(en.c1), Frame::connection_name(en.c2)}},
                           {"paths", {en.paths1, en.paths2}},
                           {"fraction", to_string(en.fraction)}});
  Json w = Json::object();
  for (int c = 0; c < 9; ++c) w[Frame::connection_name(c)] = L.widths[c];
  return Json{{"kuratowski_count", L.kuratowski_count.get_str()},
              {"widths", w},
              {"non_contributing", L.non_contributing},
              {"entries", entries}};
}

}  // namespace bcr
