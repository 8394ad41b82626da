#include "bcr/checkers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace bcr {

namespace {

Json crossing_json(const Drawing& d, const CrossingSet& cs, int x) {
  const auto& c = cs.crossings[x];
  return Json{{"id", x}, {"edges", {d.graph.edge_key(c.a), d.graph.edge_key(c.b)}}, {"point", point_json(c.p)}};
}

Json vertex_list(const Graph& g, const std::vector<int>& vs) {
  Json j = Json::array();
  for (int v : vs) j.push_back(g.id(v));
  return j;
}

Json edge_list(const Graph& g, const std::vector<int>& es) {
  Json j = Json::array();
  for (int e : es) j.push_back(g.edge_key(e));
  return j;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> ends(const Graph& g, int e) {
  std::vector<int> v{g.edge(e)[0], g.edge(e)[1]};
  std::sort(v.begin(), v.end());
  return v;
}

// crossings sharing at least `limit` vertices
Verdict shared_vertex_check(const std::string& name, const Drawing& d, const CrossingSet& cs, size_t limit) {
  const Graph& g = d.graph;
  std::map<std::vector<int>, int> seen;
  for (int x = 0; x < cs.size(); ++x) {
    auto vs = cs.vertices_of(g, x);
    std::vector<int> pick(vs.size(), 0);
    std::fill(pick.begin(), pick.begin() + std::min(limit, vs.size()), 1);
    if (vs.size() < limit) continue;
    // every limit-subset of the crossing's vertices
    std::sort(pick.begin(), pick.end(), std::greater<int>());
    do {
      std::vector<int> sub;
      for (size_t i = 0; i < vs.size(); ++i)
        if (pick[i]) sub.push_back(vs[i]);
      auto [it, fresh] = seen.insert({sub, x});
      if (!fresh && it->second != x) {
        int y = it->second;
        auto shared = intersect(cs.vertices_of(g, y), vs);
        return Verdict::fail(name, Json{{"crossings", {crossing_json(d, cs, y), crossing_json(d, cs, x)}},
                                        {"shared_vertices", vertex_list(g, shared)}});
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return Verdict::pass(name);
}

// anchor of the fan crossing e, or -1 when the crossers have no common vertex
int fan_anchor(const Graph& g, const std::vector<int>& F) {
  std::vector<int> common = ends(g, F[0]);
  for (size_t i = 1; i < F.size(); ++i) common = intersect(common, ends(g, F[i]));
  return common.empty() ? -1 : common[0];
}

// side of a crossing seen from e, with f oriented toward v
int approach_side(const Graph& g, const Crossing& c, int e, int v) {
  int f = c.a == e ? c.b : c.a;
  int s = c.a == e ? c.side : -c.side;
  if (g.edge(f)[0] == v) s = -s;
  return s;
}

const CurvePos& pos_on(const Crossing& c, int e) { return c.a == e ? c.on_a : c.on_b; }

// polyline of f from the crossing toward its endpoint v
std::vector<Point> toward(const Drawing& d, int f, const Crossing& c, int v) {
  const auto& curve = d.curve[f];
  const CurvePos& cp = pos_on(c, f);
  std::vector<Point> out{c.p};
  if (d.graph.edge(f)[1] == v) {
    for (size_t i = cp.seg + 1; i < curve.size(); ++i) out.push_back(curve[i]);
  } else {
    for (int i = cp.seg; i >= 0; --i) out.push_back(curve[i]);
  }
  return out;
}

// e's polyline between two crossings, from xi to xj
std::vector<Point> between(const Drawing& d, int e, const Crossing& xi, const Crossing& xj) {
  const auto& curve = d.curve[e];
  const CurvePos& pi = pos_on(xi, e);
  const CurvePos& pj = pos_on(xj, e);
  bool forward = pi < pj;
  const CurvePos& lo = forward ? pi : pj;
  const CurvePos& hi = forward ? pj : pi;
  std::vector<Point> out{forward ? xi.p : xj.p};
  for (int i = lo.seg + 1; i <= hi.seg; ++i) out.push_back(curve[i]);
  out.push_back(forward ? xj.p : xi.p);
  if (!forward) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

bool on_polyline_boundary(const std::vector<Point>& poly, const Point& p) {
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    if (orientation(a, b, p) != 0) continue;
    if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
        p.y <= std::max(a.y, b.y))
      return true;
  }
  return false;
}

int winding_number(const std::vector<Point>& poly, const Point& p) {
  int w = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    if (a.y <= p.y) {
      if (b.y > p.y && orientation(a, b, p) > 0) ++w;
    } else {
      if (b.y <= p.y && orientation(a, b, p) < 0) --w;
    }
  }
  return w;
}

Verdict check_k_planar(const Drawing& d, const CrossingSet& cs, int k) {
  std::string name = concept_label({ConceptKind::KPlanar, k});
  for (int e = 0; e < d.graph.m(); ++e) {
    int n = cs.count_on(e);
    if (n > k) return Verdict::fail(name, Json{{"edge", d.graph.edge_key(e)}, {"crossings", n}});
  }
  return Verdict::pass(name);
}

Verdict check_k_vertex_planar(const Drawing& d, const CrossingSet& cs, int k) {
  std::string name = concept_label({ConceptKind::KVertexPlanar, k});
  std::vector<int> load(d.graph.n(), 0);
  for (int x = 0; x < cs.size(); ++x)
    for (int v : cs.vertices_of(d.graph, x)) ++load[v];
  for (int v = 0; v < d.graph.n(); ++v)
    if (load[v] > k) return Verdict::fail(name, Json{{"vertex", d.graph.id(v)}, {"crossings", load[v]}});
  return Verdict::pass(name);
}

Verdict check_ic(const Drawing& d, const CrossingSet& cs) { return shared_vertex_check("ic", d, cs, 1); }

Verdict check_nic(const Drawing& d, const CrossingSet& cs) { return shared_vertex_check("nic", d, cs, 2); }

Verdict check_nnic(const Drawing& d, const CrossingSet& cs) {
  Verdict s = is_simple_drawing(d, cs);
  if (!s.holds) return Verdict::fail("nnic", Json{{"condition", "not simple"}, {"simple", *s.witness}});
  return shared_vertex_check("nnic", d, cs, 3);
}

Verdict check_k_fan_crossing_free(const Drawing& d, const CrossingSet& cs, int k) {
  std::string name = concept_label({ConceptKind::KFanCrossingFree, k});
  const Graph& g = d.graph;
  Verdict s = is_simple_drawing(d, cs);
  if (!s.holds) return Verdict::fail(name, Json{{"condition", "not simple"}, {"simple", *s.witness}});
  for (int e = 0; e < g.m(); ++e) {
    std::map<int, std::vector<int>> fan;
    for (int f : cs.crossers(e))
      for (int z : g.edge(f))
        if (!g.incident_to(e, z)) fan[z].push_back(f);
    for (const auto& [z, fs] : fan)
      if (static_cast<int>(fs.size()) >= k)
        return Verdict::fail(name, Json{{"edge", g.edge_key(e)},
                                        {"vertex", g.id(z)},
                                        {"fan", edge_list(g, std::vector<int>(fs.begin(), fs.begin() + k))}});
  }
  return Verdict::pass(name);
}

Verdict check_adjacency_crossing(const Drawing& d, const CrossingSet& cs) {
  const Graph& g = d.graph;
  for (int e = 0; e < g.m(); ++e) {
    auto F = cs.crossers(e);
    for (size_t i = 0; i < F.size(); ++i)
      for (size_t j = i + 1; j < F.size(); ++j)
        if (!g.adjacent_edges(F[i], F[j]))
          return Verdict::fail("ac", Json{{"edge", g.edge_key(e)}, {"independent", edge_list(g, {F[i], F[j]})}});
  }
  return Verdict::pass("ac");
}

Verdict check_fan_crossing(const Drawing& d, const CrossingSet& cs) {
  const Graph& g = d.graph;
  for (int e = 0; e < g.m(); ++e) {
    auto F = cs.crossers(e);
    if (F.size() >= 2 && fan_anchor(g, F) < 0)
      return Verdict::fail("fc", Json{{"edge", g.edge_key(e)}, {"crossers", edge_list(g, F)}});
  }
  return Verdict::pass("fc");
}

Verdict check_weak_fan_planar(const Drawing& d, const CrossingSet& cs) {
  Verdict fc = check_fan_crossing(d, cs);
  if (!fc.holds) return Verdict::fail("wfp", Json{{"condition", "not fan-crossing"}, {"fc", *fc.witness}});
  const Graph& g = d.graph;
  for (int e = 0; e < g.m(); ++e) {
    auto F = cs.crossers(e);
    if (F.size() < 2) continue;
    int v = fan_anchor(g, F);
    int first = -1;
    for (int x : cs.along[e]) {
      const auto& c = cs.crossings[x];
      if (c.a == c.b) continue;
      if (first < 0) {
        first = x;
        continue;
      }
      if (approach_side(g, c, e, v) != approach_side(g, cs.crossings[first], e, v))
        return Verdict::fail("wfp", Json{{"edge", g.edge_key(e)},
                                         {"anchor", g.id(v)},
                                         {"opposite", {crossing_json(d, cs, first), crossing_json(d, cs, x)}}});
    }
  }
  return Verdict::pass("wfp");
}

Verdict check_strong_fan_planar(const Drawing& d, const CrossingSet& cs) {
  Verdict wfp = check_weak_fan_planar(d, cs);
  if (!wfp.holds) return Verdict::fail("sfp", Json{{"condition", "not weakly fan-planar"}, {"wfp", *wfp.witness}});
  const Graph& g = d.graph;
  for (int e = 0; e < g.m(); ++e) {
    auto F = cs.crossers(e);
    if (F.size() < 2) continue;
    int v = fan_anchor(g, F);
    std::vector<int> xs;
    for (int x : cs.along[e])
      if (cs.crossings[x].a != cs.crossings[x].b) xs.push_back(x);
    for (size_t i = 0; i < xs.size(); ++i) {
      for (size_t j = i + 1; j < xs.size(); ++j) {
        const auto& ci = cs.crossings[xs[i]];
        const auto& cj = cs.crossings[xs[j]];
        int fi = ci.a == e ? ci.b : ci.a;
        int fj = cj.a == e ? cj.b : cj.a;
        if (fi == fj) continue;
        std::vector<Point> poly = between(d, e, ci, cj);
        auto tail = toward(d, fj, cj, v);
        poly.insert(poly.end(), tail.begin() + 1, tail.end());
        auto head = toward(d, fi, ci, v);
        for (size_t h = head.size() - 1; h-- > 1;) poly.push_back(head[h]);
        for (int u : g.edge(e)) {
          const Point& p = d.pos[u];
          if (on_polyline_boundary(poly, p)) continue;
          if (winding_number(poly, p) != 0)
            return Verdict::fail("sfp", Json{{"edge", g.edge_key(e)},
                                             {"fan", edge_list(g, {fi, fj})},
                                             {"anchor", g.id(v)},
                                             {"enclosed", g.id(u)}});
        }
      }
    }
  }
  return Verdict::pass("sfp");
}

Verdict check_k_edge_crossing(const Drawing& d, const CrossingSet& cs, int k) {
  std::string name = concept_label({ConceptKind::KEdgeCrossing, k});
  std::vector<int> crossed;
  for (int e = 0; e < d.graph.m(); ++e)
    if (!cs.along[e].empty()) crossed.push_back(e);
  if (static_cast<int>(crossed.size()) > k) {
    crossed.resize(k + 1);
    return Verdict::fail(name, Json{{"crossed_edges", edge_list(d.graph, crossed)}});
  }
  return Verdict::pass(name);
}

Verdict check_k_gap_planar(const Drawing& d, const CrossingSet& cs, int k) {
  std::string name = concept_label({ConceptKind::KGapPlanar, k});
  const Graph& g = d.graph;
  int X = cs.size();
  std::vector<int> assign(X, -1);
  std::vector<std::vector<int>> load(g.m());  // crossings assigned to each edge
  auto options = [&](int x) {
    const auto& c = cs.crossings[x];
    return c.a == c.b ? std::vector<int>{c.a} : std::vector<int>{c.a, c.b};
  };
  for (int x0 = 0; x0 < X; ++x0) {
    // BFS for an augmenting path: x0 -> edge -> assigned crossing -> other edge ...
    std::vector<std::pair<int, int>> parent(g.m(), {-2, -2});  // (crossing moved, previous edge)
    std::deque<int> queue;
    for (int f : options(x0))
      if (parent[f].first == -2) {
        parent[f] = {x0, -1};
        queue.push_back(f);
      }
    int found = -1;
    while (!queue.empty() && found < 0) {
      int f = queue.front();
      queue.pop_front();
      if (static_cast<int>(load[f].size()) < k) {
        found = f;
        break;
      }
      for (int y : load[f])
        for (int h : options(y))
          if (parent[h].first == -2) {
            parent[h] = {y, f};
            queue.push_back(h);
          }
    }
    if (found < 0) {
      std::vector<int> S;
      for (int f = 0; f < g.m(); ++f)
        if (parent[f].first != -2) S.push_back(f);
      std::vector<char> in(g.m(), 0);
      for (int f : S) in[f] = 1;
      int internal = 0;
      for (const auto& c : cs.crossings)
        if (in[c.a] && in[c.b]) ++internal;
      return Verdict::fail(name, Json{{"deficient_edges", edge_list(g, S)},
                                      {"internal_crossings", internal},
                                      {"capacity", static_cast<long>(k) * static_cast<long>(S.size())}});
    }
    for (int f = found; f != -1;) {
      auto [y, prev] = parent[f];
      if (prev >= 0) {
        auto& lp = load[prev];
        lp.erase(std::find(lp.begin(), lp.end(), y));
      }
      load[f].push_back(y);
      assign[y] = f;
      f = prev;
    }
  }
  Json a = Json::array();
  for (int x = 0; x < X; ++x) a.push_back(g.edge_key(assign[x]));
  return Verdict::pass(name, Json{{"assignment", a}});
}

namespace {

// smallest-index-first branching; choices(x) lists the objects that cover crossing x
template <class Covers, class Choices>
bool branch(int budget, std::vector<int>& chosen, const CrossingSet& cs, Covers covers, Choices choices,
            long& nodes) {
  ++nodes;
  int open = -1;
  for (int x = 0; x < cs.size(); ++x) {
    bool hit = false;
    for (int o : chosen)
      if (covers(o, x)) hit = true;
    if (!hit) {
      open = x;
      break;
    }
  }
  if (open < 0) return true;
  if (budget == 0) return false;
  for (int o : choices(open)) {
    chosen.push_back(o);
    if (branch(budget - 1, chosen, cs, covers, choices, nodes)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Verdict check_k_apex(const Drawing& d, const CrossingSet& cs, int k) {
  std::string name = concept_label({ConceptKind::KApex, k});
  const Graph& g = d.graph;
  std::vector<std::vector<int>> vs(cs.size());
  for (int x = 0; x < cs.size(); ++x) vs[x] = cs.vertices_of(g, x);
  auto covers = [&](int v, int x) { return std::binary_search(vs[x].begin(), vs[x].end(), v); };
  auto choices = [&](int x) { return vs[x]; };
  std::vector<int> chosen;
  long nodes = 0;
  if (branch(k, chosen, cs, covers, choices, nodes)) {
    std::sort(chosen.begin(), chosen.end());
    return Verdict::pass(name, Json{{"apex", vertex_list(g, chosen)}});
  }
  // a greedy family of vertex-disjoint crossings, if it is large enough, certifies the failure
  std::vector<int> packing;
  std::set<int> used;
  for (int x = 0; x < cs.size(); ++x) {
    bool free = true;
    for (int v : vs[x])
      if (used.count(v)) free = false;
    if (!free) continue;
    packing.push_back(x);
    used.insert(vs[x].begin(), vs[x].end());
  }
  Json w{{"reason", "no vertex set of size <= k meets every crossing"}, {"search_nodes", nodes}};
  if (static_cast<int>(packing.size()) > k) {
    Json p = Json::array();
    for (int i = 0; i <= k; ++i) p.push_back(crossing_json(d, cs, packing[i]));
    w["disjoint_crossings"] = p;
  }
  return Verdict::fail(name, w);
}

Verdict check_skewness(const Drawing& d, const CrossingSet& cs, int k) {
  std::string name = concept_label({ConceptKind::Skewness, k});
  const Graph& g = d.graph;
  auto covers = [&](int e, int x) { return cs.crossings[x].a == e || cs.crossings[x].b == e; };
  auto choices = [&](int x) {
    const auto& c = cs.crossings[x];
    return c.a == c.b ? std::vector<int>{c.a} : std::vector<int>{c.a, c.b};
  };
  std::vector<int> chosen;
  long nodes = 0;
  if (branch(k, chosen, cs, covers, choices, nodes)) {
    std::sort(chosen.begin(), chosen.end());
    return Verdict::pass(name, Json{{"edges", edge_list(g, chosen)}});
  }
  std::vector<int> packing;
  std::set<int> used;
  for (int x = 0; x < cs.size(); ++x) {
    const auto& c = cs.crossings[x];
    if (used.count(c.a) || used.count(c.b)) continue;
    packing.push_back(x);
    used.insert(c.a);
    used.insert(c.b);
  }
  Json w{{"reason", "no edge set of size <= k meets every crossing"}, {"search_nodes", nodes}};
  if (static_cast<int>(packing.size()) > k) {
    Json p = Json::array();
    for (int i = 0; i <= k; ++i) p.push_back(crossing_json(d, cs, packing[i]));
    w["disjoint_crossings"] = p;
  }
  return Verdict::fail(name, w);
}

Verdict check_concept(const Concept& c, const Drawing& d, const CrossingSet& cs) {
  switch (c.kind) {
    case ConceptKind::KPlanar: return check_k_planar(d, cs, c.k);
    case ConceptKind::KVertexPlanar: return check_k_vertex_planar(d, cs, c.k);
    case ConceptKind::IC: return check_ic(d, cs);
    case ConceptKind::NIC: return check_nic(d, cs);
    case ConceptKind::NNIC: return check_nnic(d, cs);
    case ConceptKind::KFanCrossingFree: return check_k_fan_crossing_free(d, cs, c.k);
    case ConceptKind::AdjacencyCrossing: return check_adjacency_crossing(d, cs);
    case ConceptKind::FanCrossing: return check_fan_crossing(d, cs);
    case ConceptKind::WeakFanPlanar: return check_weak_fan_planar(d, cs);
    case ConceptKind::StrongFanPlanar: return check_strong_fan_planar(d, cs);
    case ConceptKind::KEdgeCrossing: return check_k_edge_crossing(d, cs, c.k);
    case ConceptKind::KGapPlanar: return check_k_gap_planar(d, cs, c.k);
    case ConceptKind::KApex: return check_k_apex(d, cs, c.k);
    case ConceptKind::Skewness: return check_skewness(d, cs, c.k);
  }
  return Verdict::pass("?");
}

}  // namespace bcr
