#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace bcr;

namespace oracle {

namespace {

// solve a + s*(b-a) = c + t*(d-c) by Cramer's rule; strict interior hits only
bool proper_hit(const Point& a, const Point& b, const Point& c, const Point& d, Point& out, bool& at_end) {
  Rational rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  Rational den = rx * sy - ry * sx;
  if (den == 0) return false;
  Rational qx = c.x - a.x, qy = c.y - a.y;
  Rational s = (qx * sy - qy * sx) / den;
  Rational t = (qx * ry - qy * rx) / den;
  if (s < 0 || s > 1 || t < 0 || t > 1) return false;
  out = {a.x + s * rx, a.y + s * ry};
  at_end = (s == 0 || s == 1 || t == 0 || t == 1);
  return true;
}

}  // namespace

std::vector<PairHit> brute_crossings(const Drawing& d) {
  std::set<std::tuple<int, int, Rational, Rational>> seen;
  std::vector<PairHit> out;
  const Graph& g = d.graph;
  for (int e = 0; e < g.m(); ++e)
    for (int f = e; f < g.m(); ++f)
      for (size_t i = 0; i + 1 < d.curve[e].size(); ++i)
        for (size_t j = 0; j + 1 < d.curve[f].size(); ++j) {
          if (e == f && j <= i + 1) continue;
          Point p;
          bool at_end = false;
          if (!proper_hit(d.curve[e][i], d.curve[e][i + 1], d.curve[f][j], d.curve[f][j + 1], p, at_end)) continue;
          // shared drawing vertices and bends are not crossings
          bool is_vertex = false;
          for (const auto& q : d.pos)
            if (q == p) is_vertex = true;
          if (is_vertex) continue;
          if (seen.insert({e, f, p.x, p.y}).second) out.push_back({e, f, p});
        }
  return out;
}

bool gap_feasible(const Drawing& d, const CrossingSet& cs, int k) {
  int X = cs.size();
  for (long mask = 0; mask < (1L << X); ++mask) {
    std::vector<int> load(d.graph.m(), 0);
    bool ok = true;
    for (int x = 0; x < X && ok; ++x) {
      const auto& c = cs.crossings[x];
      int e = (mask >> x & 1) ? c.b : c.a;
      if (++load[e] > k) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

namespace {

bool subsets_up_to(int universe, int k, const std::function<bool(const std::vector<int>&)>& test) {
  std::vector<int> cur;
  std::function<bool(int)> rec = [&](int start) {
    if (test(cur)) return true;
    if (static_cast<int>(cur.size()) == k) return false;
    for (int i = start; i < universe; ++i) {
      cur.push_back(i);
      if (rec(i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool apex_feasible(const Drawing& d, const CrossingSet& cs, int k) {
  const Graph& g = d.graph;
  return subsets_up_to(g.n(), k, [&](const std::vector<int>& vs) {
    std::set<int> gone(vs.begin(), vs.end());
    for (const auto& c : cs.crossings) {
      bool hit = false;
      for (int e : {c.a, c.b})
        for (int v : g.edge(e))
          if (gone.count(v)) hit = true;
      if (!hit) return false;
    }
    return true;
  });
}

bool skew_feasible(const Drawing& d, const CrossingSet& cs, int k) {
  return subsets_up_to(d.graph.m(), k, [&](const std::vector<int>& es) {
    std::set<int> gone(es.begin(), es.end());
    for (const auto& c : cs.crossings)
      if (!gone.count(c.a) && !gone.count(c.b)) return false;
    return true;
  });
}

void for_each_tuple(const FrameworkGraph& fg, const std::function<void(const PathTuple&)>& fn) {
  PathTuple t{};
  std::function<void(int)> rec = [&](int c) {
    if (c == 9) {
      fn(t);
      return;
    }
    for (int p = 0; p < fg.cons[c].width(); ++p) {
      t[c] = p;
      rec(c + 1);
    }
  };
  rec(0);
}

bool is_k33_subdivision(const FrameworkGraph& fg, const PathTuple& t) {
  std::set<int> nodes(fg.node_vertex.begin(), fg.node_vertex.end());
  std::map<int, int> degree;
  std::set<int> inner;
  for (int c = 0; c < 9; ++c) {
    const auto& pv = fg.cons[c].path_vertices[t[c]];
    auto ends = Frame::nodes(c);
    if (pv.front() != fg.node_vertex[ends[0]] || pv.back() != fg.node_vertex[ends[1]]) return false;
    for (size_t i = 1; i + 1 < pv.size(); ++i) {
      if (nodes.count(pv[i]) || !inner.insert(pv[i]).second) return false;
    }
    for (size_t i = 0; i + 1 < pv.size(); ++i)
      if (fg.graph.find_edge(pv[i], pv[i + 1]) < 0) return false;
    ++degree[pv.front()];
    ++degree[pv.back()];
  }
  for (int v : nodes)
    if (degree[v] != 3) return false;
  return true;
}

bool covered_by_drawing(const Drawing& d, const CrossingSet& cs, const FrameworkGraph& fg, const PathTuple& t) {
  // connection of each drawing edge on the chosen tuple, or -1
  std::vector<int> on_tuple(d.graph.m(), -1);
  for (int c = 0; c < 9; ++c) {
    const auto& pv = fg.cons[c].path_vertices[t[c]];
    for (size_t i = 0; i + 1 < pv.size(); ++i) {
      int a = d.graph.find_vertex(fg.graph.id(pv[i])), b = d.graph.find_vertex(fg.graph.id(pv[i + 1]));
      if (a < 0 || b < 0) continue;
      int e = d.graph.find_edge(a, b);
      if (e >= 0) on_tuple[e] = c;
    }
  }
  for (const auto& x : cs.crossings) {
    int ca = on_tuple[x.a], cb = on_tuple[x.b];
    if (ca < 0 || cb < 0 || ca == cb) continue;
    auto na = Frame::nodes(ca), nb = Frame::nodes(cb);
    if (na[0] != nb[0] && na[1] != nb[1]) return true;
  }
  return false;
}

}  // namespace oracle
