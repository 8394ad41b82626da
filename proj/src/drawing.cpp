#include "bcr/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace bcr {

Json to_json(const Verdict& v) {
  Json j;
  j["concept"] = v.concept_name;
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = *v.witness;
  if (v.certificate) j["certificate"] = *v.certificate;
  return j;
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

void Drawing::set_straight(int e) {
  const auto& ed = graph.edge(e);
  if (static_cast<int>(curve.size()) < graph.m()) curve.resize(graph.m());
  curve[e] = {pos[ed[0]], pos[ed[1]]};
}

int Drawing::segment_count() const {
  int s = 0;
  for (const auto& c : curve) s += static_cast<int>(c.size()) - 1;
  return s;
}

GeneralPositionViolation::GeneralPositionViolation(std::string k, Point w, std::vector<int> es,
                                                   std::string detail)
    : std::runtime_error(k + " at (" + to_string(w.x) + ", " + to_string(w.y) + ")" +
                         (detail.empty() ? "" : ": " + detail)),
      kind(std::move(k)),
      where(std::move(w)),
      edges(std::move(es)) {}

bool operator<(const CurvePos& a, const CurvePos& b) {
  if (a.seg != b.seg) return a.seg < b.seg;
  return a.t < b.t;
}

int CrossingSet::count_on(int e) const {
  int n = 0;
  int last = -1;
  std::vector<int> ids = along[e];
  std::sort(ids.begin(), ids.end());
  for (int x : ids) {
    if (x != last) ++n;
    last = x;
  }
  return n;
}

std::vector<int> CrossingSet::crossers(int e) const {
  std::vector<int> out;
  for (int x : along[e]) {
    const auto& c = crossings[x];
    int f = c.a == e ? c.b : c.a;
    if (f != e) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> CrossingSet::vertices_of(const Graph& g, int x) const {
  const auto& c = crossings[x];
  std::vector<int> vs{g.edge(c.a)[0], g.edge(c.a)[1], g.edge(c.b)[0], g.edge(c.b)[1]};
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

namespace {

struct Seg {
  int edge;
  int idx;
  const Point* a;
  const Point* b;
  double xmin, xmax, ymin, ymax;
  double ax, ay, bx, by;
};

// orientation in doubles; 2 when the error bound cannot certify the sign
int fast_orientation(double ax, double ay, double bx, double by, double cx, double cy) {
  double det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  double mag = (std::abs(ax) + std::abs(bx) + std::abs(cx)) * (std::abs(ay) + std::abs(by) + std::abs(cy));
  if (std::abs(det) <= 1e-12 * mag + 1e-300) return 2;
  return det > 0 ? 1 : -1;
}

bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

double pad(double v) { return 1e-9 * (std::abs(v) + 1.0); }

std::string vid(const Drawing& d, int v) { return d.graph.id(v); }

std::string ekey(const Drawing& d, int e) { return d.graph.edge_key(e); }

void validate(const Drawing& d) {
  const Graph& g = d.graph;
  if (static_cast<int>(d.pos.size()) != g.n())
    throw GeneralPositionViolation("missing-position", {}, {}, "position count != vertex count");
  if (static_cast<int>(d.curve.size()) != g.m())
    throw GeneralPositionViolation("missing-curve", {}, {}, "curve count != edge count");
  std::vector<int> order(g.n());
  for (int v = 0; v < g.n(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d.pos[a] < d.pos[b]; });
  for (size_t i = 1; i < order.size(); ++i)
    if (d.pos[order[i]] == d.pos[order[i - 1]])
      throw GeneralPositionViolation("coincident-vertices", d.pos[order[i]], {},
                                     vid(d, order[i - 1]) + ", " + vid(d, order[i]));
  for (int e = 0; e < g.m(); ++e) {
    const auto& c = d.curve[e];
    if (c.size() < 2) throw GeneralPositionViolation("short-curve", {}, {e}, ekey(d, e));
    if (c.front() != d.pos[g.edge(e)[0]] || c.back() != d.pos[g.edge(e)[1]])
      throw GeneralPositionViolation("curve-endpoint", c.front(), {e},
                                     ekey(d, e) + " does not start/end at its vertices");
    for (size_t i = 1; i < c.size(); ++i)
      if (c[i] == c[i - 1]) throw GeneralPositionViolation("zero-length-segment", c[i], {e}, ekey(d, e));
    for (size_t i = 2; i < c.size(); ++i) {
      Point d1 = c[i - 1] - c[i - 2], d2 = c[i] - c[i - 1];
      if (sign(cross(d1, d2)) == 0 && sign(dot(d1, d2)) < 0)
        throw GeneralPositionViolation("overlap", c[i - 1], {e, e}, ekey(d, e) + " doubles back");
    }
  }
}

}  // namespace

CrossingSet compute_crossings(const Drawing& d) {
  validate(d);
  const Graph& g = d.graph;
  std::vector<Seg> segs;
  for (int e = 0; e < g.m(); ++e) {
    const auto& c = d.curve[e];
    for (size_t i = 0; i + 1 < c.size(); ++i) {
      double ax = to_double(c[i].x), ay = to_double(c[i].y);
      double bx = to_double(c[i + 1].x), by = to_double(c[i + 1].y);
      Seg s{e, static_cast<int>(i), &c[i], &c[i + 1], std::min(ax, bx), std::max(ax, bx),
            std::min(ay, by), std::max(ay, by), ax, ay, bx, by};
      s.xmin -= pad(s.xmin);
      s.xmax += pad(s.xmax);
      s.ymin -= pad(s.ymin);
      s.ymax += pad(s.ymax);
      segs.push_back(s);
    }
  }
  std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) {
    if (a.xmin != b.xmin) return a.xmin < b.xmin;
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.idx < b.idx;
  });

  // vertices lying on curves
  std::vector<std::pair<double, int>> vx;
  std::vector<double> vy(g.n());
  for (int v = 0; v < g.n(); ++v) {
    vx.push_back({to_double(d.pos[v].x), v});
    vy[v] = to_double(d.pos[v].y);
  }
  std::sort(vx.begin(), vx.end());
  for (const Seg& s : segs) {
    auto it = std::lower_bound(vx.begin(), vx.end(), std::make_pair(s.xmin, -1));
    int last = static_cast<int>(d.curve[s.edge].size()) - 2;
    for (; it != vx.end() && it->first <= s.xmax; ++it) {
      int v = it->second;
      const Point& p = d.pos[v];
      double py = vy[v];
      if (py < s.ymin || py > s.ymax) continue;
      if (fast_orientation(s.ax, s.ay, s.bx, s.by, it->first, py) != 2) continue;
      if (!on_closed_segment(p, *s.a, *s.b)) continue;
      bool own_start = s.idx == 0 && p == *s.a && g.edge(s.edge)[0] == v;
      bool own_end = s.idx == last && p == *s.b && g.edge(s.edge)[1] == v;
      if (!own_start && !own_end)
        throw GeneralPositionViolation("vertex-on-edge", p, {s.edge},
                                       "vertex " + vid(d, v) + " lies on " + ekey(d, s.edge));
    }
  }

  CrossingSet cs;
  for (size_t i = 0; i < segs.size(); ++i) {
    const Seg& s1 = segs[i];
    for (size_t j = i + 1; j < segs.size() && segs[j].xmin <= s1.xmax; ++j) {
      const Seg& s2 = segs[j];
      if (s2.ymin > s1.ymax || s1.ymin > s2.ymax) continue;
      if (s1.edge == s2.edge && std::abs(s1.idx - s2.idx) == 1) continue;  // shared bend
      const Seg& x = (s1.edge < s2.edge || (s1.edge == s2.edge && s1.idx < s2.idx)) ? s1 : s2;
      const Seg& y = &x == &s1 ? s2 : s1;
      const Point &a = *x.a, &b = *x.b, &c = *y.a, &dd = *y.b;
      std::vector<int> es{x.edge, y.edge};
      {
        // common endpoint: the segments meet only there unless they are collinear
        const Point* shared = nullptr;
        double sx = 0, sy = 0, xox = 0, xoy = 0, yox = 0, yoy = 0;
        auto try_pair = [&](double px, double py, double qx, double qy, const Point* P, const Point* Q,
                            double ox1, double oy1, double ox2, double oy2) {
          if (shared || px != qx || py != qy || *P != *Q) return;
          shared = P, sx = px, sy = py, xox = ox1, xoy = oy1, yox = ox2, yoy = oy2;
        };
        try_pair(x.ax, x.ay, y.ax, y.ay, x.a, y.a, x.bx, x.by, y.bx, y.by);
        try_pair(x.ax, x.ay, y.bx, y.by, x.a, y.b, x.bx, x.by, y.ax, y.ay);
        try_pair(x.bx, x.by, y.ax, y.ay, x.b, y.a, x.ax, x.ay, y.bx, y.by);
        try_pair(x.bx, x.by, y.bx, y.by, x.b, y.b, x.ax, x.ay, y.ax, y.ay);
        if (shared && fast_orientation(sx, sy, xox, xoy, yox, yoy) != 2) {
          bool ok = false;
          if (x.edge != y.edge)
            for (int v : g.edge(x.edge))
              if (g.incident_to(y.edge, v) && d.pos[v] == *shared) ok = true;
          if (!ok)
            throw GeneralPositionViolation("touching", *shared, es, ekey(d, x.edge) + " / " + ekey(d, y.edge));
          continue;
        }
      }
      int f1 = fast_orientation(x.ax, x.ay, x.bx, x.by, y.ax, y.ay);
      int f2 = fast_orientation(x.ax, x.ay, x.bx, x.by, y.bx, y.by);
      int f3 = fast_orientation(y.ax, y.ay, y.bx, y.by, x.ax, x.ay);
      int f4 = fast_orientation(y.ax, y.ay, y.bx, y.by, x.bx, x.by);
      bool certain = f1 != 2 && f2 != 2 && f3 != 2 && f4 != 2;
      if (certain && (f1 == f2 || f3 == f4)) continue;
      int o1, o2, o3, o4;
      if (certain) {
        o1 = f1, o2 = f2, o3 = f3, o4 = f4;
      } else {
        o1 = orientation(a, b, c), o2 = orientation(a, b, dd);
        o3 = orientation(c, dd, a), o4 = orientation(c, dd, b);
      }
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        Point r = b - a, q = dd - c;
        Rational den = cross(r, q);
        Rational t = cross(c - a, q) / den;
        Rational u = cross(c - a, r) / den;
        Crossing cr;
        cr.a = x.edge;
        cr.b = y.edge;
        cr.p = a + t * r;
        cr.on_a = {x.idx, t};
        cr.on_b = {y.idx, u};
        cr.side = sign(den);
        cs.crossings.push_back(std::move(cr));
        continue;
      }
      if (o1 == 0 && o2 == 0) {
        // collinear: compare along the dominant axis
        bool use_x = a.x != b.x;
        auto key = [&](const Point& p) -> const Rational& { return use_x ? p.x : p.y; };
        Rational lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(dd)));
        Rational hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(dd)));
        if (lo < hi) throw GeneralPositionViolation("overlap", a, es, ekey(d, x.edge) + " / " + ekey(d, y.edge));
        if (lo > hi) continue;
      }
      std::vector<Point> touch;
      if (o1 == 0 && on_closed_segment(c, a, b)) touch.push_back(c);
      if (o2 == 0 && on_closed_segment(dd, a, b)) touch.push_back(dd);
      if (o3 == 0 && on_closed_segment(a, c, dd)) touch.push_back(a);
      if (o4 == 0 && on_closed_segment(b, c, dd)) touch.push_back(b);
      if (touch.empty()) continue;
      const Point& p = touch.front();
      bool shared_vertex = false;
      if (x.edge != y.edge) {
        for (int v : g.edge(x.edge))
          if (g.incident_to(y.edge, v) && d.pos[v] == p) shared_vertex = true;
      }
      if (!shared_vertex)
        throw GeneralPositionViolation("touching", p, es, ekey(d, x.edge) + " / " + ekey(d, y.edge));
    }
  }

  std::sort(cs.crossings.begin(), cs.crossings.end(), [](const Crossing& p, const Crossing& q) {
    if (p.a != q.a) return p.a < q.a;
    if (p.b != q.b) return p.b < q.b;
    if (p.on_a.seg != q.on_a.seg || p.on_a.t != q.on_a.t) return p.on_a < q.on_a;
    return p.on_b < q.on_b;
  });
  std::vector<int> by_point(cs.crossings.size());
  for (size_t i = 0; i < by_point.size(); ++i) by_point[i] = static_cast<int>(i);
  std::sort(by_point.begin(), by_point.end(),
            [&](int p, int q) { return cs.crossings[p].p < cs.crossings[q].p; });
  for (size_t i = 1; i < by_point.size(); ++i) {
    const auto& p = cs.crossings[by_point[i - 1]];
    const auto& q = cs.crossings[by_point[i]];
    if (p.p == q.p)
      throw GeneralPositionViolation("coincident-crossings", p.p, {p.a, p.b, q.a, q.b}, "");
  }

  cs.along.assign(g.m(), {});
  for (int x = 0; x < cs.size(); ++x) {
    cs.along[cs.crossings[x].a].push_back(x);
    cs.along[cs.crossings[x].b].push_back(x);
  }
  for (int e = 0; e < g.m(); ++e) {
    auto pos_on = [&](int x, bool second) -> const CurvePos& {
      const auto& c = cs.crossings[x];
      if (c.a != e) return c.on_b;
      if (c.b != e) return c.on_a;
      return second ? c.on_b : c.on_a;
    };
    // a self-crossing occupies two slots; give each slot its own position
    std::vector<std::pair<CurvePos, int>> items;
    std::map<int, int> seen;
    for (int x : cs.along[e]) items.push_back({pos_on(x, seen[x]++ > 0), x});
    std::sort(items.begin(), items.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    cs.along[e].clear();
    for (auto& it : items) cs.along[e].push_back(it.second);
  }
  return cs;
}

Verdict is_simple_drawing(const Drawing& d, const CrossingSet& cs) {
  const std::string name = "simple";
  const Graph& g = d.graph;
  std::map<std::pair<int, int>, int> first;
  for (int x = 0; x < cs.size(); ++x) {
    const auto& c = cs.crossings[x];
    if (c.a == c.b) {
      return Verdict::fail(name, Json{{"condition", "self-crossing"},
                                      {"edge", g.edge_key(c.a)},
                                      {"point", point_json(c.p)}});
    }
    if (g.adjacent_edges(c.a, c.b)) {
      int shared = g.incident_to(c.b, g.edge(c.a)[0]) ? g.edge(c.a)[0] : g.edge(c.a)[1];
      return Verdict::fail(name, Json{{"condition", "adjacent-crossing"},
                                      {"edges", {g.edge_key(c.a), g.edge_key(c.b)}},
                                      {"shared_vertex", g.id(shared)},
                                      {"point", point_json(c.p)}});
    }
    auto [it, inserted] = first.insert({{c.a, c.b}, x});
    if (!inserted) {
      return Verdict::fail(name, Json{{"condition", "multiple-crossing"},
                                      {"edges", {g.edge_key(c.a), g.edge_key(c.b)}},
                                      {"points", {point_json(cs.crossings[it->second].p), point_json(c.p)}}});
    }
  }
  std::map<Point, std::vector<int>> at;
  for (int x = 0; x < cs.size(); ++x) at[cs.crossings[x].p].push_back(x);
  for (const auto& [p, xs] : at)
    if (xs.size() > 1)
      return Verdict::fail(name, Json{{"condition", "concurrent-crossings"}, {"point", point_json(p)}});
  return Verdict::pass(name);
}

bool is_straight_line(const Drawing& d) {
  for (const auto& c : d.curve)
    if (c.size() != 2) return false;
  return true;
}

}  // namespace bcr
