#include "bcr/layouts.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "bcr/k7_data.hpp"

namespace bcr {

std::string variant_name(Variant v) { return v == Variant::UpperBound ? "upper" : "witness"; }

Variant parse_variant(const std::string& s) {
  if (s == "upper") return Variant::UpperBound;
  if (s == "witness") return Variant::Witness;
  throw ParameterError("unknown variant '" + s + "' (expected upper or witness)");
}

std::array<int, 2> designated_connections(Variant v) {
  if (v == Variant::UpperBound) return {Frame::connection(0, 1), Frame::connection(1, 0)};
  return {Frame::connection(0, 0), Frame::connection(1, 1)};
}

namespace {

using Path = std::vector<Point>;

const Point kS{rat(0), rat(-8)};
const Point kT{rat(0), rat(8)};

Point transpose(const Point& p) { return {p.y, p.x}; }

std::vector<Path> transpose(const std::vector<Path>& paths) {
  std::vector<Path> out = paths;
  for (auto& p : out)
    for (auto& x : p) x = transpose(x);
  return out;
}

std::array<Point, 6> frame_positions(Variant v) {
  Point a1{rat(0), rat(-8)}, b1{rat(0), rat(8)}, a2{rat(-8), rat(0)}, b2{rat(8), rat(0)};
  Point a3{rat(-8), rat(24)}, b3{rat(-12), rat(-12)};
  // nodes: v1 v2 v3 w1 w2 w3
  if (v == Variant::UpperBound) return {a1, a2, a3, b2, b1, b3};
  return {a1, a2, a3, b1, b2, b3};
}

// coordinate in [-2,2] of slot idx out of den
Rational slot(long idx, long den) { return rat(4 * idx, den) - 2; }

Rational spread(int n, int p) {
  if (n == 1) return 0;
  return rat(-3, 2) + rat(3L * p, n - 1);
}

Rational half_spread(int n, int p) {
  if (n == 1) return 0;
  return rat(-1, 2) + rat(p, n - 1);
}

std::vector<Path> comb(int n, const Rational& y) {
  std::vector<Path> out;
  for (int p = 0; p < n; ++p) out.push_back({kS, {spread(n, p), y}, kT});
  return out;
}

std::vector<Path> bend2(int n) {
  std::vector<Path> out;
  for (int p = 0; p < n; ++p) out.push_back({kS, {spread(n, p), rat(-2)}, kT});
  return out;
}

// l groups of k paths; separators between groups carry the bends
std::vector<Path> kpl_grid(int ell, int k) {
  long den = static_cast<long>(ell) * k + ell;
  std::vector<Path> out;
  for (int p = 0; p < ell * k; ++p) {
    Rational x = slot(p + p / k + 1, den);
    Path path{kS};
    for (int g = 1; g < ell; ++g) path.push_back({x, slot(static_cast<long>(g) * k + g, den)});
    path.push_back(kT);
    out.push_back(path);
  }
  return out;
}

// every crossing lies in the interior of a short vertical edge spanning one group
std::vector<Path> kvp_grid(int ell, int k) {
  long den = static_cast<long>(ell) * (k + 2) + 1;
  std::vector<Path> out;
  for (int p = 0; p < ell * k; ++p) {
    int g = p / k, i = p % k;
    Rational x = slot(static_cast<long>(g) * (k + 2) + 2 + i, den);
    Path path{kS};
    for (int h = 0; h < ell; ++h) {
      path.push_back({x, slot(static_cast<long>(h) * (k + 2) + 1, den)});
      path.push_back({x, slot(static_cast<long>(h) * (k + 2) + k + 2, den)});
    }
    path.push_back(kT);
    out.push_back(path);
  }
  return out;
}

std::vector<Path> nic_grid(int ell) {
  long den = 2L * ell + 2;
  std::vector<Path> out;
  for (int q = 0; q < ell; ++q) {
    Rational x = slot(2L * q + 2, den);
    Path path{kS};
    for (int g = 0; g <= ell; ++g) path.push_back({x, slot(2L * g + 1, den)});
    path.push_back(kT);
    out.push_back(path);
  }
  return out;
}

std::vector<Path> fcf_grid(int n) {
  std::vector<Path> out;
  for (int p = 0; p < n; ++p) out.push_back({kS, {spread(n, p), rat(-2)}, {spread(n, p), rat(2)}, kT});
  return out;
}

Rational kgap_sep(int g, int k) { return slot(static_cast<long>(g) * k + g, 5L * k + 5); }

std::vector<Path> kgap_blue(int k) {
  std::vector<Path> out;
  for (int p = 0; p < 5 * k; ++p) {
    Rational x = slot(p + p / k + 1, 5L * k + 5);
    out.push_back({kS, {x, rat(5, 2)}, kT});
  }
  return out;
}

// horizontal paths bending on the rays from (0,-8) between the blue groups
std::vector<Path> kgap_gray(int ell, int k) {
  int n = ell * k;
  std::vector<Path> out;
  for (int q = 0; q < n; ++q) {
    Rational y = half_spread(n, q);
    Path path{{rat(-8), rat(0)}};
    for (int g = 1; g <= 4; ++g) path.push_back({kgap_sep(g, k) * (y + 8) / rat(21, 2), y});
    path.push_back({rat(8), rat(0)});
    out.push_back(path);
  }
  return out;
}

std::vector<Path> gadget_gray(int n) {
  std::vector<Path> out;
  for (int q = 0; q < n; ++q) out.push_back({{rat(-8), rat(0)}, {rat(3), half_spread(n, q)}, {rat(8), rat(0)}});
  return out;
}

// affine map from local (u,w) to the plane: o + u*eu + w*ew
struct Affine {
  Point o{rat(0), rat(0)};
  Point eu{rat(1), rat(0)};
  Point ew{rat(0), rat(1)};
  Point operator()(const Point& p) const { return o + p.x * eu + p.y * ew; }
};

struct LocalDrawing {
  std::vector<std::optional<Point>> pos;
  std::map<int, Path> curves;  // local edge index -> polyline in local edge direction
  Affine map;
};

std::map<std::string, int> name_index(const ConGraph& g) {
  std::map<std::string, int> m;
  for (size_t i = 0; i < g.names.size(); ++i) m[g.names[i]] = static_cast<int>(i);
  return m;
}

LocalDrawing from_paths(const ConGraph& g, const std::vector<Path>& paths) {
  if (paths.size() != g.paths.size()) throw std::logic_error("design/path family size mismatch");
  LocalDrawing ld;
  ld.pos.resize(g.names.size());
  for (size_t q = 0; q < paths.size(); ++q) {
    if (paths[q].size() != g.paths[q].size()) throw std::logic_error("design/path length mismatch");
    for (size_t r = 0; r < paths[q].size(); ++r) ld.pos[g.paths[q][r]] = paths[q][r];
  }
  return ld;
}

Point k7_fig(const std::array<int, 2>& p) { return {rat(p[0], 1000), rat(p[1], 1000)}; }

// K7 with figure coordinates passed through f
template <class F>
LocalDrawing k7_drawing(const ConGraph& g, F f) {
  LocalDrawing ld;
  ld.pos.resize(g.names.size());
  for (int v = 0; v < 7; ++v) ld.pos[v] = f(k7_fig(k7_vertices()[v]));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int a = g.edges[e][0], b = g.edges[e][1];
    for (const auto& c : k7_curves()) {
      if (!((c.a == a && c.b == b) || (c.a == b && c.b == a))) continue;
      Path p;
      for (const auto& x : c.pts) p.push_back(f(k7_fig(x)));
      if (c.a != a) std::reverse(p.begin(), p.end());
      ld.curves[static_cast<int>(e)] = p;
    }
  }
  return ld;
}

// local (u,w) layouts; poles at (0,0) and (1,0)
LocalDrawing apex_local(const ConGraph& g, int ell, int k) {
  auto idx = name_index(g);
  LocalDrawing ld;
  ld.pos.resize(g.names.size());
  ld.pos[0] = Point{rat(0), rat(0)};
  ld.pos[1] = Point{rat(1), rat(0)};
  Rational sigma = rat(1, 64L * (k + 1));
  const std::array<std::array<int, 2>, 4> k5{{{4, -2}, {4, 2}, {1, 0}, {3, -1}}};
  for (int p = 0; p < k; ++p) {
    std::string ps = std::to_string(p);
    Rational wp = rat(p + 1, 8L * (k + 1));
    ld.pos[idx.at("v" + ps)] = Point{rat(3, 8), wp};
    for (int i = 0; i < ell; ++i) {
      Rational delta = rat(2L * i - (ell - 1), 128L * (k + 1) * ell);
      std::string is = ps + "." + std::to_string(i);
      ld.pos[idx.at("a" + is)] = Point{rat(3, 16), wp / 2 + delta};
      ld.pos[idx.at("b" + is)] = Point{rat(11, 16), wp / 2 + delta};
    }
    for (int m = 0; m < 4; ++m)
      ld.pos[idx.at("x" + ps + "." + std::to_string(m + 1))] =
          Point{rat(3, 8) + sigma * k5[m][1], wp + sigma * k5[m][0]};
  }
  return ld;
}

LocalDrawing skew_local(const ConGraph& g, int k) {
  auto idx = name_index(g);
  LocalDrawing ld;
  ld.pos.resize(g.names.size());
  ld.pos[0] = Point{rat(0), rat(0)};
  ld.pos[1] = Point{rat(1), rat(0)};
  Rational sigma = rat(1, 32L * (k + 1));
  for (int p = 0; p < k; ++p) {
    std::string ps = std::to_string(p);
    Point v{rat(3, 8), rat(p + 1, 8L * (k + 1))};
    ld.pos[idx.at("v" + ps)] = v;
    ld.pos[idx.at("w" + ps + ".1")] = v + sigma * Point{rat(1), rat(-1)};
    ld.pos[idx.at("w" + ps + ".2")] = v + sigma * Point{rat(1), rat(1)};
    ld.pos[idx.at("w" + ps + ".3")] = v + sigma * Point{rat(-1), rat(0)};
  }
  return ld;
}

LocalDrawing lens_local(const ConGraphSpec& spec, const ConGraph& g) {
  switch (spec.kind) {
    case ConKind::Bundle:
    case ConKind::BundlePlus: {
      std::vector<Path> paths;
      for (int q = 0; q < spec.i; ++q) {
        Path p{{rat(0), rat(0)}};
        for (int r = 1; r < spec.j; ++r) p.push_back({rat(r, spec.j), rat(q + 1)});
        p.push_back({rat(1), rat(0)});
        paths.push_back(p);
      }
      if (spec.kind == ConKind::BundlePlus) paths.push_back({{rat(0), rat(0)}, {rat(1), rat(0)}});
      return from_paths(g, paths);
    }
    case ConKind::K7:
      return k7_drawing(g, [](const Point& f) { return Point{(f.y + 2) / 4, f.x}; });
    case ConKind::ApexBlue: return apex_local(g, spec.ell, spec.k);
    case ConKind::SkewBlue: return skew_local(g, spec.k);
  }
  throw std::logic_error("unknown con-graph kind");
}

// squeeze the local drawing into a thin lens around the segment P-Q, bulging away from the origin
Affine lens_map(const LocalDrawing& ld, const Point& P, const Point& Q) {
  Rational bound = 1;
  auto visit = [&](const Point& p) {
    if (sign(p.y) == 0) return;
    Rational rest = 1 - p.x;
    Rational m = std::min<Rational>(p.x, rest) / (200 * abs(p.y));
    if (m < bound) bound = m;
  };
  for (const auto& p : ld.pos) visit(*p);
  for (const auto& [e, c] : ld.curves)
    for (const auto& p : c) visit(p);
  Rational lambda = 1;
  while (lambda > bound) lambda /= 2;
  Point d = Q - P;
  Point perp{-d.y, d.x};
  Point mid = P + rat(1, 2) * d;
  if (sign(dot(perp, mid)) < 0) perp = rat(-1) * perp;
  return {P, d, lambda * perp};
}

LocalDrawing designated_local(ConceptKind c, Variant var, bool horizontal, const ConGraphSpec& spec,
                              const ConGraph& g, int ell, int k) {
  auto paths_of = [&](const std::vector<Path>& paths) {
    return from_paths(g, horizontal ? transpose(paths) : paths);
  };
  if (var == Variant::UpperBound) {
    if (spec.kind == ConKind::Bundle && spec.i == 1 && spec.j == 1) {
      LocalDrawing ld = paths_of({{kS, kT}});
      if (horizontal && is_fan_variant(c)) {
        // dip below the red K7 and cross only its six edges at the pole s
        ld.curves[0] = {{rat(-8), rat(0)}, {rat(-1), rat(-36, 5)}, {rat(1, 2), rat(-36, 5)}, {rat(8), rat(0)}};
      }
      return ld;
    }
    switch (spec.kind) {
      case ConKind::K7:
        return k7_drawing(g, [](const Point& f) { return Point{2 * f.x, 4 * f.y}; });
      case ConKind::BundlePlus:
        return paths_of({{kS, {rat(1), rat(1)}, kT}, {kS, kT}});
      case ConKind::Bundle:
        if (c == ConceptKind::KGapPlanar) return paths_of(bend2(spec.i));
        return paths_of(comb(spec.i, rat(1)));
      default: break;
    }
    throw std::logic_error("no upper-bound design for " + spec.describe());
  }
  if (!horizontal || !uses_alternate_frame(c)) {
    switch (c) {
      case ConceptKind::KPlanar: return paths_of(kpl_grid(ell, k));
      case ConceptKind::KVertexPlanar: return paths_of(kvp_grid(ell, k));
      case ConceptKind::IC: return paths_of(kvp_grid(ell, 1));
      case ConceptKind::NIC: return paths_of(nic_grid(ell));
      case ConceptKind::NNIC:
      case ConceptKind::KFanCrossingFree: return paths_of(fcf_grid(ell * k));
      case ConceptKind::AdjacencyCrossing:
      case ConceptKind::FanCrossing:
      case ConceptKind::WeakFanPlanar:
      case ConceptKind::StrongFanPlanar: return paths_of(bend2(ell));
      case ConceptKind::KEdgeCrossing: return paths_of(bend2(k / 2));
      case ConceptKind::KGapPlanar: return paths_of(kgap_blue(k));
      case ConceptKind::KApex:
      case ConceptKind::Skewness: {
        LocalDrawing ld = c == ConceptKind::KApex ? apex_local(g, ell, k) : skew_local(g, k);
        ld.map = {kS, {rat(0), rat(16)}, {rat(16), rat(0)}};
        return ld;
      }
    }
  }
  // alternate frame, gray horizontal
  if (c == ConceptKind::KGapPlanar) return from_paths(g, kgap_gray(ell, k));
  return from_paths(g, gadget_gray(ell * k));
}

void place(Drawing& d, const Connection& con, const ConGraph& g, const LocalDrawing& ld) {
  for (size_t lv = 2; lv < g.names.size(); ++lv) {
    if (!ld.pos[lv]) throw std::logic_error("unplaced vertex " + g.names[lv]);
    d.pos[con.local_to_graph[lv]] = ld.map(*ld.pos[lv]);
  }
  for (size_t le = 0; le < g.edges.size(); ++le) {
    int e = con.edges[le];
    auto it = ld.curves.find(static_cast<int>(le));
    if (it == ld.curves.end()) {
      d.set_straight(e);
      continue;
    }
    Path p;
    for (const auto& x : it->second) p.push_back(ld.map(x));
    p.front() = d.pos[con.local_to_graph[g.edges[le][0]]];
    p.back() = d.pos[con.local_to_graph[g.edges[le][1]]];
    if (d.graph.edge(e)[0] != con.local_to_graph[g.edges[le][0]]) std::reverse(p.begin(), p.end());
    d.curve[e] = p;
  }
}

}  // namespace

StandardDrawing standard_drawing(ConceptKind c, int ell, int k, Variant var, bool rectilinear) {
  if (rectilinear && is_fan_variant(c))
    throw ParameterError("the " + short_name(c) + " standard drawings need bent edges; no rectilinear mode");
  StandardDrawing sd{construction_for(c, ell, k), {}};
  const FrameworkGraph& fg = sd.fg;
  Drawing& d = sd.drawing;
  d.graph = fg.graph;
  d.pos.assign(fg.graph.n(), {});
  d.curve.assign(fg.graph.m(), {});
  auto fp = frame_positions(var);
  for (int node = 0; node < 6; ++node) d.pos[fg.node_vertex[node]] = fp[node];
  auto des = designated_connections(var);
  for (int ci = 0; ci < 9; ++ci) {
    const Connection& con = fg.cons[ci];
    ConGraph g = instantiate_congraph(con.spec);
    LocalDrawing ld;
    if (ci == des[0] || ci == des[1]) {
      ld = designated_local(c, var, ci == des[1], con.spec, g, ell, fg.k);
    } else {
      ld = lens_local(con.spec, g);
      ld.map = lens_map(ld, d.pos[con.s], d.pos[con.t]);
    }
    place(d, con, g, ld);
  }
  if (rectilinear && !is_straight_line(d))
    throw std::logic_error("standard drawing of " + short_name(c) + " is not straight-line");
  return sd;
}

Integer crossing_count_formula(ConceptKind c, Variant v, int ell, int k) {
  recipe_for(c, ell, k);  // validates parameters
  k = effective_k(c, k);
  Integer L = ell, K = k;
  bool up = v == Variant::UpperBound;
  switch (c) {
    case ConceptKind::KPlanar:
    case ConceptKind::KVertexPlanar: return up ? Integer(K + 1) : Integer(L * K * L * K);
    case ConceptKind::IC:
    case ConceptKind::NIC: return up ? Integer(2) : Integer(L * L);
    case ConceptKind::NNIC:
    case ConceptKind::KFanCrossingFree: return up ? Integer(2 * K) : Integer(L * K * L * K);
    case ConceptKind::AdjacencyCrossing:
    case ConceptKind::FanCrossing:
    case ConceptKind::WeakFanPlanar:
    case ConceptKind::StrongFanPlanar: return up ? Integer(60) : Integer(L * L + 54);
    case ConceptKind::KEdgeCrossing: return up ? K : Integer((K / 2) * (K / 2));
    case ConceptKind::KGapPlanar: return up ? Integer(25 * K * K) : Integer(5 * L * K * K);
    case ConceptKind::KApex: return up ? Integer(K + 1) : Integer(L * K * L * K + K);
    case ConceptKind::Skewness: return up ? Integer(K + 1) : Integer(L * K * K + K);
  }
  return 0;
}

}  // namespace bcr
