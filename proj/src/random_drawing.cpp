#include "bcr/random_drawing.hpp"

#include <random>
#include <set>

namespace bcr {

Drawing random_drawing(std::uint64_t seed, const RandomDrawingOptions& opt) {
  std::mt19937_64 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int max_edges = opt.vertices * (opt.vertices - 1) / 2;
  int m = std::min(opt.edges, max_edges);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Drawing d;
    std::set<std::pair<int, int>> used;
    for (int v = 0; v < opt.vertices; ++v) {
      std::pair<int, int> p;
      do p = {uni(0, opt.grid - 1), uni(0, opt.grid - 1)};
      while (!used.insert(p).second);
      d.graph.add_vertex("u" + std::to_string(v));
      d.pos.push_back({Rational(p.first), Rational(p.second)});
    }
    while (d.graph.m() < m) {
      int a = uni(0, opt.vertices - 1), b = uni(0, opt.vertices - 1);
      if (a == b || d.graph.find_edge(a, b) >= 0) continue;
      int e = d.graph.add_edge(a, b);
      d.curve.emplace_back();
      d.set_straight(e);
      if (!opt.straight && uni(0, 2) == 0) {
        // bend at a half-integer point so it avoids the vertex grid
        Point bend{rat(2 * uni(0, opt.grid - 1) + 1, 2), rat(2 * uni(0, opt.grid - 1) + 1, 2)};
        d.curve[e].insert(d.curve[e].begin() + 1, bend);
      }
    }
    try {
      CrossingSet cs = compute_crossings(d);
      if (cs.size() <= opt.max_crossings) return d;
    } catch (const GeneralPositionViolation&) {
    }
  }
  throw std::runtime_error("random_drawing: no drawing in general position found");
}

}  // namespace bcr
