#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "bcr/drawing.hpp"

namespace helpers {

struct V {
  std::string id;
  long x, y;
};
struct E {
  std::string u, v;
  std::vector<std::pair<long, long>> bends = {};
};

// bends are listed from u to v
inline bcr::Drawing make(const std::vector<V>& vs, const std::vector<E>& es) {
  bcr::Drawing d;
  for (const auto& v : vs) {
    d.graph.add_vertex(v.id);
    d.pos.push_back({bcr::Rational(v.x), bcr::Rational(v.y)});
  }
  for (const auto& e : es) {
    int u = d.graph.find_vertex(e.u), v = d.graph.find_vertex(e.v);
    int id = d.graph.add_edge(u, v);
    std::vector<bcr::Point> c{d.pos[u]};
    for (auto [x, y] : e.bends) c.push_back({bcr::Rational(x), bcr::Rational(y)});
    c.push_back(d.pos[v]);
    if (d.graph.edge(id)[0] != u) std::reverse(c.begin(), c.end());
    d.curve.push_back(c);
  }
  return d;
}

}  // namespace helpers
