#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bcr/graph.hpp"
#include "bcr/rational.hpp"
#include "bcr/verdict.hpp"

namespace bcr {

// Polyline drawing. curve[e] runs from pos[edge(e)[0]] to pos[edge(e)[1]].
struct Drawing {
  Graph graph;
  std::vector<Point> pos;
  std::vector<std::vector<Point>> curve;

  void set_straight(int e);
  int segment_count() const;
};

struct GeneralPositionViolation : std::runtime_error {
  GeneralPositionViolation(std::string kind, Point where, std::vector<int> edges, std::string detail);
  std::string kind;
  Point where;
  std::vector<int> edges;
};

// position along a polyline: segment index, then parameter in [0,1] on that segment
struct CurvePos {
  int seg = 0;
  Rational t;
};
bool operator<(const CurvePos& a, const CurvePos& b);

struct Crossing {
  int a = -1;  // a <= b; a == b is a self-crossing
  int b = -1;
  Point p;
  CurvePos on_a;
  CurvePos on_b;
  int side = 0;  // sign of cross(dir a, dir b); read from b it is -side
};

struct CrossingSet {
  std::vector<Crossing> crossings;
  // crossing ids along each edge; a self-crossing appears twice
  std::vector<std::vector<int>> along;

  int size() const { return static_cast<int>(crossings.size()); }
  // distinct crossings on e
  int count_on(int e) const;
  // edges crossing e (distinct, sorted), excluding e itself
  std::vector<int> crossers(int e) const;
  // endpoints of the edges of crossing x (2 to 4 vertices, sorted)
  std::vector<int> vertices_of(const Graph& g, int x) const;
};

// throws GeneralPositionViolation; also validates the drawing itself
CrossingSet compute_crossings(const Drawing& d);

// simple-drawing conditions: no self-crossing, no crossing adjacent edges,
// no pair crossing twice, no three edges through one point
Verdict is_simple_drawing(const Drawing& d, const CrossingSet& cs);

bool is_straight_line(const Drawing& d);

Json point_json(const Point& p);

}  // namespace bcr
