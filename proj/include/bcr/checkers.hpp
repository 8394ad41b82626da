#pragma once

#include "bcr/concept.hpp"
#include "bcr/drawing.hpp"

namespace bcr {

Verdict check_k_planar(const Drawing& d, const CrossingSet& cs, int k);
Verdict check_k_vertex_planar(const Drawing& d, const CrossingSet& cs, int k);
Verdict check_ic(const Drawing& d, const CrossingSet& cs);
Verdict check_nic(const Drawing& d, const CrossingSet& cs);
// also requires a simple drawing
Verdict check_nnic(const Drawing& d, const CrossingSet& cs);
// also requires a simple drawing
Verdict check_k_fan_crossing_free(const Drawing& d, const CrossingSet& cs, int k);
Verdict check_adjacency_crossing(const Drawing& d, const CrossingSet& cs);
Verdict check_fan_crossing(const Drawing& d, const CrossingSet& cs);
Verdict check_weak_fan_planar(const Drawing& d, const CrossingSet& cs);
Verdict check_strong_fan_planar(const Drawing& d, const CrossingSet& cs);
Verdict check_k_edge_crossing(const Drawing& d, const CrossingSet& cs, int k);
Verdict check_k_gap_planar(const Drawing& d, const CrossingSet& cs, int k);
Verdict check_k_apex(const Drawing& d, const CrossingSet& cs, int k);
Verdict check_skewness(const Drawing& d, const CrossingSet& cs, int k);

Verdict check_concept(const Concept& c, const Drawing& d, const CrossingSet& cs);

// winding number of a closed polygon around p; p must not lie on the boundary
int winding_number(const std::vector<Point>& polygon, const Point& p);
bool on_polyline_boundary(const std::vector<Point>& polygon, const Point& p);

}  // namespace bcr
