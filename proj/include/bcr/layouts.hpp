#pragma once

#include <array>
#include <string>

#include "bcr/drawing.hpp"
#include "bcr/graph.hpp"

namespace bcr {

// UpperBound: red-yellow (standard frame) or red-red (alternate frame).
// Witness: blue-blue (standard frame) or blue-gray (alternate frame).
enum class Variant { UpperBound, Witness };

std::string variant_name(Variant v);  // "upper" / "witness"
Variant parse_variant(const std::string& s);

struct StandardDrawing {
  FrameworkGraph fg;
  Drawing drawing;
};

// the two connections whose con-graphs cross; the first is drawn vertically
// from (0,-8) to (0,8), the second horizontally from (-8,0) to (8,0)
std::array<int, 2> designated_connections(Variant v);

// rectilinear: require single-segment edges (not available for the fan-planar variants)
StandardDrawing standard_drawing(ConceptKind c, int ell, int k, Variant v, bool rectilinear = false);

Integer crossing_count_formula(ConceptKind c, Variant v, int ell, int k);

}  // namespace bcr
