#pragma once

#include <array>
#include <vector>

namespace bcr {

// Strongly fan-planar K7 with poles s (local 0) and t (local 1); the other five
// vertices are local 2..6. Curved edges are pre-sampled polylines.
struct K7Curve {
  int a;
  int b;
  std::vector<std::array<int, 2>> pts;  // from a to b, thousandths
};

const std::array<std::array<int, 2>, 7>& k7_vertices();
const std::vector<K7Curve>& k7_curves();

}  // namespace bcr
