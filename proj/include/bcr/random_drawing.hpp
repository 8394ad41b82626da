#pragma once

#include <cstdint>

#include "bcr/drawing.hpp"

namespace bcr {

struct RandomDrawingOptions {
  int vertices = 7;
  int edges = 10;
  int max_crossings = 12;
  int grid = 12;          // coordinates in [0, grid)
  bool straight = false;  // otherwise some edges get one bend
};

// deterministic for a given seed; retries until the drawing is in general position
Drawing random_drawing(std::uint64_t seed, const RandomDrawingOptions& opt = {});

}  // namespace bcr
