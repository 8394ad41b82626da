#pragma once

#include <string>
#include <vector>

#include "bcr/drawing.hpp"
#include "bcr/graph.hpp"

namespace bcr {

struct SvgStyle {
  std::vector<std::string> edge_color;  // per edge; default black
  const CrossingSet* crossings = nullptr;  // marked when given
};

// palette by connection color
SvgStyle framework_style(const FrameworkGraph& fg);

std::string to_svg(const Drawing& d, const SvgStyle& style = {});

}  // namespace bcr
