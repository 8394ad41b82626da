#pragma once

#include <stdexcept>
#include <string>

#include "bcr/drawing.hpp"
#include "bcr/graph.hpp"
#include "bcr/verdict.hpp"

namespace bcr {

struct FormatError : std::runtime_error {
  FormatError(const std::string& field, const std::string& msg)
      : std::runtime_error(field.empty() ? msg : field + ": " + msg), field(field) {}
  std::string field;
};

Json graph_to_json(const Graph& g, const Json& meta = Json::object());
Graph graph_from_json(const Json& j);

// {"graph":..., "positions":{id:[x,y]}, "curves":{"u|v":[[x,y],...]}}, rationals as "p/q"
Json drawing_to_json(const Drawing& d, const Json& meta = Json::object());
Drawing drawing_from_json(const Json& j);
// the graph's meta block, or an empty object
Json drawing_meta(const Json& j);

// concept, parameters and connection/path labels of every vertex and edge
Json framework_meta(const FrameworkGraph& fg);

Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
// pretty-printed with a trailing newline
std::string dump(const Json& j);

}  // namespace bcr
