#include "bcr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bcr {

Json graph_to_json(const Graph& g, const Json& meta) {
  Json j;
  j["vertices"] = g.ids();
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back({g.id(e[0]), g.id(e[1])});
  j["edges"] = es;
  j["meta"] = meta;
  return j;
}

namespace {

const Json& field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object()) throw FormatError(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(path.empty() ? name : path + "." + name, "missing field");
  return *it;
}

Rational rational_from(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(path, e.what());
  }
  throw FormatError(path, "expected a rational string \"p/q\"");
}

Point point_from(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw FormatError(path, "expected [x, y]");
  return {rational_from(j[0], path + "[0]"), rational_from(j[1], path + "[1]")};
}

}  // namespace

Graph graph_from_json(const Json& j) {
  Graph g;
  const Json& vs = field(j, "vertices", "graph");
  if (!vs.is_array()) throw FormatError("graph.vertices", "expected an array");
  for (size_t i = 0; i < vs.size(); ++i) {
    std::string path = "graph.vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_string()) throw FormatError(path, "expected a string id");
    try {
      g.add_vertex(vs[i].get<std::string>());
    } catch (const GraphError& e) {
      throw FormatError(path, e.what());
    }
  }
  const Json& es = field(j, "edges", "graph");
  if (!es.is_array()) throw FormatError("graph.edges", "expected an array");
  for (size_t i = 0; i < es.size(); ++i) {
    std::string path = "graph.edges[" + std::to_string(i) + "]";
    const Json& e = es[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw FormatError(path, "expected [id, id]");
    try {
      g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    } catch (const GraphError& err) {
      throw FormatError(path, err.what());
    }
  }
  return g;
}

Json drawing_to_json(const Drawing& d, const Json& meta) {
  Json j;
  j["graph"] = graph_to_json(d.graph, meta);
  Json pos = Json::object();
  for (int v = 0; v < d.graph.n(); ++v) pos[d.graph.id(v)] = point_json(d.pos[v]);
  j["positions"] = pos;
  Json curves = Json::object();
  for (int e = 0; e < d.graph.m(); ++e) {
    Json c = Json::array();
    for (const auto& p : d.curve[e]) c.push_back(point_json(p));
    curves[d.graph.edge_key(e)] = c;
  }
  j["curves"] = curves;
  return j;
}

Drawing drawing_from_json(const Json& j) {
  Drawing d;
  d.graph = graph_from_json(field(j, "graph", ""));
  const Graph& g = d.graph;
  const Json& pos = field(j, "positions", "");
  if (!pos.is_object()) throw FormatError("positions", "expected an object");
  d.pos.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    std::string path = "positions." + g.id(v);
    auto it = pos.find(g.id(v));
    if (it == pos.end()) throw FormatError(path, "missing position");
    d.pos[v] = point_from(*it, path);
  }
  for (const auto& [id, _] : pos.items())
    if (g.find_vertex(id) < 0) throw FormatError("positions." + id, "unknown vertex");
  d.curve.resize(g.m());
  Json curves = j.contains("curves") ? j["curves"] : Json::object();
  if (!curves.is_object()) throw FormatError("curves", "expected an object");
  std::vector<char> given(g.m(), 0);
  for (const auto& [key, c] : curves.items()) {
    std::string path = "curves." + key;
    auto bar = key.find('|');
    if (bar == std::string::npos) throw FormatError(path, "edge key must be \"u|v\"");
    int u = g.find_vertex(key.substr(0, bar)), v = g.find_vertex(key.substr(bar + 1));
    int e = (u < 0 || v < 0) ? -1 : g.find_edge(u, v);
    if (e < 0) throw FormatError(path, "unknown edge");
    if (!c.is_array() || c.size() < 2) throw FormatError(path, "expected at least two points");
    std::vector<Point> pts;
    for (size_t i = 0; i < c.size(); ++i) pts.push_back(point_from(c[i], path + "[" + std::to_string(i) + "]"));
    if (g.edge(e)[0] != u) std::reverse(pts.begin(), pts.end());
    // listed against its key
    const Point& first = d.pos[g.edge(e)[0]];
    if (pts.front() != first && pts.back() == first) std::reverse(pts.begin(), pts.end());
    d.curve[e] = pts;
    given[e] = 1;
  }
  for (int e = 0; e < g.m(); ++e)
    if (!given[e]) d.set_straight(e);
  return d;
}

Json drawing_meta(const Json& j) {
  if (j.contains("graph") && j["graph"].contains("meta")) return j["graph"]["meta"];
  return Json::object();
}

Json framework_meta(const FrameworkGraph& fg) {
  Json m;
  if (fg.concept_kind) {
    m["concept"] = short_name(*fg.concept_kind);
    m["ell"] = fg.ell;
    m["k"] = fg.k;
    m["below_threshold"] = fg.below_threshold;
  }
  m["frame"] = fg.frame.coloring == Coloring::Standard ? "standard" : "alternate";
  Json cons = Json::array();
  for (const auto& c : fg.cons)
    cons.push_back({{"name", Frame::connection_name(c.id)},
                    {"color", color_name(c.color)},
                    {"congraph", c.spec.describe()},
                    {"width", c.width()},
                    {"height", c.height()}});
  m["connections"] = cons;
  Json vl = Json::object();
  for (int v = 0; v < fg.graph.n(); ++v)
    vl[fg.graph.id(v)] = fg.vertex_con[v] < 0 ? Json("frame") : Json(Frame::connection_name(fg.vertex_con[v]));
  m["vertex_connection"] = vl;
  Json el = Json::object();
  for (int e = 0; e < fg.graph.m(); ++e)
    el[fg.graph.edge_key(e)] = {{"connection", Frame::connection_name(fg.edge_con[e])}, {"paths", fg.edge_paths[e]}};
  m["edge_labels"] = el;
  return m;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(col), "malformed JSON");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json_text(read_text_file(path), path); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path, "cannot write file");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bcr
