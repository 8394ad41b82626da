#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bcr/concept.hpp"
#include "bcr/rational.hpp"

namespace bcr {

struct GraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph. Edges are stored with endpoints in insertion order of the
// vertices (smaller index first); that order also fixes the direction of edge curves.
class Graph {
 public:
  int add_vertex(const std::string& id);
  int add_edge(int u, int v);
  int add_edge(const std::string& u, const std::string& v);

  int n() const { return static_cast<int>(ids_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::string& id(int v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::array<int, 2>& edge(int e) const { return edges_[e]; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return inc_[v]; }

  int find_vertex(const std::string& id) const;
  int find_edge(int u, int v) const;
  bool adjacent_edges(int e, int f) const;
  bool incident_to(int e, int v) const;
  int other_end(int e, int v) const;
  std::string edge_key(int e) const;

 private:
  static std::uint64_t key(int u, int v);
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> vindex_;
  std::vector<std::array<int, 2>> edges_;
  std::unordered_map<std::uint64_t, int> eindex_;
  std::vector<std::vector<int>> inc_;
};

enum class Color { Red, Blue, Yellow, Gray };
enum class Coloring { Standard, Alternate };

std::string color_name(Color c);

// Frame nodes 0..2 are v1..v3, 3..5 are w1..w3. Connection c = 3*i + j joins v_{i+1}, w_{j+1}.
struct Frame {
  Coloring coloring = Coloring::Standard;
  std::array<Color, 9> color{};

  static std::string node_name(int node);
  static std::array<int, 2> nodes(int c) { return {c / 3, 3 + c % 3}; }
  static int connection(int i, int j) { return 3 * i + j; }
  static std::string connection_name(int c);
  static bool adjacent(int c1, int c2);
  int count(Color col) const;
  std::vector<int> connections_of(Color col) const;
};

Frame build_frame(Coloring coloring);

enum class ConKind { Bundle, BundlePlus, K7, ApexBlue, SkewBlue };

struct ConGraphSpec {
  ConKind kind = ConKind::Bundle;
  int i = 1;
  int j = 1;
  int ell = 0;
  int k = 0;

  static ConGraphSpec bundle(int i, int j) { return {ConKind::Bundle, i, j, 0, 0}; }
  static ConGraphSpec bundle_plus(int i, int j) { return {ConKind::BundlePlus, i, j, 0, 0}; }
  static ConGraphSpec single_edge() { return bundle(1, 1); }
  static ConGraphSpec triangle() { return bundle_plus(1, 2); }
  static ConGraphSpec k7() { return {ConKind::K7, 0, 0, 0, 0}; }
  static ConGraphSpec apex_blue(int ell, int k) { return {ConKind::ApexBlue, 0, 0, ell, k}; }
  static ConGraphSpec skew_blue(int ell, int k) { return {ConKind::SkewBlue, 0, 0, ell, k}; }

  std::string describe() const;
  // closed forms, checked against instantiate_congraph in tests
  Integer internal_vertex_count() const;
  Integer edge_count() const;
  Integer width() const;
  int height() const;
};

// Local con-graph: vertex 0 is pole s, vertex 1 is pole t.
struct ConGraph {
  std::vector<std::string> names;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> paths;  // vertex sequences from s to t
};

ConGraph instantiate_congraph(const ConGraphSpec& spec);

struct Connection {
  int id = 0;
  Color color = Color::Gray;
  ConGraphSpec spec;
  int s = -1;  // graph vertex of pole s (frame node v_i)
  int t = -1;  // graph vertex of pole t (frame node w_j)
  std::vector<int> local_to_graph;             // local vertex -> graph vertex
  std::vector<int> edges;                      // graph edges, local edge order
  std::vector<std::vector<int>> path_vertices;  // graph vertices per path
  std::vector<std::vector<int>> path_edges;     // graph edges per path

  int width() const { return static_cast<int>(path_edges.size()); }
  int height() const;
};

struct FrameworkGraph {
  Graph graph;
  Frame frame;
  std::array<Connection, 9> cons;
  std::array<int, 6> node_vertex{};
  std::vector<int> edge_con;                 // connection of each edge
  std::vector<std::vector<int>> edge_paths;  // P_c[e] as path indices
  std::vector<int> vertex_con;               // -1 for frame nodes
  std::optional<ConceptKind> concept_kind;
  int ell = 0;
  int k = 0;
  bool below_threshold = false;

  Integer kuratowski_count() const;
};

using Recipe = std::map<Color, ConGraphSpec>;

FrameworkGraph build_framework_graph(const Frame& frame, const Recipe& recipe);

Recipe recipe_for(ConceptKind kind, int ell, int k);
FrameworkGraph construction_for(ConceptKind kind, int ell, int k);

// n and m of construction_for without building it
struct SizeFormula {
  Integer n;
  Integer m;
};
SizeFormula construction_size(ConceptKind kind, int ell, int k);

// NNIC reuses the k-fcf graph with k = 2; other unparameterized concepts ignore k
int effective_k(ConceptKind kind, int k);

}  // namespace bcr
