#pragma once

#include <functional>
#include <vector>

#include "bcr/drawing.hpp"
#include "bcr/graph.hpp"
#include "bcr/kuratowski.hpp"

// Brute-force reference implementations used by the tests. They deliberately
// avoid the library's sweep, ledger and branching code.
namespace oracle {

struct PairHit {
  int a, b;  // edges, a <= b
  bcr::Point p;
};

// every proper crossing point of two curves, by checking all segment pairs
std::vector<PairHit> brute_crossings(const bcr::Drawing& d);

bool gap_feasible(const bcr::Drawing& d, const bcr::CrossingSet& cs, int k);
bool apex_feasible(const bcr::Drawing& d, const bcr::CrossingSet& cs, int k);
bool skew_feasible(const bcr::Drawing& d, const bcr::CrossingSet& cs, int k);

void for_each_tuple(const bcr::FrameworkGraph& fg, const std::function<void(const bcr::PathTuple&)>& fn);

// the chosen pole paths form a K3,3 subdivision on the frame nodes
bool is_k33_subdivision(const bcr::FrameworkGraph& fg, const bcr::PathTuple& t);

// some crossing of the drawing involves two chosen paths of non-adjacent connections
bool covered_by_drawing(const bcr::Drawing& d, const bcr::CrossingSet& cs, const bcr::FrameworkGraph& fg,
                        const bcr::PathTuple& t);

}  // namespace oracle
