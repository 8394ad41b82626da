#pragma once

#include <string>
#include <vector>

#include "bcr/drawing.hpp"

namespace bcr {

// Fan-crossing-free (k=2) but not NNIC: two copies of a loner gadget whose two
// crossings share three large vertices; walls carry K5 guards and stay uncrossed.
struct AppendixFixture {
  Drawing drawing;
  std::vector<int> walls;
  std::vector<int> guards;
  std::vector<int> loners;
  Json meta;
};

AppendixFixture appendix_fcf_fixture();

// K5 drawn with a single crossing
Drawing k5_fcf_fixture();

// every golden file: name -> contents
std::vector<std::pair<std::string, std::string>> golden_files();
// writes golden_files() into dir, returns the file names
std::vector<std::string> write_fixtures(const std::string& dir);

}  // namespace bcr
