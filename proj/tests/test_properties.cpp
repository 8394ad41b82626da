#include <gtest/gtest.h>

#include "bcr/checkers.hpp"
#include "bcr/random_drawing.hpp"

using namespace bcr;

namespace {

Drawing translated(const Drawing& d, const Point& off) {
  Drawing t = d;
  for (auto& p : t.pos) p = p + off;
  for (auto& c : t.curve)
    for (auto& p : c) p = p + off;
  return t;
}

Drawing mirrored(const Drawing& d) {
  Drawing t = d;
  for (auto& p : t.pos) p.x = -p.x;
  for (auto& c : t.curve)
    for (auto& p : c) p.x = -p.x;
  return t;
}

std::vector<bool> verdicts(const Drawing& d) {
  CrossingSet cs = compute_crossings(d);
  std::vector<bool> out;
  for (auto c : all_concepts())
    for (int k : {1, 2})
      if (k >= min_k(c)) out.push_back(check_concept({c, k}, d, cs).holds);
  return out;
}

}  // namespace

TEST(Properties, VerdictsInvariantUnderTranslationAndMirroring) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Drawing d = random_drawing(seed);
    auto base = verdicts(d);
    EXPECT_EQ(base, verdicts(translated(d, {rat(7, 3), rat(-5, 2)}))) << seed;
    EXPECT_EQ(base, verdicts(mirrored(d))) << seed;
  }
}

TEST(Properties, ParameterMonotonicity) {
  for (std::uint64_t seed = 100; seed <= 180; ++seed) {
    Drawing d = random_drawing(seed);
    CrossingSet cs = compute_crossings(d);
    for (int k = 1; k < 4; ++k) {
      if (check_k_planar(d, cs, k).holds) EXPECT_TRUE(check_k_planar(d, cs, k + 1).holds);
      if (check_k_gap_planar(d, cs, k).holds) EXPECT_TRUE(check_k_gap_planar(d, cs, k + 1).holds);
      if (check_k_apex(d, cs, k).holds) EXPECT_TRUE(check_k_apex(d, cs, k + 1).holds);
      if (check_skewness(d, cs, k).holds) EXPECT_TRUE(check_skewness(d, cs, k + 1).holds);
      if (check_k_vertex_planar(d, cs, k).holds) EXPECT_TRUE(check_k_vertex_planar(d, cs, k + 1).holds);
    }
  }
}

TEST(Properties, KPlanarImpliesKGapPlanar) {
  for (std::uint64_t seed = 200; seed <= 300; ++seed) {
    Drawing d = random_drawing(seed);
    CrossingSet cs = compute_crossings(d);
    for (int k = 1; k <= 3; ++k)
      if (check_k_planar(d, cs, k).holds) EXPECT_TRUE(check_k_gap_planar(d, cs, k).holds) << seed;
  }
}

TEST(Properties, CrossingCountBoundsApexAndSkewness) {
  for (std::uint64_t seed = 300; seed <= 380; ++seed) {
    Drawing d = random_drawing(seed);
    CrossingSet cs = compute_crossings(d);
    // one removed edge per crossing always suffices
    EXPECT_TRUE(check_skewness(d, cs, std::max(1, cs.size())).holds);
    if (cs.size() == 0) EXPECT_TRUE(check_k_apex(d, cs, 1).holds);
  }
}

TEST(Properties, GeneratorIsDeterministic) {
  Drawing a = random_drawing(42), b = random_drawing(42);
  EXPECT_EQ(a.pos, b.pos);
  EXPECT_EQ(a.curve, b.curve);
}
