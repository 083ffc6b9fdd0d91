#include <gtest/gtest.h>

#include "dofb/bottleneck.hpp"
#include "dofb/region.hpp"
#include "dofb/schemes.hpp"

using namespace dofb;

namespace {

SimReport sim(const SchemeBundle& b, int trials, std::uint64_t seed) {
  return simulate(b.network, b.program, b.space, trials, seed);
}

void expect_achieves(const SchemeBundle& b, Rational d1, Rational d2) {
  const SimReport r = sim(b, 100, 0);
  EXPECT_EQ(r.decode_d1(), 100) << b.name;
  EXPECT_EQ(r.decode_d2(), 100) << b.name;
  ASSERT_TRUE(r.achieved.has_value()) << b.name;
  EXPECT_EQ(*r.achieved, std::pair(d1, d2)) << b.name;
}

}  // namespace

TEST(Scheme2d1d2, AchievesHalfOne) { expect_achieves(scheme_2d1d2(), Rational(1, 2), 1); }

TEST(Scheme2d1d2, WithoutReconstructionD1Fails) {
  const SimReport r = sim(scheme_2d1d2_without_reconstruction(), 100, 0);
  EXPECT_EQ(r.decode_d1(), 0);
  EXPECT_EQ(r.decode_d2(), 100);
  EXPECT_FALSE(r.achieved.has_value());
}

TEST(SchemeExample1, AchievesTwoThirdsOne) { expect_achieves(scheme_example1(), Rational(2, 3), 1); }

TEST(SchemeExample2, AchievesOneOne) { expect_achieves(scheme_example2(), 1, 1); }

TEST(SchemeMD1D2, Corners) {
  for (int m = 2; m <= 8; ++m) expect_achieves(scheme_m_d1d2(m), Rational(m - 1, m), 1);
  EXPECT_EQ(achieved_dof(scheme_m_d1d2(3).program, scheme_m_d1d2(3).space),
            achieved_dof(scheme_example1().program, scheme_example1().space));
  EXPECT_THROW(scheme_m_d1d2(1), InvalidParams);
}

TEST(SchemeTwoBounds, SymmetricCorner) {
  for (int m = 2; m <= 6; ++m) {
    const SchemeBundle b = scheme_two_bounds(m);
    expect_achieves(b, Rational(m, m + 1), Rational(m, m + 1));
    const Rational sum = 2 * Rational(m, m + 1);
    EXPECT_EQ(sum_dof(build_region(find_all_bottlenecks(b.network))), sum);
    EXPECT_TRUE(in_S(sum));
  }
  EXPECT_THROW(scheme_two_bounds(1), InvalidParams);
}

TEST(SchemeLibrary, StableAcrossSeeds) {
  for (const std::string& name : scheme_names()) {
    const SchemeBundle b = scheme_by_name(name, 3);
    const bool ablation = name == "2d1d2-no-reconstruction";
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const SimReport r = sim(b, 100, seed * 977);
      EXPECT_EQ(r.decode_d1(), ablation ? 0 : 100) << name << " seed " << seed;
      EXPECT_EQ(r.decode_d2(), 100) << name << " seed " << seed;
    }
  }
}

TEST(SchemeLibrary, AchievedPointIsOuterRegionVertex) {
  for (const std::string& name : scheme_names()) {
    if (name == "2d1d2-no-reconstruction") continue;
    const SchemeBundle b = scheme_by_name(name, 4);
    const auto [d1, d2] = achieved_dof(b.program, b.space);
    EXPECT_TRUE(build_region(find_all_bottlenecks(b.network)).is_vertex({d1, d2})) << name;
  }
}

TEST(SchemeLibrary, Lookup) {
  EXPECT_EQ(scheme_by_name("two-bounds", 4).space, SymbolSpace(4, 4));
  EXPECT_THROW(scheme_by_name("nope"), InvalidParams);
  FamilyParams p;
  p.family = Family::MD1D2;
  p.m = 5;
  EXPECT_EQ(scheme_for_family(p)->network, m_d1d2(5));
  p.family = Family::D1D2OneHalf;
  EXPECT_FALSE(scheme_for_family(p).has_value());
}
