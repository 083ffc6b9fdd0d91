#include <gtest/gtest.h>

#include "dofb/families.hpp"
#include "dofb/region.hpp"

using namespace dofb;

namespace {

BottleneckCertificate cert(int dest, std::size_t rho) {
  BottleneckCertificate c;
  c.dest = dest;
  c.node = "v";
  c.rho = rho;
  c.prior_m_size = rho;
  return c;
}

const std::vector<DofPoint> kUnitSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

}  // namespace

TEST(Rational, ToStringAndParse) {
  EXPECT_EQ(to_string(Rational(4, 6)), "2/3");
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_EQ(parse_rational("5/3"), Rational(5, 3));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_FALSE(parse_rational("1/0").has_value());
  EXPECT_FALSE(parse_rational("x").has_value());
}

TEST(Rational, IntegerComparisonsTerminate) {
  EXPECT_TRUE(Rational(0) == 0);
  EXPECT_TRUE(2 == Rational(4, 2));
  EXPECT_TRUE(Rational(1, 2) != 1);
}

TEST(HalfPlane, ValidationAndText) {
  EXPECT_THROW(HalfPlane(0, 0, 1), std::invalid_argument);
  EXPECT_THROW(HalfPlane(-1, 1, 1), std::invalid_argument);
  EXPECT_EQ(to_string(HalfPlane::bottleneck(1, 3)), "3 D1 + D2 <= 3");
  EXPECT_EQ(to_string(HalfPlane::bottleneck(2, 2)), "D1 + 2 D2 <= 2");
  EXPECT_EQ(to_string(HalfPlane(1, 0, 1)), "D1 <= 1");
}

TEST(BuildRegion, SingleBottleneck) {
  const DofRegion r = build_region({cert(1, 3)});
  const std::vector<DofPoint> want{{0, 0}, {1, 0}, {Rational(2, 3), 1}, {0, 1}};
  EXPECT_EQ(r.vertices(), want);
  EXPECT_TRUE(r.redundant()[0]);  // D1 <= 1 is implied
  EXPECT_FALSE(r.redundant()[2]);
}

TEST(BuildRegion, EmptyIsUnitSquare) {
  EXPECT_EQ(build_region({}).vertices(), kUnitSquare);
  EXPECT_EQ(sum_dof(build_region({})), 2);
}

TEST(BuildRegion, TwoSidedCorner) {
  for (int m = 2; m <= 6; ++m) {
    const DofRegion r = build_region({cert(1, m), cert(2, m)});
    EXPECT_TRUE(r.is_vertex({Rational(m, m + 1), Rational(m, m + 1)}));
    EXPECT_EQ(sum_dof(r), 2 - Rational(2, m + 1));
  }
}

TEST(BuildRegion, RedundantBoundKeptButIgnored) {
  const DofRegion tight = build_region({cert(1, 2)});
  const DofRegion both = build_region({cert(1, 2), cert(1, 5)});
  EXPECT_TRUE(tight.same_set(both));
  EXPECT_EQ(both.constraints().size(), 4u);
  EXPECT_TRUE(both.redundant()[3]);
}

TEST(BuildRegion, AddingBoundsNeverEnlarges) {
  const DofRegion small = build_region({cert(1, 3), cert(2, 4)});
  for (const DofPoint& p : small.vertices()) EXPECT_TRUE(build_region({cert(1, 3)}).contains(p));
}

TEST(SumDof, Fig3d1d2) {
  EXPECT_EQ(sum_dof(build_region(find_all_bottlenecks(fig3d1d2()))), Rational(5, 3));
}

TEST(InS, Examples) {
  EXPECT_TRUE(in_S(Rational(4, 3)));
  EXPECT_TRUE(in_S(2));
  EXPECT_TRUE(in_S(0));
  EXPECT_TRUE(in_S(1));
  EXPECT_TRUE(in_S(Rational(9, 5)));
  EXPECT_TRUE(in_S(Rational(5, 3)));
  EXPECT_TRUE(in_S(Rational(7, 4)));
  EXPECT_TRUE(in_S(Rational(11, 6)));
  EXPECT_FALSE(in_S(Rational(1, 2)));
  EXPECT_FALSE(in_S(Rational(3, 2) + Rational(1, 100)));
  EXPECT_FALSE(in_S(Rational(5, 2)));
  EXPECT_FALSE(in_S(Rational(-1)));
}

TEST(Expressible, Examples) {
  const Expressibility fig3 = expressible_by_bottleneck_bounds(build_region({cert(1, 3)}));
  EXPECT_TRUE(fig3.expressible);
  EXPECT_EQ(fig3.m1, 3);
  EXPECT_FALSE(fig3.m2.has_value());

  EXPECT_FALSE(expressible_by_bottleneck_bounds(DofRegion({HalfPlane(1, 1, Rational(3, 2))})).expressible);

  const Expressibility square = expressible_by_bottleneck_bounds(DofRegion{});
  EXPECT_TRUE(square.expressible);
  EXPECT_FALSE(square.m1.has_value());
  EXPECT_FALSE(square.m2.has_value());

  const Expressibility two = expressible_by_bottleneck_bounds(build_region({cert(1, 4), cert(2, 2)}));
  EXPECT_TRUE(two.expressible);
  EXPECT_EQ(two.m1, 4);
  EXPECT_EQ(two.m2, 2);
}

TEST(CompareBounds, Examples) {
  const BoundGap g = compare_bounds(HalfPlane::bottleneck(1, 3), HalfPlane::bottleneck(1, 4));
  EXPECT_EQ(g.new_intercept, Rational(2, 3));
  EXPECT_EQ(g.prior_intercept, Rational(3, 4));
  EXPECT_EQ(g.gap, Rational(-1, 12));
  EXPECT_EQ(compare_bounds(HalfPlane::bottleneck(2, 2), HalfPlane::bottleneck(2, 2)).gap, 0);
  EXPECT_THROW(compare_bounds(HalfPlane::bottleneck(1, 3), HalfPlane::bottleneck(2, 3)), MismatchedDestination);
}

TEST(CompareBounds, SetSizeToRankGapGrows) {
  Rational previous = 0;
  for (int k = 0; k <= 8; ++k) {
    const auto net = set_size_to_rank(k);
    const auto c = find_bottlenecks(net, 1).at(0);
    const BoundGap g = compare_bounds(bottleneck_bound(c), prior_bound(c, net));
    EXPECT_EQ(g.new_intercept, Rational(2, 3));
    EXPECT_EQ(g.prior_intercept, Rational(2 + k, 3 + k));
    EXPECT_GT(g.prior_intercept, previous);
    previous = g.prior_intercept;
  }
}

TEST(PriorRegion, ContainsNewRegion) {
  for (const LayeredNetwork& net : {set_size_to_rank(3), fig3d1d2(), two_bounds(3)}) {
    const auto certs = find_all_bottlenecks(net);
    const DofRegion prior = build_prior_region(certs);
    for (const DofPoint& p : build_region(certs).vertices()) EXPECT_TRUE(prior.contains(p));
  }
}

TEST(Export, CsvAndJson) {
  const DofRegion r = build_region({cert(1, 3)});
  EXPECT_EQ(region_csv(r), "D1,D2\n0,0\n1,0\n2/3,1\n0,1\n");
  const std::string json = region_json(r);
  EXPECT_NE(json.find("\"sum_dof\":\"5/3\""), std::string::npos) << json;
  EXPECT_NE(json.find("3 D1 + D2 <= 3"), std::string::npos);
}
