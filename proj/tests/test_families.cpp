#include <gtest/gtest.h>

#include "dofb/families.hpp"

using namespace dofb;

namespace {

std::vector<std::size_t> layer_sizes(const LayeredNetwork& net) {
  std::vector<std::size_t> out;
  for (const auto& l : net.layers()) out.push_back(l.size());
  return out;
}

}  // namespace

TEST(Families, NamesRoundTrip) {
  for (Family f : {Family::Fig2D1D2, Family::Fig3D1D2, Family::FigFullDof, Family::MD1D2, Family::TwoBounds,
                   Family::SetSizeToRank, Family::D1D2OneHalf, Family::RandomLayered}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_FALSE(parse_family("fig-9").has_value());
}

TEST(Families, MD1D2Shape) {
  const auto net = m_d1d2(3);
  EXPECT_EQ(layer_sizes(net), (std::vector<std::size_t>{2, 4, 3, 2}));
  EXPECT_EQ(net.children("v1"), NodeSet{"v5"});
  for (const char* v : {"v2", "v3", "v4"}) EXPECT_EQ(net.children(v), (NodeSet{"v5", "v6", "v7"}));
  for (int m = 2; m <= 8; ++m) {
    const auto g = m_d1d2(m);
    EXPECT_EQ(g.layer(2).size(), static_cast<std::size_t>(m + 1));
    EXPECT_EQ(g.layer(3).size(), static_cast<std::size_t>(m));
  }
  EXPECT_EQ(m_d1d2(4).node_count(), 13u);
}

TEST(Families, RejectsSmallM) {
  EXPECT_THROW(m_d1d2(1), InvalidParams);
  EXPECT_THROW(m_d1d2(0), InvalidParams);
  EXPECT_THROW(two_bounds(1), InvalidParams);
  EXPECT_THROW(set_size_to_rank(-1), InvalidParams);
}

TEST(Families, TwoBoundsHasSevenLayers) {
  const auto net = two_bounds(2);
  EXPECT_EQ(layer_sizes(net), (std::vector<std::size_t>{2, 3, 2, 2, 3, 2, 2}));
}

TEST(Families, SetSizeToRankExtendsFig3d1d2) {
  EXPECT_EQ(set_size_to_rank(0), fig3d1d2());
  const auto base = fig3d1d2();
  const auto net = set_size_to_rank(1);
  for (const Edge& e : base.edges()) EXPECT_TRUE(net.has_edge(e.from, e.to));
  EXPECT_EQ(net.edges().size(), base.edges().size() + 4);
  EXPECT_EQ(net.children("u1"), (NodeSet{"v5", "v6", "v7"}));
  EXPECT_TRUE(net.has_edge("s2", "u1"));
}

TEST(Families, FullDofDestinationTwoHearsOnlyV8) {
  const auto net = fig_full_dof();
  EXPECT_EQ(net.predecessors("d2"), NodeSet{"v8"});
  EXPECT_EQ(net.predecessors("d1"), (NodeSet{"v6", "v7"}));
}

TEST(Families, RandomIsDeterministicAndConnected) {
  RandomSpec spec;
  spec.relay_layer_sizes = {3, 4, 2};
  spec.density = 0.4;
  spec.seed = 99;
  const auto a = random_layered(spec);
  EXPECT_EQ(a, random_layered(spec));
  EXPECT_TRUE(validate(a).empty());
  EXPECT_EQ(a.layer_count(), 5u);
  spec.density = 0.0;
  EXPECT_THROW(random_layered(spec), InvalidParams);
}

TEST(Families, GenFamilyDispatch) {
  FamilyParams p;
  p.family = Family::TwoBounds;
  p.m = 3;
  EXPECT_EQ(gen_family(p), two_bounds(3));
  p.family = Family::SetSizeToRank;
  p.k = 2;
  EXPECT_EQ(gen_family(p), set_size_to_rank(2));
}
