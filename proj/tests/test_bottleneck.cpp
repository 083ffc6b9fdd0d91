#include <gtest/gtest.h>

#include "dofb/bottleneck.hpp"
#include "dofb/families.hpp"
#include "dofb/verify/oracles.hpp"

using namespace dofb;

namespace {

LayeredNetwork chain() {
  return LayeredNetwork({{"s1", "s2"}, {"w"}, {"d1", "d2"}}, {{"s1", "w"}, {"s2", "w"}, {"w", "d1"}, {"w", "d2"}},
                        {"s1", "s2"}, {"d1", "d2"});
}

// s2's only route runs through u2, so w sees a rank-one bottleneck.
LayeredNetwork long_chain() {
  return LayeredNetwork({{"s1", "s2"}, {"u1", "u2"}, {"w"}, {"d1", "d2"}},
                        {{"s1", "u1"}, {"s2", "u2"}, {"u1", "w"}, {"u2", "w"}, {"w", "d1"}, {"w", "d2"}},
                        {"s1", "s2"}, {"d1", "d2"});
}

}  // namespace

TEST(IsCut, Fig3d1d2Examples) {
  const auto net = fig3d1d2();
  EXPECT_TRUE(is_cut(net, {"v5"}, {"s1", "s2"}, {"d1"}));
  EXPECT_TRUE(is_cut(net, {"v2", "v3", "v4"}, {"s2"}, {"d1", "d2"}));
  EXPECT_FALSE(is_cut(net, {}, {"s1"}, {"d1"}));
  EXPECT_FALSE(is_cut(net, {"v2", "v3"}, {"s2"}, {"d1", "d2"}));
}

TEST(IsCut, Errors) {
  const auto net = fig3d1d2();
  EXPECT_THROW(is_cut(net, {"s1"}, {"s1", "s2"}, {"d1"}), OverlapError);
  EXPECT_THROW(is_cut(net, {"zz"}, {"s1"}, {"d1"}), UnknownNode);
}

TEST(IsCut, SupersetsOfCutsAreCuts) {
  const auto net = fig3d1d2();
  EXPECT_TRUE(is_cut(net, {"v5", "v6"}, {"s1", "s2"}, {"d1"}));
  EXPECT_TRUE(is_cut(net, {"v1", "v2", "v3", "v4"}, {"s2"}, {"d1", "d2"}));
}

TEST(PruneParentSet, MatchesPathOracle) {
  EXPECT_EQ(prune_parent_set(fig3d1d2(), "v5", 1), (NodeSet{"v2", "v3", "v4"}));
  EXPECT_EQ(oracle::pruned_parents_by_paths(fig3d1d2(), "v5", 1), (NodeSet{"v2", "v3", "v4"}));
  EXPECT_EQ(prune_parent_set(fig_full_dof(), "v6", 1), (NodeSet{"v3", "v4", "v5"}));
  EXPECT_EQ(oracle::pruned_parents_by_paths(fig_full_dof(), "v6", 1), (NodeSet{"v3", "v4", "v5"}));
  // For d2 the interfering source is s1, whose traffic reaches v5 only via v1.
  EXPECT_EQ(prune_parent_set(m_d1d2(3), "v5", 2), NodeSet{"v1"});
  EXPECT_EQ(prune_parent_set(m_d1d2(3), "v5", 2), oracle::pruned_parents_by_paths(m_d1d2(3), "v5", 2));
}

TEST(FindOmniscient, Examples) {
  EXPECT_TRUE(find_omniscient(fig_full_dof()).empty());
  EXPECT_TRUE(find_omniscient(fig3d1d2()).empty());
  EXPECT_TRUE(find_omniscient(d1d2_one_half()).empty());
  const auto chain_certs = find_omniscient(chain());
  ASSERT_EQ(chain_certs.size(), 2u);
  EXPECT_EQ(chain_certs[0].node, "w");
  EXPECT_EQ(chain_certs[0].dest, 1);
  EXPECT_EQ(chain_certs[1].dest, 2);
}

TEST(FindBottlenecks, Fig3d1d2) {
  const auto certs = find_bottlenecks(fig3d1d2(), 1);
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_EQ(certs[0].node, "v5");
  EXPECT_EQ(certs[0].layer, 3u);
  EXPECT_EQ(certs[0].parent_set, (NodeSet{"v2", "v3", "v4"}));
  EXPECT_EQ(certs[0].rho, 3u);
  EXPECT_TRUE(find_bottlenecks(fig3d1d2(), 2).empty());
}

TEST(FindBottlenecks, Fig2d1d2) {
  const auto certs = find_bottlenecks(fig2d1d2(), 1);
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_EQ(certs[0].node, "v4");
  EXPECT_EQ(certs[0].parent_set, (NodeSet{"v2", "v3"}));
  EXPECT_EQ(certs[0].rho, 2u);
}

TEST(FindBottlenecks, NoneOnFullDofNetworks) {
  for (int dest : {1, 2}) {
    EXPECT_TRUE(find_bottlenecks(fig_full_dof(), dest).empty());
    EXPECT_TRUE(find_bottlenecks(d1d2_one_half(), dest).empty());
  }
}

TEST(FindBottlenecks, SetSizeToRankKeepsRhoThree) {
  const auto net = set_size_to_rank(1);
  const auto certs = find_bottlenecks(net, 1);
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_EQ(certs[0].rho, 3u);
  EXPECT_EQ(certs[0].prior_m_size, 4u);
  EXPECT_EQ(prune_parent_set(net, "v5", 1).size(), 4u);
}

TEST(FindBottlenecks, TwoBoundsOnePerDestination) {
  for (int m = 2; m <= 5; ++m) {
    const auto certs = find_all_bottlenecks(two_bounds(m));
    ASSERT_EQ(certs.size(), 2u) << "m=" << m;
    EXPECT_EQ(certs[0].dest, 1);
    EXPECT_EQ(certs[0].node, "v" + std::to_string(m + 2));
    EXPECT_EQ(certs[1].dest, 2);
    EXPECT_EQ(certs[1].node, "v" + std::to_string(3 * m + 5));
    EXPECT_EQ(certs[0].rho, static_cast<std::size_t>(m));
    EXPECT_EQ(certs[1].rho, static_cast<std::size_t>(m));
  }
}

TEST(FindBottlenecks, CapExceeded) {
  EXPECT_THROW(find_bottlenecks(m_d1d2(6), 1, 3), CapExceeded);
  EXPECT_NO_THROW(find_bottlenecks(m_d1d2(6), 1, 6));
}

TEST(FindBottlenecks, RhoNeverAboveFullPrunedSet) {
  for (const LayeredNetwork& net : {fig3d1d2(), set_size_to_rank(3), m_d1d2(4), two_bounds(3)}) {
    for (const auto& cert : find_all_bottlenecks(net)) {
      const NodeSet full = prune_parent_set(net, cert.node, cert.dest);
      EXPECT_LE(cert.rho, structural_rank(transfer_pattern(net, full, cert.layer - 1)));
      EXPECT_LE(cert.rho, cert.parent_set.size());
    }
  }
}

TEST(FindBottlenecks, SourceParentsNeverInCut) {
  EXPECT_TRUE(find_all_bottlenecks(chain()).empty());
  EXPECT_TRUE(prune_parent_set(chain(), "w", 1).empty());
}

TEST(FindBottlenecks, RhoOneImpliesOmniscient) {
  const auto certs = find_all_bottlenecks(long_chain());
  ASSERT_EQ(certs.size(), 2u);
  for (const auto& c : certs) {
    if (c.rho != 1) continue;
    bool found = false;
    for (const auto& o : find_omniscient(long_chain())) found = found || (o.node == c.node && o.dest == c.dest);
    EXPECT_TRUE(found);
  }
}

TEST(Bounds, PriorAndNew) {
  const auto net = set_size_to_rank(1);
  const auto cert = find_bottlenecks(net, 1).at(0);
  EXPECT_EQ(to_string(bottleneck_bound(cert)), "3 D1 + D2 <= 3");
  EXPECT_EQ(to_string(prior_bound(cert, net)), "4 D1 + D2 <= 4");
  const auto fig3 = find_bottlenecks(fig3d1d2(), 1).at(0);
  EXPECT_EQ(to_string(prior_bound(fig3, fig3d1d2())), "3 D1 + D2 <= 3");
}

TEST(DegradedBc, Fig3d1d2) {
  const auto cert = find_bottlenecks(fig3d1d2(), 1).at(0);
  const BcModel bc = construct_degraded_bc(fig3d1d2(), cert, 0);
  EXPECT_EQ(bc.tx_antennas, 4u);
  ASSERT_EQ(bc.rx2_rows.size(), 3u);
  EXPECT_EQ(bc.rx2_nodes[0], "v5");
  EXPECT_EQ(bc.rx2_rows[0], bc.rx1_row);
}

TEST(DegradedBc, MD1D2) {
  const auto net = m_d1d2(3);
  const auto cert = find_bottlenecks(net, 1).at(0);
  const BcModel bc = construct_degraded_bc(net, cert, 0);
  EXPECT_EQ(bc.tx_antennas, 4u);
  EXPECT_EQ(bc.rx2_rows.size(), 3u);
}

TEST(DegradedBc, RhoOneGivesSingleRow) {
  const auto certs = find_all_bottlenecks(long_chain());
  ASSERT_FALSE(certs.empty());
  for (const auto& c : certs) {
    if (c.rho != 1) continue;
    const BcModel bc = construct_degraded_bc(long_chain(), c, 0);
    ASSERT_EQ(bc.rx2_rows.size(), 1u);
    EXPECT_EQ(bc.rx2_rows[0], bc.rx1_row);
  }
}

TEST(CertificateJson, KeyOrder) {
  const auto cert = find_bottlenecks(fig3d1d2(), 1).at(0);
  EXPECT_EQ(to_json(cert), R"({"dest":1,"node":"v5","layer":3,"M":["v2","v3","v4"],"rho":3,"prior_M_size":3})");
}
