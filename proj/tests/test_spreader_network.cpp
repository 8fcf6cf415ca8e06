#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "arxivnet/spreader_network.hpp"
#include "oracles.hpp"

using namespace arxivnet;

namespace {

CollectorSets sets_of(std::vector<std::vector<NodeId>> members) {
  CollectorSets s;
  for (NodeId k = 0; k < members.size(); ++k) s.spreaders.push_back(100 + k);
  s.members = std::move(members);
  return s;
}

}  // namespace

TEST(Overlap, Examples) {
  const std::vector<NodeId> a{1, 2, 3}, b{2, 3, 4}, c{1, 2, 3, 4, 5}, d{7, 8};
  EXPECT_DOUBLE_EQ(overlap_coefficient(a, b), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(overlap_coefficient(a, c), 1.0);
  EXPECT_DOUBLE_EQ(overlap_coefficient(a, d), 0.0);
  EXPECT_THROW(overlap_coefficient(a, std::vector<NodeId>{}), Error);
}

TEST(SpreaderNetwork, ThresholdIsInclusive) {
  // |A| = |B| = |C| = 10; |A n B| = 8, |A n C| = 5, |B n C| = 3.
  std::vector<NodeId> a{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::vector<NodeId> b{0, 1, 2, 3, 4, 5, 6, 7, 20, 21};
  std::vector<NodeId> c{0, 1, 2, 8, 9, 30, 31, 32, 33, 34};
  ASSERT_DOUBLE_EQ(overlap_coefficient(a, b), 0.8);
  ASSERT_DOUBLE_EQ(overlap_coefficient(a, c), 0.5);
  ASSERT_DOUBLE_EQ(overlap_coefficient(b, c), 0.3);
  const auto net = build_spreader_network(sets_of({a, b, c}), 0.5);
  ASSERT_EQ(net.graph.edge_count(), 2u);
  EXPECT_EQ(net.graph.edges()[0], (WeightedEdge{0, 1, 0.8}));
  EXPECT_EQ(net.graph.edges()[1], (WeightedEdge{0, 2, 0.5}));
}

TEST(SpreaderNetwork, IdenticalSetsAtThresholdOneFormClique) {
  const std::vector<NodeId> s{3, 5, 8};
  const auto net = build_spreader_network(sets_of({s, s, s, s, {1, 2}}), 1.0);
  EXPECT_EQ(net.graph.edge_count(), 6u);
  EXPECT_EQ(net.graph.degree(4), 0u);
  EXPECT_EQ(net.graph.node_count(), 5u);
}

TEST(SpreaderNetwork, RejectsThresholdOutsideUnitInterval) {
  const auto sets = sets_of({{1}, {1}});
  EXPECT_THROW(build_spreader_network(sets, 0.0), Error);
  EXPECT_THROW(build_spreader_network(sets, 1.5), Error);
}

TEST(SpreaderNetwork, MatchesAllPairsOracle) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 10; ++round) {
    std::uniform_int_distribution<int> size(1, 12);
    std::uniform_int_distribution<NodeId> member(0, 40);
    std::vector<std::vector<NodeId>> members(80);
    for (auto& m : members) {
      for (int k = size(rng); k > 0; --k) m.push_back(member(rng));
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    const auto want = oracle::all_pairs_overlap(members, 0.4);
    const auto net = build_spreader_network(sets_of(members), 0.4);
    ASSERT_EQ(net.graph.edge_count(), want.size());
    for (const auto& e : net.graph.edges()) EXPECT_EQ(want.at({e.u, e.v}), e.weight);
  }
}

TEST(CollectorSets, KeepsOnlyDualRoleUsers) {
  // 0 -> 1 -> 2: node 1 is the only user with a > 0 and h > 0.
  const oracle::Pairs p{{0, 1}, {1, 2}, {3, 1}};
  const auto g = DiffusionGraph::from_pairs(4, p);
  HitsScores fake;
  fake.authority = {0, 0.5, 0.5, 0};
  fake.hub = {0.5, 0.5, 0, 0.5};
  const auto sets = collector_sets(g, fake);
  ASSERT_EQ(sets.spreaders, std::vector<NodeId>{1});
  EXPECT_EQ(sets.members[0], (std::vector<NodeId>{0, 3}));
}

TEST(SpreaderNetwork, CsvRoundTrip) {
  const oracle::Pairs p{{0, 1}, {0, 2}, {1, 2}, {2, 1}, {3, 1}, {3, 2}};
  const auto g = DiffusionGraph::from_pairs(4, p);
  const auto s = compute_hits(g);
  const auto net = build_spreader_network(collector_sets(g, s), 0.5);
  ASSERT_EQ(net.nodes.size(), 2u);
  std::stringstream n, e;
  write_spreader_nodes_csv(n, net, g, s);
  write_spreader_edges_csv(e, net, g);
  const auto back = read_spreader_network_csv(n, e, g.users(), 0.5);
  EXPECT_EQ(back.nodes, net.nodes);
  EXPECT_EQ(back.graph.edges(), net.graph.edges());
}
