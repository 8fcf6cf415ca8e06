#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "arxivnet/hits.hpp"
#include "arxivnet/report.hpp"
#include "oracles.hpp"

using namespace arxivnet;

TEST(Hits, TwoByTwoMatchesEigenOracle) {
  // rows c1,c2 (nodes 0,1); cols s1,s2 (nodes 2,3); D = [[1,1],[1,0]]
  const oracle::Pairs p{{0, 2}, {0, 3}, {1, 2}};
  const auto g = DiffusionGraph::from_pairs(4, p);
  const auto s = compute_hits(g);
  ASSERT_TRUE(s.converged);
  const auto ref = oracle::hits_reference(4, p);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(s.authority[i], ref.authority(i), 1e-9);
    EXPECT_NEAR(s.hub[i], ref.hub(i), 1e-9);
  }
  // (1 + sqrt 5)/2 normalized: the golden-ratio eigenvector
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double norm = std::sqrt(phi * phi + 1);
  EXPECT_NEAR(s.authority[2], phi / norm, 1e-9);
  EXPECT_NEAR(s.authority[3], 1 / norm, 1e-9);
  EXPECT_NEAR(s.hub[0], 0.851, 5e-4);
  EXPECT_NEAR(s.hub[1], 0.526, 5e-4);
}

TEST(Hits, SingleEdge) {
  const oracle::Pairs p{{0, 1}};
  const auto s = compute_hits(DiffusionGraph::from_pairs(2, p));
  EXPECT_DOUBLE_EQ(s.authority[1], 1.0);
  EXPECT_DOUBLE_EQ(s.authority[0], 0.0);
  EXPECT_DOUBLE_EQ(s.hub[0], 1.0);
  EXPECT_DOUBLE_EQ(s.hub[1], 0.0);
  const auto r = classify_roles(s);
  EXPECT_EQ(r.authority_positive, 1u);
  EXPECT_EQ(r.hub_positive, 1u);
  EXPECT_EQ(r.both_positive, 0u);
}

TEST(Hits, StarHubsAreEqual) {
  oracle::Pairs p;
  for (NodeId c = 1; c <= 6; ++c) p.emplace_back(c, 0);
  const auto s = compute_hits(DiffusionGraph::from_pairs(7, p));
  EXPECT_DOUBLE_EQ(s.authority[0], 1.0);
  for (NodeId c = 1; c <= 6; ++c) {
    EXPECT_DOUBLE_EQ(s.authority[c], 0.0);
    EXPECT_NEAR(s.hub[c], 1 / std::sqrt(6.0), 1e-15);
  }
}

TEST(Hits, L1NormSumsToOne) {
  std::mt19937_64 rng(3);
  const auto p = oracle::random_pairs(60, 0.08, rng);
  HitsOptions o;
  o.norm = HitsNorm::l1;
  const auto s = compute_hits(DiffusionGraph::from_pairs(60, p), o);
  EXPECT_NEAR(vector_norm(s.authority, HitsNorm::l1), 1.0, 1e-12);
  EXPECT_NEAR(vector_norm(s.hub, HitsNorm::l1), 1.0, 1e-12);
  const auto ref = oracle::hits_reference(60, p);
  EXPECT_GT(oracle::cosine(s.authority, ref.authority), 1 - 1e-8);
}

TEST(Hits, ObserverSeesUnitNorms) {
  std::mt19937_64 rng(5);
  const auto p = oracle::random_pairs(100, 0.05, rng);
  std::size_t calls = 0;
  const auto s = compute_hits(DiffusionGraph::from_pairs(100, p), {}, [&](const HitsIteration& it) {
    ++calls;
    EXPECT_NEAR(vector_norm(it.authority, HitsNorm::l2), 1.0, 1e-12);
    EXPECT_NEAR(vector_norm(it.hub, HitsNorm::l2), 1.0, 1e-12);
  });
  EXPECT_EQ(calls, s.iterations);
}

TEST(Hits, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(11);
  const auto p = oracle::random_pairs(5000, 0.001, rng);
  const auto g = DiffusionGraph::from_pairs(5000, p);
  HitsOptions one, four;
  four.threads = 4;
  const auto a = compute_hits(g, one), b = compute_hits(g, four);
  EXPECT_EQ(a.authority, b.authority);
  EXPECT_EQ(a.hub, b.hub);
}

TEST(Hits, IterationCapReportsNonConvergence) {
  std::mt19937_64 rng(1);
  const auto p = oracle::random_pairs(50, 0.1, rng);
  HitsOptions o;
  o.max_iterations = 2;
  const auto s = compute_hits(DiffusionGraph::from_pairs(50, p), o);
  EXPECT_FALSE(s.converged);
  EXPECT_EQ(s.iterations, 2u);
}

TEST(Hits, RejectsEmptyGraphAndBadOptions) {
  EXPECT_THROW(compute_hits(DiffusionGraph::from_pairs(3, {})), Error);
  const oracle::Pairs p{{0, 1}};
  HitsOptions o;
  o.tolerance = 0;
  EXPECT_THROW(compute_hits(DiffusionGraph::from_pairs(2, p), o), Error);
  EXPECT_THROW(parse_hits_norm("l3"), Error);
}

TEST(Roles, PublishedPercentages) {
  RoleBreakdown r{586999, 64490, 566367, 43858, 20632, 522509};
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(report::pct(r.percent(r.authority_positive)), "11.0");
  EXPECT_EQ(report::pct(r.percent(r.hub_positive)), "96.5");
  EXPECT_EQ(report::pct(r.percent(r.both_positive)), "7.5");
  EXPECT_EQ(report::pct(r.percent(r.authority_only)), "3.5");
  EXPECT_EQ(report::pct(r.percent(r.hub_only)), "89.0");
}

TEST(Roles, ZeroThresholdIsInclusive) {
  HitsScores s;
  s.authority = {1e-15, 9e-16, 0.0};
  s.hub = {0.0, 0.5, 1e-15};
  const auto r = classify_roles(s);
  EXPECT_EQ(r.authority_positive, 1u);
  EXPECT_EQ(r.hub_positive, 2u);
  EXPECT_TRUE(r.consistent());
}

TEST(Ranks, DescendingWithIndexTieBreak) {
  const std::vector<double> v{0.2, 0.9, 0.2, 0.5};
  EXPECT_EQ(descending_ranks(v), (std::vector<std::size_t>{3, 1, 4, 2}));
}

TEST(Hits, CsvRoundTripIsLossless) {
  std::mt19937_64 rng(9);
  const auto p = oracle::random_pairs(40, 0.1, rng);
  const auto g = DiffusionGraph::from_pairs(40, p);
  const auto s = compute_hits(g);
  std::stringstream io;
  write_hits_csv(io, g, s);
  const auto back = read_hits_csv(io, g);
  EXPECT_EQ(back.authority, s.authority);
  EXPECT_EQ(back.hub, s.hub);
}
