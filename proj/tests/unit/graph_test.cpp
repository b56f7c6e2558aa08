#include "herdscope/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "herdscope/error.hpp"
#include "../support/fixtures.hpp"
#include "../support/graph_oracle.hpp"

namespace herdscope {
namespace {

using testing::make_record;
using Edges = std::vector<std::pair<std::string, std::string>>;

SocialGraph k4_minus_cd() {
  Edges e{{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}};
  return SocialGraph::from_edges(e);
}

SocialGraph complete(std::size_t n) {
  Edges e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(testing::node_name(i), testing::node_name(j));
  return SocialGraph::from_edges(e);
}

TEST(BuildGraph, MentionMakesEdge) {
  Corpus c{{make_record("t1", "a", "", {}, {"b"})}, ""};
  auto g = build_graph(c);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(g.index_of("a"), g.index_of("b")));
}

TEST(BuildGraph, SelfRetweetDropped) {
  Corpus c{{make_record("t1", "a", "", {}, {}, "a")}, ""};
  auto g = build_graph(c);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, UndirectedDedup) {
  Corpus c{{make_record("t1", "a", "", {}, {"b"}), make_record("t2", "b", "", {}, {}, "a")},
           ""};
  auto g = build_graph(c);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 1u);
}

TEST(BuildGraph, AuthorsWithoutInteractionsAreNodes) {
  Corpus c{{make_record("t1", "lonely"), make_record("t2", "a", "", {}, {"b", "c"})}, ""};
  auto g = build_graph(c);
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.degree(g.index_of("lonely")), 0u);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(LocalClustering, TriangleIsOne) {
  auto g = complete(3);
  for (NodeIndex v = 0; v < 3; ++v) EXPECT_EQ(local_clustering(g, v), 1.0);
}

TEST(LocalClustering, StarCenterIsZero) {
  Edges e{{"hub", "x"}, {"hub", "y"}, {"hub", "z"}};
  auto g = SocialGraph::from_edges(e);
  EXPECT_EQ(local_clustering(g, "hub"), 0.0);
}

TEST(LocalClustering, K4MinusEdge) {
  auto g = k4_minus_cd();
  EXPECT_DOUBLE_EQ(local_clustering(g, "a"), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(local_clustering(g, "b"), 2.0 / 3.0);
  EXPECT_EQ(local_clustering(g, "c"), 1.0);
  EXPECT_EQ(local_clustering(g, "d"), 1.0);
}

TEST(LocalClustering, DegenerateDegrees) {
  Edges e{{"a", "b"}};
  std::vector<std::string> extra{"iso"};
  auto g = SocialGraph::from_edges(e, extra);
  EXPECT_EQ(local_clustering(g, "a"), 0.0);
  EXPECT_EQ(local_clustering(g, "iso"), 0.0);
}

TEST(LocalClustering, UnknownNodeThrows) {
  auto g = complete(3);
  EXPECT_THROW(local_clustering(g, "nobody"), DataError);
}

TEST(GlobalClustering, Anchors) {
  EXPECT_EQ(global_clustering(complete(3)), 1.0);
  Edges path{{"a", "b"}, {"b", "c"}};
  EXPECT_EQ(global_clustering(SocialGraph::from_edges(path)), 0.0);
  auto g = k4_minus_cd();
  EXPECT_EQ(count_triangles(g), 2u);
  EXPECT_EQ(count_connected_triples(g), 8u);
  EXPECT_DOUBLE_EQ(global_clustering(g), 0.75);
  EXPECT_EQ(global_clustering(SocialGraph{}), 0.0);
}

TEST(MeanClustering, Anchors) {
  EXPECT_EQ(mean_clustering(complete(3)), 1.0);
  Edges path{{"a", "b"}, {"b", "c"}};
  EXPECT_EQ(mean_clustering(SocialGraph::from_edges(path)), 0.0);
  EXPECT_DOUBLE_EQ(mean_clustering(k4_minus_cd()), 5.0 / 6.0);
  EXPECT_THROW(mean_clustering(SocialGraph{}), DataError);
}

TEST(CkCurve, Anchors) {
  auto k3 = ck_curve(complete(3));
  ASSERT_EQ(k3.size(), 1u);
  EXPECT_EQ(k3[0].degree, 2u);
  EXPECT_EQ(k3[0].mean_clustering, 1.0);

  Edges star{{"hub", "x"}, {"hub", "y"}, {"hub", "z"}};
  auto s = ck_curve(SocialGraph::from_edges(star));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].degree, 1u);
  EXPECT_EQ(s[0].node_count, 3u);
  EXPECT_EQ(s[1].degree, 3u);
  EXPECT_EQ(s[1].mean_clustering, 0.0);

  auto k = ck_curve(k4_minus_cd());
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0].degree, 2u);
  EXPECT_EQ(k[0].mean_clustering, 1.0);
  EXPECT_EQ(k[1].degree, 3u);
  EXPECT_DOUBLE_EQ(k[1].mean_clustering, 2.0 / 3.0);

  EXPECT_TRUE(ck_curve(SocialGraph{}).empty());
}

TEST(ClusteringStats, MatchesIndividualMeasures) {
  auto g = k4_minus_cd();
  auto s = clustering_stats(g);
  EXPECT_EQ(s.mean_clustering, mean_clustering(g));
  EXPECT_EQ(s.global_clustering, global_clustering(g));
  EXPECT_EQ(s.triangles, 2u);
  ASSERT_EQ(s.degree_distribution.size(), 2u);
  EXPECT_EQ(s.degree_distribution[0], (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_EQ(s.degree_distribution[1], (std::pair<std::size_t, std::size_t>{3, 2}));
}

TEST(ClusteringOracle, RandomGraphsMatchBruteForce) {
  std::mt19937_64 rng(20210201);
  std::uniform_int_distribution<std::size_t> nodes(1, 60);
  std::uniform_real_distribution<double> prob(0.05, 0.5);
  for (int trial = 0; trial < 60; ++trial) {
    auto dense = testing::random_dense(rng, nodes(rng), prob(rng));
    auto names = testing::default_names(dense.n);
    auto g = SocialGraph::from_edges(testing::edge_pairs(dense, names), names);
    for (std::size_t v = 0; v < dense.n; ++v)
      ASSERT_EQ(local_clustering(g, names[v]), testing::oracle_local(dense, v));
    auto t = testing::oracle_triples(dense);
    ASSERT_EQ(3 * count_triangles(g), t.closed);
    ASSERT_EQ(count_connected_triples(g), t.closed + t.open);
    ASSERT_NEAR(global_clustering(g), testing::oracle_global(dense), 1e-12);
  }
}

TEST(ClusteringProperties, CompleteGraphsAndTrees) {
  for (std::size_t n = 3; n <= 12; ++n) {
    auto g = complete(n);
    for (NodeIndex v = 0; v < n; ++v) EXPECT_EQ(local_clustering(g, v), 1.0);
    EXPECT_EQ(global_clustering(g), 1.0);
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial * 3;
    Edges e;
    for (std::size_t v = 1; v < n; ++v) {
      std::uniform_int_distribution<std::size_t> parent(0, v - 1);
      e.emplace_back(testing::node_name(v), testing::node_name(parent(rng)));
    }
    auto g = SocialGraph::from_edges(e);
    for (NodeIndex v = 0; v < g.node_count(); ++v) EXPECT_EQ(local_clustering(g, v), 0.0);
    EXPECT_EQ(global_clustering(g), 0.0);
  }
}

TEST(ClusteringProperties, ClosingNeighbourPairRaisesLocal) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto dense = testing::random_dense(rng, 25, 0.2);
    for (std::size_t v = 0; v < dense.n; ++v) {
      std::vector<std::size_t> nb;
      for (std::size_t u = 0; u < dense.n; ++u)
        if (dense.adj[v][u]) nb.push_back(u);
      std::optional<std::pair<std::size_t, std::size_t>> open;
      for (std::size_t i = 0; i < nb.size() && !open; ++i)
        for (std::size_t j = i + 1; j < nb.size() && !open; ++j)
          if (!dense.adj[nb[i]][nb[j]]) open = {nb[i], nb[j]};
      if (!open) continue;
      auto names = testing::default_names(dense.n);
      auto before = SocialGraph::from_edges(testing::edge_pairs(dense, names), names);
      auto closed = dense;
      closed.connect(open->first, open->second);
      auto after = SocialGraph::from_edges(testing::edge_pairs(closed, names), names);
      EXPECT_EQ(before.degree(before.index_of(names[v])), after.degree(after.index_of(names[v])));
      EXPECT_GT(local_clustering(after, names[v]), local_clustering(before, names[v]));
      break;
    }
  }
}

TEST(ClusteringProperties, RelabelingInvariance) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    auto dense = testing::random_dense(rng, 40, 0.15);
    auto names = testing::default_names(dense.n);
    auto renamed = names;
    std::shuffle(renamed.begin(), renamed.end(), rng);
    for (auto& s : renamed) s = "x" + s;
    auto g1 = SocialGraph::from_edges(testing::edge_pairs(dense, names), names);
    auto g2 = SocialGraph::from_edges(testing::edge_pairs(dense, renamed), renamed);
    for (std::size_t v = 0; v < dense.n; ++v)
      EXPECT_EQ(local_clustering(g1, names[v]), local_clustering(g2, renamed[v]));
    EXPECT_EQ(global_clustering(g1), global_clustering(g2));
    EXPECT_DOUBLE_EQ(mean_clustering(g1), mean_clustering(g2));
  }
}

TEST(EdgeList, EachEdgeOnceOrdered) {
  Edges e{{"b", "a"}, {"c", "a"}, {"a", "b"}};
  std::ostringstream out;
  write_edge_list(out, SocialGraph::from_edges(e));
  EXPECT_EQ(out.str(), "a\tb\na\tc\n");
}

}  // namespace
}  // namespace herdscope
