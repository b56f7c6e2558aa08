#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "herdscope/corpus.hpp"

namespace herdscope {

using NodeIndex = std::uint32_t;

/// Undirected simple graph over author ids.
///
/// Nodes are stored in lexicographic id order, so a node's index is its rank
/// among all ids and every adjacency list (sorted by index) is also sorted by
/// id. The graph is immutable once built.
class SocialGraph {
 public:
  SocialGraph() = default;

  /// Self-loops are dropped and repeated edges collapsed. Every endpoint and
  /// every id in `extra_nodes` becomes a node.
  static SocialGraph from_edges(
      std::span<const std::pair<std::string, std::string>> edges,
      std::span<const std::string> extra_nodes = {});

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& id(NodeIndex v) const { return ids_[v]; }
  std::optional<NodeIndex> find(std::string_view id) const;
  /// Throws DataError for an unknown id.
  NodeIndex index_of(std::string_view id) const;

  std::span<const NodeIndex> neighbors(NodeIndex v) const { return adjacency_[v]; }
  std::size_t degree(NodeIndex v) const { return adjacency_[v].size(); }
  bool has_edge(NodeIndex u, NodeIndex v) const;

  const std::vector<std::string>& ids() const noexcept { return ids_; }

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Nodes: every author, mention target and retweet target. Edges: a mentions
/// b, or a retweets b.
SocialGraph build_graph(const Corpus& corpus);

/// Number of edges among the neighbours of v.
std::uint64_t neighbor_links(const SocialGraph& g, NodeIndex v);

/// 2 E_v / (k_v (k_v - 1)); 0 when k_v < 2.
double local_clustering(const SocialGraph& g, NodeIndex v);
double local_clustering(const SocialGraph& g, std::string_view id);

std::uint64_t count_triangles(const SocialGraph& g);
/// Sum over nodes of k (k - 1) / 2.
std::uint64_t count_connected_triples(const SocialGraph& g);

/// Transitivity: 3 * triangles / connected triples, 0 without triples.
double global_clustering(const SocialGraph& g);

/// Throws DataError on an empty graph.
double mean_clustering(const SocialGraph& g);

struct CkPoint {
  std::size_t degree = 0;
  double mean_clustering = 0.0;
  std::size_t node_count = 0;
};

std::vector<CkPoint> ck_curve(const SocialGraph& g);

struct ClusteringStats {
  std::vector<double> local;          // by node index
  std::vector<std::size_t> degree;    // by node index
  double mean_clustering = 0.0;
  double global_clustering = 0.0;
  std::uint64_t triangles = 0;
  std::uint64_t connected_triples = 0;
  std::vector<CkPoint> ck_curve;
  std::vector<std::pair<std::size_t, std::size_t>> degree_distribution;  // (k, count)
};

/// All measures in one pass; mean_clustering is 0 for an empty graph.
ClusteringStats clustering_stats(const SocialGraph& g);

/// "a<TAB>b" per edge, a < b, lines sorted.
void write_edge_list(std::ostream& out, const SocialGraph& g);

}  // namespace herdscope
