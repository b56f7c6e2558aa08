#include "herdscope/graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include "herdscope/error.hpp"

namespace herdscope {

namespace {

// |a ∩ b| restricted to elements greater than `floor`; both sorted.
std::uint64_t count_common_above(std::span<const NodeIndex> a,
                                 std::span<const NodeIndex> b, NodeIndex floor) {
  auto ia = std::upper_bound(a.begin(), a.end(), floor);
  auto ib = std::upper_bound(b.begin(), b.end(), floor);
  std::uint64_t n = 0;
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++n;
      ++ia;
      ++ib;
    }
  }
  return n;
}

}  // namespace

SocialGraph SocialGraph::from_edges(
    std::span<const std::pair<std::string, std::string>> edges,
    std::span<const std::string> extra_nodes) {
  SocialGraph g;
  for (const auto& [a, b] : edges) {
    g.ids_.push_back(a);
    g.ids_.push_back(b);
  }
  g.ids_.insert(g.ids_.end(), extra_nodes.begin(), extra_nodes.end());
  std::sort(g.ids_.begin(), g.ids_.end());
  g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());

  g.adjacency_.resize(g.ids_.size());
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    NodeIndex u = *g.find(a);
    NodeIndex v = *g.find(b);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.edge_count_ += adj.size();
  }
  g.edge_count_ /= 2;
  return g;
}

std::optional<NodeIndex> SocialGraph::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - ids_.begin());
}

NodeIndex SocialGraph::index_of(std::string_view id) const {
  auto v = find(id);
  if (!v) throw DataError(fmt::format("unknown node '{}'", id));
  return *v;
}

bool SocialGraph::has_edge(NodeIndex u, NodeIndex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

SocialGraph build_graph(const Corpus& corpus) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> authors;
  authors.reserve(corpus.records.size());
  for (const auto& r : corpus.records) {
    authors.push_back(r.author_id);
    for (const auto& m : r.mentions) edges.emplace_back(r.author_id, m);
    if (r.retweet_of) edges.emplace_back(r.author_id, *r.retweet_of);
  }
  return SocialGraph::from_edges(edges, authors);
}

std::uint64_t neighbor_links(const SocialGraph& g, NodeIndex v) {
  auto nv = g.neighbors(v);
  std::uint64_t links = 0;
  for (NodeIndex u : nv) links += count_common_above(nv, g.neighbors(u), u);
  return links;
}

double local_clustering(const SocialGraph& g, NodeIndex v) {
  std::uint64_t k = g.degree(v);
  if (k < 2) return 0.0;
  return static_cast<double>(2 * neighbor_links(g, v)) /
         static_cast<double>(k * (k - 1));
}

double local_clustering(const SocialGraph& g, std::string_view id) {
  return local_clustering(g, g.index_of(id));
}

std::uint64_t count_triangles(const SocialGraph& g) {
  std::uint64_t total = 0;
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex v : g.neighbors(u)) {
      if (v <= u) continue;
      total += count_common_above(g.neighbors(u), g.neighbors(v), v);
    }
  }
  return total;
}

std::uint64_t count_connected_triples(const SocialGraph& g) {
  std::uint64_t triples = 0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    std::uint64_t k = g.degree(v);
    if (k >= 2) triples += k * (k - 1) / 2;
  }
  return triples;
}

double global_clustering(const SocialGraph& g) {
  std::uint64_t triples = count_connected_triples(g);
  if (triples == 0) return 0.0;
  return static_cast<double>(3 * count_triangles(g)) / static_cast<double>(triples);
}

double mean_clustering(const SocialGraph& g) {
  if (g.node_count() == 0) throw DataError("mean clustering of an empty graph");
  double sum = 0.0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) sum += local_clustering(g, v);
  return sum / static_cast<double>(g.node_count());
}

std::vector<CkPoint> ck_curve(const SocialGraph& g) {
  std::map<std::size_t, std::pair<double, std::size_t>> by_degree;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    auto& slot = by_degree[g.degree(v)];
    slot.first += local_clustering(g, v);
    ++slot.second;
  }
  std::vector<CkPoint> curve;
  curve.reserve(by_degree.size());
  for (const auto& [k, acc] : by_degree)
    curve.push_back({k, acc.first / static_cast<double>(acc.second), acc.second});
  return curve;
}

ClusteringStats clustering_stats(const SocialGraph& g) {
  ClusteringStats s;
  const std::size_t n = g.node_count();
  s.local.resize(n);
  s.degree.resize(n);
  double sum = 0.0;
  for (NodeIndex v = 0; v < n; ++v) {
    s.local[v] = local_clustering(g, v);
    s.degree[v] = g.degree(v);
    sum += s.local[v];
  }
  s.mean_clustering = n == 0 ? 0.0 : sum / static_cast<double>(n);
  s.triangles = count_triangles(g);
  s.connected_triples = count_connected_triples(g);
  s.global_clustering =
      s.connected_triples == 0
          ? 0.0
          : static_cast<double>(3 * s.triangles) / static_cast<double>(s.connected_triples);
  s.ck_curve = ck_curve(g);
  for (const auto& p : s.ck_curve) s.degree_distribution.emplace_back(p.degree, p.node_count);
  return s;
}

void write_edge_list(std::ostream& out, const SocialGraph& g) {
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex v : g.neighbors(u)) {
      if (v > u) out << g.id(u) << '\t' << g.id(v) << '\n';
    }
  }
}

}  // namespace herdscope
