#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "arxivnet/csv.hpp"
#include "arxivnet/diffusion_graph.hpp"
#include "arxivnet/error.hpp"
#include "arxivnet/hits.hpp"
#include "arxivnet/undirected_graph.hpp"

namespace arxivnet {

/// Collector sets of the dual-role users (a > 0 and h > 0).
struct CollectorSets {
  std::vector<NodeId> spreaders;            // diffusion-graph indices, ascending
  std::vector<std::vector<NodeId>> members;  // members[k] = collectors of spreaders[k], ascending
};

inline CollectorSets collector_sets(const DiffusionGraph& graph, const HitsScores& scores,
                                    double zero_threshold = kDefaultZeroThreshold) {
  if (scores.authority.size() != graph.size() || scores.hub.size() != graph.size())
    throw Error("HITS scores do not match the diffusion graph");
  CollectorSets sets;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (!is_positive_score(scores.authority[i], zero_threshold) || !is_positive_score(scores.hub[i], zero_threshold))
      continue;
    const auto node = static_cast<NodeId>(i);
    const auto c = graph.collectors_of(node);
    if (c.empty()) throw Error("user " + graph.users().name(node) + " has authority but no collectors");
    sets.spreaders.push_back(node);
    sets.members.emplace_back(c.begin(), c.end());
  }
  return sets;
}

inline std::size_t sorted_intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

/// Szymkiewicz-Simpson overlap |A n B| / min(|A|, |B|) from set sizes.
struct OverlapCoefficient {
  double operator()(std::size_t intersection, std::size_t size_a, std::size_t size_b) const {
    return static_cast<double>(intersection) / static_cast<double>(std::min(size_a, size_b));
  }
};

/// Overlap coefficient of two sorted, duplicate-free sets.
inline double overlap_coefficient(std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.empty() || b.empty()) throw Error("overlap coefficient of an empty set");
  return OverlapCoefficient{}(sorted_intersection_size(a, b), a.size(), b.size());
}

struct SpreaderNetwork {
  std::vector<NodeId> nodes;  // diffusion-graph index of each network node
  UndirectedGraph graph;      // edge weights are the similarity values
  double threshold = 0.5;
};

/// Connects spreaders whose collector-set similarity is >= threshold.
/// Candidate pairs come from an inverted collector -> spreaders index, so
/// only spreaders sharing a collector are ever compared. `Similarity` maps
/// (|A n B|, |A|, |B|) to a value; the default is the overlap coefficient.
template <typename Similarity = OverlapCoefficient>
SpreaderNetwork build_spreader_network(const CollectorSets& sets, double threshold, Similarity similarity = {}) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw Error("threshold must lie in (0, 1]");
  const auto m = sets.spreaders.size();
  if (sets.members.size() != m) throw Error("collector sets are misaligned");

  NodeId max_collector = 0;
  for (const auto& s : sets.members)
    for (auto c : s) max_collector = std::max(max_collector, c);
  std::vector<std::vector<std::uint32_t>> bucket(m ? max_collector + 1 : 0);
  for (std::uint32_t k = 0; k < m; ++k)
    for (auto c : sets.members[k]) bucket[c].push_back(k);  // ascending k

  std::vector<WeightedEdge> edges;
  std::vector<std::uint32_t> shared(m, 0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (auto c : sets.members[i]) {
      const auto& b = bucket[c];
      for (auto it = std::upper_bound(b.begin(), b.end(), i); it != b.end(); ++it) {
        if (shared[*it]++ == 0) touched.push_back(*it);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto j : touched) {
      const double s = similarity(shared[j], sets.members[i].size(), sets.members[j].size());
      if (s >= threshold) edges.push_back({i, j, s});
      shared[j] = 0;
    }
    touched.clear();
  }
  return SpreaderNetwork{sets.spreaders, UndirectedGraph(m, std::move(edges)), threshold};
}

inline void write_spreader_nodes_csv(std::ostream& out, const SpreaderNetwork& net, const DiffusionGraph& g,
                                     const HitsScores& scores) {
  csv::write_row(out, {"user_id", "authority", "hub"});
  for (auto node : net.nodes)
    csv::write_row(out, {g.users().name(node), csv::format_double(scores.authority[node]),
                         csv::format_double(scores.hub[node])});
}

inline void write_spreader_edges_csv(std::ostream& out, const SpreaderNetwork& net, const DiffusionGraph& g) {
  csv::write_row(out, {"spreader_a", "spreader_b", "coefficient"});
  for (const auto& e : net.graph.edges())
    csv::write_row(out, {g.users().name(net.nodes[e.u]), g.users().name(net.nodes[e.v]),
                         csv::format_double(e.weight)});
}

inline SpreaderNetwork read_spreader_network_csv(std::istream& nodes_in, std::istream& edges_in,
                                                 const UserIndex& users, double threshold) {
  const auto nt = csv::parse(nodes_in);
  const auto uid = nt.column("user_id");
  SpreaderNetwork net;
  net.threshold = threshold;
  for (const auto& r : nt.rows) net.nodes.push_back(users.at(r[uid]));
  if (!std::is_sorted(net.nodes.begin(), net.nodes.end())) throw Error("spreader nodes must be in user order");

  auto local = [&](const std::string& id) {
    const auto node = users.at(id);
    const auto it = std::lower_bound(net.nodes.begin(), net.nodes.end(), node);
    if (it == net.nodes.end() || *it != node) throw Error("edge endpoint " + id + " is not a spreader node");
    return static_cast<std::uint32_t>(it - net.nodes.begin());
  };
  const auto et = csv::parse(edges_in);
  const auto a = et.column("spreader_a"), b = et.column("spreader_b"), w = et.column("coefficient");
  std::vector<WeightedEdge> edges;
  for (const auto& r : et.rows) edges.push_back({local(r[a]), local(r[b]), csv::parse_number<double>(r[w])});
  net.graph = UndirectedGraph(net.nodes.size(), std::move(edges));
  return net;
}

}  // namespace arxivnet
