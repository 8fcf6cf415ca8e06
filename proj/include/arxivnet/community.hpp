#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arxivnet/error.hpp"
#include "arxivnet/undirected_graph.hpp"

namespace arxivnet {

/// Community assignment with dense ids 0..count-1.
struct Partition {
  std::vector<std::uint32_t> community;
  std::size_t count = 0;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s(count, 0);
    for (auto c : community) ++s[c];
    return s;
  }
};

/// Relabels so that ids run by descending size; equal sizes are ordered by
/// their smallest member.
inline Partition canonicalize(const std::vector<std::uint32_t>& labels) {
  std::unordered_map<std::uint32_t, std::uint32_t> first_seen;
  std::vector<std::pair<std::size_t, std::uint32_t>> info;  // (size, first node)
  std::vector<std::uint32_t> dense(labels.size());
  for (std::uint32_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = first_seen.emplace(labels[i], static_cast<std::uint32_t>(info.size()));
    if (inserted) info.push_back({0, i});
    ++info[it->second].first;
    dense[i] = it->second;
  }
  std::vector<std::uint32_t> order(info.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) {
    if (info[x].first != info[y].first) return info[x].first > info[y].first;
    return info[x].second < info[y].second;
  });
  std::vector<std::uint32_t> rename(info.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) rename[order[k]] = k;
  Partition p;
  p.count = info.size();
  p.community.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) p.community[i] = rename[dense[i]];
  return p;
}

/// Newman-Girvan modularity with resolution `gamma`:
///   Q = sum_c [ in_c / 2m - gamma * (tot_c / 2m)^2 ].
/// An edgeless graph has Q = 0.
inline double modularity(const UndirectedGraph& g, const std::vector<std::uint32_t>& community, bool weighted = true,
                         double gamma = 1.0) {
  if (community.size() != g.node_count()) throw Error("partition does not cover every node");
  std::uint32_t max_label = 0;
  for (auto c : community) max_label = std::max(max_label, c);
  std::vector<double> in(g.node_count() ? max_label + 1 : 0, 0.0), tot(in.size(), 0.0);
  double m2 = 0.0;
  for (const auto& e : g.edges()) {
    const double w = weighted ? e.weight : 1.0;
    m2 += 2.0 * w;
    tot[community[e.u]] += w;
    tot[community[e.v]] += w;
    if (community[e.u] == community[e.v]) in[community[e.u]] += 2.0 * w;
  }
  if (m2 == 0.0) return 0.0;
  double q = 0.0;
  for (std::size_t c = 0; c < in.size(); ++c) q += in[c] / m2 - gamma * (tot[c] / m2) * (tot[c] / m2);
  return q;
}

inline double modularity(const UndirectedGraph& g, const Partition& p, bool weighted = true, double gamma = 1.0) {
  return modularity(g, p.community, weighted, gamma);
}

struct LouvainOptions {
  double resolution = 1.0;
  std::uint64_t seed = 0;  // 0: visit nodes in ascending order
  bool weighted = true;
  std::size_t max_levels = 64;
  std::size_t max_passes = 1000;  // node-move passes per level
};

struct LouvainResult {
  Partition partition;
  double modularity = 0.0;
  std::size_t levels = 0;
};

namespace detail {

// Graph at one aggregation level. Self-loop weight `self[i]` is A_ii (each
// internal edge of the merged nodes counted from both ends).
struct LouvainLevel {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
  std::vector<double> self;
  std::vector<double> degree;
  double m2 = 0.0;

  std::size_t size() const { return adj.size(); }
};

inline LouvainLevel initial_level(const UndirectedGraph& g, bool weighted) {
  LouvainLevel L;
  const auto n = g.node_count();
  L.adj.resize(n);
  L.self.assign(n, 0.0);
  L.degree.assign(n, 0.0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const auto& nb : g.neighbors(i)) {
      const double w = weighted ? nb.weight : 1.0;
      L.adj[i].push_back({nb.node, w});
      L.degree[i] += w;
    }
    L.m2 += L.degree[i];
  }
  return L;
}

// Node-move phase. Returns the community of each node (not dense) and
// whether any node moved.
inline bool move_nodes(const LouvainLevel& L, double gamma, const std::vector<std::uint32_t>& order,
                       std::size_t max_passes, std::vector<std::uint32_t>& comm) {
  const auto n = L.size();
  comm.resize(n);
  std::iota(comm.begin(), comm.end(), 0u);
  std::vector<double> tot(L.degree);
  std::vector<double> link(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> touched;
  bool any_move = false;

  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    std::size_t moves = 0;
    for (auto i : order) {
      const auto own = comm[i];
      const double k = L.degree[i];
      touched.clear();
      touched.push_back(own);
      seen[own] = 1;
      for (const auto& [j, w] : L.adj[i]) {
        const auto c = comm[j];
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        link[c] += w;
      }
      tot[own] -= k;
      auto best = own;
      double best_gain = link[own] - gamma * tot[own] * k / L.m2;
      for (auto c : touched) {
        const double gain = link[c] - gamma * tot[c] * k / L.m2;
        if (gain > best_gain + 1e-14 * std::max(1.0, std::abs(best_gain))) {
          best_gain = gain;
          best = c;
        }
      }
      tot[best] += k;
      comm[i] = best;
      for (auto c : touched) {
        link[c] = 0.0;
        seen[c] = 0;
      }
      if (best != own) ++moves;
    }
    if (moves == 0) break;
    any_move = true;
  }
  return any_move;
}

inline LouvainLevel aggregate(const LouvainLevel& L, const std::vector<std::uint32_t>& dense, std::size_t count) {
  LouvainLevel A;
  A.adj.resize(count);
  A.self.assign(count, 0.0);
  A.degree.assign(count, 0.0);
  A.m2 = L.m2;
  std::vector<std::unordered_map<std::uint32_t, double>> acc(count);
  for (std::uint32_t i = 0; i < L.size(); ++i) {
    const auto ci = dense[i];
    A.degree[ci] += L.degree[i];
    A.self[ci] += L.self[i];
    for (const auto& [j, w] : L.adj[i]) {
      const auto cj = dense[j];
      if (ci == cj)
        A.self[ci] += w;
      else
        acc[ci][cj] += w;
    }
  }
  for (std::uint32_t c = 0; c < count; ++c) {
    A.adj[c].assign(acc[c].begin(), acc[c].end());
    std::sort(A.adj[c].begin(), A.adj[c].end());
  }
  return A;
}

}  // namespace detail

/// Louvain modularity optimization: repeated node-move and aggregation
/// phases until a level produces no move. Deterministic for a fixed seed;
/// with seed 0 nodes are visited in ascending order at every level.
/// Community ids are ordered by descending size.
inline LouvainResult louvain(const UndirectedGraph& g, const LouvainOptions& opts = {}) {
  const auto n = g.node_count();
  LouvainResult r;
  std::vector<std::uint32_t> membership(n);
  std::iota(membership.begin(), membership.end(), 0u);

  auto level = detail::initial_level(g, opts.weighted);
  std::mt19937_64 rng(opts.seed);
  while (level.m2 > 0.0 && r.levels < opts.max_levels) {
    std::vector<std::uint32_t> order(level.size());
    std::iota(order.begin(), order.end(), 0u);
    if (opts.seed != 0) std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::uint32_t> comm;
    if (!detail::move_nodes(level, opts.resolution, order, opts.max_passes, comm)) break;
    ++r.levels;

    std::vector<std::uint32_t> dense(level.size());
    std::unordered_map<std::uint32_t, std::uint32_t> rename;
    for (std::uint32_t i = 0; i < level.size(); ++i)
      dense[i] = rename.emplace(comm[i], static_cast<std::uint32_t>(rename.size())).first->second;
    for (auto& m : membership) m = dense[m];
    if (rename.size() == level.size()) break;
    level = detail::aggregate(level, dense, rename.size());
  }

  r.partition = canonicalize(membership);
  r.modularity = modularity(g, r.partition, opts.weighted, opts.resolution);
  return r;
}

struct ComponentInfo {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double node_pct = 0.0;
  double edge_pct = 0.0;
  std::size_t communities = 0;
};

/// Connected components sorted by descending node count (ties: smallest
/// member first); component_of[i] indexes `components`.
struct ComponentReport {
  std::vector<std::uint32_t> component_of;
  std::vector<ComponentInfo> components;
};

inline ComponentReport connected_components(const UndirectedGraph& g, const Partition* partition = nullptr) {
  const auto n = g.node_count();
  if (partition && partition->community.size() != n) throw Error("partition does not cover every node");
  std::vector<std::uint32_t> label(n, UINT32_MAX);
  std::uint32_t next = 0;
  std::queue<std::uint32_t> q;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (label[s] != UINT32_MAX) continue;
    label[s] = next;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (const auto& nb : g.neighbors(u))
        if (label[nb.node] == UINT32_MAX) {
          label[nb.node] = next;
          q.push(nb.node);
        }
    }
    ++next;
  }
  // BFS labels already follow smallest-member order, so canonicalize gives
  // the size-then-first-member ordering.
  const auto canon = canonicalize(label);
  ComponentReport rep;
  rep.component_of = canon.community;
  rep.components.resize(canon.count);
  for (auto c : rep.component_of) ++rep.components[c].nodes;
  for (const auto& e : g.edges()) ++rep.components[rep.component_of[e.u]].edges;
  std::vector<std::set<std::uint32_t>> comms(partition ? canon.count : 0);
  if (partition)
    for (std::size_t i = 0; i < n; ++i) comms[rep.component_of[i]].insert(partition->community[i]);
  for (std::size_t c = 0; c < canon.count; ++c) {
    auto& info = rep.components[c];
    info.node_pct = n ? 100.0 * static_cast<double>(info.nodes) / static_cast<double>(n) : 0.0;
    info.edge_pct = g.edge_count() ? 100.0 * static_cast<double>(info.edges) / static_cast<double>(g.edge_count()) : 0.0;
    info.communities = partition ? comms[c].size() : 0;
  }
  return rep;
}

}  // namespace arxivnet
