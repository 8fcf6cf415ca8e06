#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "arxivnet/error.hpp"

namespace arxivnet {

struct WeightedEdge {
  std::uint32_t u = 0;  // u < v
  std::uint32_t v = 0;
  double weight = 1.0;

  bool operator==(const WeightedEdge&) const = default;
};

/// Simple undirected weighted graph on nodes 0..n-1 with sorted adjacency.
/// No self-loops or parallel edges.
class UndirectedGraph {
public:
  struct Neighbor {
    std::uint32_t node;
    double weight;
  };

  UndirectedGraph() = default;

  UndirectedGraph(std::size_t n, std::vector<WeightedEdge> edges) : n_(n) {
    for (auto& e : edges) {
      if (e.u == e.v) throw Error("undirected graph: self-loop");
      if (e.u >= n || e.v >= n) throw Error("undirected graph: node out of range");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t k = 1; k < edges.size(); ++k)
      if (edges[k].u == edges[k - 1].u && edges[k].v == edges[k - 1].v)
        throw Error("undirected graph: parallel edge");
    edges_ = std::move(edges);

    ptr_.assign(n + 1, 0);
    for (const auto& e : edges_) {
      ++ptr_[e.u + 1];
      ++ptr_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) ptr_[i + 1] += ptr_[i];
    adj_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(ptr_.begin(), ptr_.end() - 1);
    for (const auto& e : edges_) {
      adj_[fill[e.u]++] = {e.v, e.weight};
      adj_[fill[e.v]++] = {e.u, e.weight};
    }
    for (std::size_t i = 0; i < n; ++i)
      std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(ptr_[i]), adj_.begin() + static_cast<std::ptrdiff_t>(ptr_[i + 1]),
                [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  std::span<const Neighbor> neighbors(std::uint32_t i) const {
    return {adj_.data() + ptr_[i], ptr_[i + 1] - ptr_[i]};
  }
  std::size_t degree(std::uint32_t i) const { return ptr_[i + 1] - ptr_[i]; }

private:
  std::size_t n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<std::size_t> ptr_{0};
  std::vector<Neighbor> adj_;
};

}  // namespace arxivnet
