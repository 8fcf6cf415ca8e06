#pragma once

// Independent reference implementations used as test oracles. They favour
// obviousness over speed and share no code with the library beyond the
// graph containers they read.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "arxivnet/diffusion_graph.hpp"
#include "arxivnet/undirected_graph.hpp"

namespace oracle {

using Pairs = std::vector<std::pair<arxivnet::NodeId, arxivnet::NodeId>>;

inline Eigen::MatrixXd dense_d(std::size_t n, const Pairs& pairs) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (auto [c, s] : pairs)
    if (c != s) d(c, s) = 1.0;
  return d;
}

// Projection of `start` onto the dominant eigenspace of the symmetric PSD
// matrix m, L2-normalized. When the top eigenvalue is simple this is the
// dominant eigenvector (sign fixed by the start vector); when it is repeated,
// power iteration from `start` converges to exactly this projection.
inline Eigen::VectorXd dominant_direction(const Eigen::MatrixXd& m, const Eigen::VectorXd& start) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const auto& vals = es.eigenvalues();  // ascending
  const auto& vecs = es.eigenvectors();
  const double top = vals(vals.size() - 1);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m.rows());
  for (Eigen::Index k = vals.size() - 1; k >= 0 && vals(k) >= top * (1.0 - 1e-9); --k)
    out += vecs.col(k) * vecs.col(k).dot(start);
  return out / out.norm();
}

struct HitsReference {
  Eigen::VectorXd authority, hub;
};

// a converges to the top eigenspace of D^T D applied to D^T 1 (the first
// authority update from h = 1); h to the top eigenspace of D D^T applied to 1.
inline HitsReference hits_reference(std::size_t n, const Pairs& pairs) {
  const auto d = dense_d(n, pairs);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  return {dominant_direction(d.transpose() * d, d.transpose() * ones), dominant_direction(d * d.transpose(), ones)};
}

inline double cosine(std::span<const double> x, const Eigen::VectorXd& y) {
  double dot = 0, nx = 0, ny = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x[i] * y(static_cast<Eigen::Index>(i));
    nx += x[i] * x[i];
    ny += y(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(i));
  }
  return dot / std::sqrt(nx * ny);
}

// All-pairs overlap coefficients by direct set intersection.
inline std::map<std::pair<std::size_t, std::size_t>, double> all_pairs_overlap(
    const std::vector<std::vector<arxivnet::NodeId>>& sets, double threshold) {
  std::map<std::pair<std::size_t, std::size_t>, double> out;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::size_t common = 0;
      for (auto x : sets[i])
        if (std::find(sets[j].begin(), sets[j].end(), x) != sets[j].end()) ++common;
      const double c = static_cast<double>(common) / static_cast<double>(std::min(sets[i].size(), sets[j].size()));
      if (c >= threshold) out[{i, j}] = c;
    }
  return out;
}

// Modularity straight from the definition
//   Q = 1/2m * sum_ij (A_ij - gamma k_i k_j / 2m) [c_i == c_j].
inline double modularity_dense(const arxivnet::UndirectedGraph& g, const std::vector<std::uint32_t>& c,
                               bool weighted = true, double gamma = 1.0) {
  const auto n = g.node_count();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = weighted ? e.weight : 1.0;
  std::vector<double> k(n, 0.0);
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k[i] += a[i][j];
      m2 += a[i][j];
    }
  if (m2 == 0.0) return 0.0;
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c[i] == c[j]) q += a[i][j] - gamma * k[i] * k[j] / m2;
  return q / m2;
}

// Best partition over all set partitions (restricted growth strings).
struct BestPartition {
  std::vector<std::uint32_t> labels;
  double q = -std::numeric_limits<double>::infinity();
  std::size_t partitions = 0;
};

namespace detail {
inline void enumerate_partitions(const arxivnet::UndirectedGraph& g, std::vector<std::uint32_t>& labels,
                                 std::size_t i, std::uint32_t used, BestPartition& best) {
  if (i == labels.size()) {
    ++best.partitions;
    const double q = modularity_dense(g, labels);
    if (q > best.q + 1e-12) {
      best.q = q;
      best.labels = labels;
    }
    return;
  }
  for (std::uint32_t c = 0; c <= used; ++c) {
    labels[i] = c;
    enumerate_partitions(g, labels, i + 1, c == used ? used + 1 : used, best);
  }
}
}  // namespace detail

inline BestPartition exhaustive_modularity(const arxivnet::UndirectedGraph& g) {
  BestPartition best;
  std::vector<std::uint32_t> labels(g.node_count(), 0);
  detail::enumerate_partitions(g, labels, 0, 0, best);
  return best;
}

// Betweenness from all-pairs distances and shortest-path counts:
//   b(v) = sum_{s<t, v != s,t} sigma_sv * sigma_vt / sigma_st
// over pairs with d(s,v) + d(v,t) = d(s,t).
inline std::vector<double> betweenness_by_path_counting(const arxivnet::UndirectedGraph& g) {
  const auto n = g.node_count();
  constexpr int inf = std::numeric_limits<int>::max();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::uint32_t s = 0; s < n; ++s) {
    // Count paths level by level.
    dist[s][s] = 0;
    sigma[s][s] = 1.0;
    std::vector<std::uint32_t> frontier{s};
    for (int d = 0; !frontier.empty(); ++d) {
      std::vector<std::uint32_t> next;
      for (auto v : frontier)
        for (const auto& nb : g.neighbors(v)) {
          if (dist[s][nb.node] == inf) {
            dist[s][nb.node] = d + 1;
            next.push_back(nb.node);
          }
          if (dist[s][nb.node] == d + 1) sigma[s][nb.node] += sigma[s][v];
        }
      frontier = std::move(next);
    }
  }
  std::vector<double> b(n, 0.0);
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t = s + 1; t < n; ++t) {
      if (dist[s][t] == inf) continue;
      for (std::uint32_t v = 0; v < n; ++v) {
        if (v == s || v == t || dist[s][v] == inf || dist[v][t] == inf) continue;
        if (dist[s][v] + dist[v][t] == dist[s][t]) b[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  return b;
}

// Adjusted Rand index of two labelings.
inline double adjusted_rand_index(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> cells;
  std::map<std::uint32_t, double> rows, cols;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cells[{x[i], y[i]}] += 1;
    rows[x[i]] += 1;
    cols[y[i]] += 1;
  }
  auto c2 = [](double v) { return v * (v - 1) / 2; };
  double index = 0, a = 0, b = 0;
  for (const auto& [k, v] : cells) index += c2(v);
  for (const auto& [k, v] : rows) a += c2(v);
  for (const auto& [k, v] : cols) b += c2(v);
  const double expected = a * b / c2(static_cast<double>(x.size()));
  const double max_index = (a + b) / 2;
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

// Random collector -> spreader pairs with the given density.
inline Pairs random_pairs(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  Pairs p;
  for (arxivnet::NodeId i = 0; i < n; ++i)
    for (arxivnet::NodeId j = 0; j < n; ++j)
      if (i != j && keep(rng)) p.emplace_back(i, j);
  return p;
}

inline arxivnet::UndirectedGraph random_undirected(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<arxivnet::WeightedEdge> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (keep(rng)) e.push_back({i, j, 1.0});
  return arxivnet::UndirectedGraph(n, std::move(e));
}

}  // namespace oracle
