#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "arxivnet/community.hpp"
#include "arxivnet/csv.hpp"
#include "arxivnet/error.hpp"
#include "arxivnet/undirected_graph.hpp"

namespace arxivnet {

struct BetweennessOptions {
  // Divide by (n_c - 1)(n_c - 2) / 2, n_c = size of the node's component.
  bool normalized = true;
  // Score only the largest connected component; everything else is 0.
  bool largest_component_only = false;
  unsigned threads = 1;
};

struct CentralityScores {
  std::vector<double> values;
  bool normalized = true;
};

namespace detail {

// Single-source dependency accumulation (Brandes) over hop-count paths.
// Adds delta(s, v) for every v != s into `acc`.
class BrandesPass {
public:
  explicit BrandesPass(std::size_t n) : sigma_(n), dist_(n, -1), delta_(n), order_(), queue_(n) {}

  void run(const UndirectedGraph& g, std::uint32_t s, std::span<double> acc) {
    order_.clear();
    std::size_t head = 0, tail = 0;
    sigma_[s] = 1.0;
    dist_[s] = 0;
    queue_[tail++] = s;
    while (head < tail) {
      const auto v = queue_[head++];
      order_.push_back(v);
      for (const auto& nb : g.neighbors(v)) {
        const auto w = nb.node;
        if (dist_[w] < 0) {
          dist_[w] = dist_[v] + 1;
          queue_[tail++] = w;
        }
        if (dist_[w] == dist_[v] + 1) sigma_[w] += sigma_[v];
      }
    }
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const auto w = *it;
      for (const auto& nb : g.neighbors(w)) {
        const auto v = nb.node;
        if (dist_[v] == dist_[w] - 1) delta_[v] += sigma_[v] / sigma_[w] * (1.0 + delta_[w]);
      }
      if (w != s) acc[w] += delta_[w];
    }
    for (auto v : order_) {
      sigma_[v] = 0.0;
      dist_[v] = -1;
      delta_[v] = 0.0;
    }
  }

private:
  std::vector<double> sigma_;
  std::vector<std::int64_t> dist_;
  std::vector<double> delta_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace detail

/// Freeman betweenness on an undirected graph with unweighted (hop-count)
/// shortest paths; endpoints are excluded. Sources are split into
/// contiguous blocks per thread and the block sums are added in block
/// order, so results are reproducible for a given thread count.
inline CentralityScores betweenness(const UndirectedGraph& g, const BetweennessOptions& opts = {}) {
  const auto n = g.node_count();
  CentralityScores out;
  out.normalized = opts.normalized;
  out.values.assign(n, 0.0);
  if (n < 3) return out;

  const auto comps = connected_components(g);
  std::vector<std::uint32_t> sources;
  for (std::uint32_t v = 0; v < n; ++v)
    if (!opts.largest_component_only || comps.component_of[v] == 0) sources.push_back(v);

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(sources.size())));
  std::vector<std::vector<double>> partial(threads, std::vector<double>(n, 0.0));
  auto work = [&](unsigned t) {
    detail::BrandesPass pass(n);
    const std::size_t chunk = (sources.size() + threads - 1) / threads;
    const auto lo = std::min(sources.size(), t * chunk), hi = std::min(sources.size(), lo + chunk);
    for (auto k = lo; k < hi; ++k) pass.run(g, sources[k], partial[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& p : partial)
    for (std::size_t v = 0; v < n; ++v) out.values[v] += p[v];

  // Each unordered pair was counted from both endpoints.
  for (auto& v : out.values) v /= 2.0;

  if (opts.normalized) {
    for (std::uint32_t v = 0; v < n; ++v) {
      const auto nc = static_cast<double>(comps.components[comps.component_of[v]].nodes);
      out.values[v] = nc < 3 ? 0.0 : out.values[v] / ((nc - 1.0) * (nc - 2.0) / 2.0);
    }
  }
  return out;
}

/// Per-user attributes shown next to a ranked value.
struct PersonInfo {
  std::string screen_name;
  std::optional<std::uint32_t> community;
  std::string communication_lang = "UD";
  std::string profile_lang = "UD";
};

struct KeyPersonRow {
  std::size_t rank = 0;
  std::string user_id;
  std::string screen_name;
  std::optional<std::uint32_t> community;
  std::string communication_lang;
  std::string profile_lang;
  double value = 0.0;
  std::optional<double> secondary_value;  // e.g. hub weight next to authority
  std::size_t cross_rank = 0;             // rank in the other measure
};

struct RankCandidate {
  std::string user_id;
  double value = 0.0;
  std::optional<double> secondary_value;
  std::size_t cross_rank = 0;
};

/// Top-k candidates by descending value, ties broken by user_id ascending.
/// k larger than the population returns everyone.
inline std::vector<KeyPersonRow> rank_key_people(std::vector<RankCandidate> candidates,
                                                 const std::unordered_map<std::string, PersonInfo>& people,
                                                 std::size_t k) {
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.user_id < b.user_id;
  });
  if (candidates.size() > k) candidates.resize(k);
  std::vector<KeyPersonRow> rows;
  rows.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& c = candidates[i];
    KeyPersonRow row;
    row.rank = i + 1;
    row.user_id = std::move(c.user_id);
    if (const auto it = people.find(row.user_id); it != people.end()) {
      row.screen_name = it->second.screen_name;
      row.community = it->second.community;
      row.communication_lang = it->second.communication_lang;
      row.profile_lang = it->second.profile_lang;
    } else {
      row.communication_lang = row.profile_lang = "UD";
    }
    row.value = c.value;
    row.secondary_value = c.secondary_value;
    row.cross_rank = c.cross_rank;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace arxivnet
