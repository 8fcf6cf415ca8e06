#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "arxivnet/csv.hpp"
#include "arxivnet/diffusion_graph.hpp"
#include "arxivnet/error.hpp"

namespace arxivnet {

enum class HitsNorm { l1, l2 };

inline HitsNorm parse_hits_norm(std::string_view s) {
  if (s == "l1" || s == "L1") return HitsNorm::l1;
  if (s == "l2" || s == "L2") return HitsNorm::l2;
  throw Error("unknown norm '" + std::string(s) + "' (expected l1 or l2)");
}

inline std::string_view to_string(HitsNorm n) { return n == HitsNorm::l1 ? "l1" : "l2"; }

struct HitsOptions {
  double tolerance = 1e-10;  // max-abs change of a and h between iterations
  std::size_t max_iterations = 1000;
  HitsNorm norm = HitsNorm::l2;
  unsigned threads = 1;
};

struct HitsScores {
  std::vector<double> authority;
  std::vector<double> hub;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

/// State after each full iteration, handed to an optional observer.
struct HitsIteration {
  std::size_t iteration;
  std::span<const double> authority;
  std::span<const double> hub;
  double residual;
};

namespace detail {

// Neumaier-compensated sum of f(x); keeps unit norms within a few ulps on
// vectors with millions of entries.
template <typename F>
double compensated_sum(std::span<const double> v, F f) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    const double y = f(x), t = s + y;
    c += std::abs(s) >= std::abs(y) ? (s - t) + y : (y - t) + s;
    s = t;
  }
  return s + c;
}

}  // namespace detail

inline double vector_norm(std::span<const double> v, HitsNorm norm) {
  if (norm == HitsNorm::l1) return detail::compensated_sum(v, [](double x) { return std::abs(x); });
  return std::sqrt(detail::compensated_sum(v, [](double x) { return x * x; }));
}

namespace detail {

// out[k] = sum over idx[ptr[k]..ptr[k+1]) of in[idx[j]]. Each output entry
// is reduced sequentially, so the result does not depend on `threads`.
template <typename Neighbors>
void gather(std::size_t n, Neighbors&& neighbors, std::span<const double> in, std::span<double> out,
            unsigned threads) {
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      double s = 0.0;
      for (NodeId j : neighbors(static_cast<NodeId>(k))) s += in[j];
      out[k] = s;
    }
  };
  if (threads <= 1 || n < 4096) {
    run(0, n);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const auto lo = std::min(n, t * chunk), hi = std::min(n, lo + chunk);
    if (lo < hi) pool.emplace_back(run, lo, hi);
  }
}

inline void normalize(std::span<double> v, HitsNorm norm) {
  const double s = vector_norm(v, norm);
  if (s == 0.0) return;
  for (double& x : v) x /= s;
}

}  // namespace detail

/// Kleinberg's HITS by power iteration over D. Both vectors start at all
/// ones; each iteration computes a = D^T h, normalizes, then h = D a from the
/// new a, normalizes. Stops when the max-abs change of both vectors drops
/// below the tolerance, or after max_iterations with converged = false.
inline HitsScores compute_hits(const DiffusionGraph& graph, const HitsOptions& opts = {},
                               const std::function<void(const HitsIteration&)>& observer = {}) {
  if (graph.entry_count() == 0) throw Error("HITS: diffusion graph has no entries");
  if (!(opts.tolerance > 0.0)) throw Error("HITS: tolerance must be positive");
  if (opts.max_iterations < 1) throw Error("HITS: max_iterations must be at least 1");

  const auto n = graph.size();
  HitsScores r;
  r.authority.assign(n, 1.0);
  r.hub.assign(n, 1.0);
  std::vector<double> a_next(n), h_next(n);

  for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
    detail::gather(n, [&](NodeId j) { return graph.collectors_of(j); }, r.hub, a_next, opts.threads);
    detail::normalize(a_next, opts.norm);
    detail::gather(n, [&](NodeId i) { return graph.spreaders_of(i); }, a_next, h_next, opts.threads);
    detail::normalize(h_next, opts.norm);

    double change = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      change = std::max({change, std::abs(a_next[k] - r.authority[k]), std::abs(h_next[k] - r.hub[k])});
    r.authority.swap(a_next);
    r.hub.swap(h_next);
    r.iterations = it;
    r.residual = change;
    if (observer) observer(HitsIteration{it, r.authority, r.hub, change});
    if (change < opts.tolerance) {
      r.converged = true;
      break;
    }
  }
  return r;
}

/// User counts for the five authority/hub classes, percentages over all users.
struct RoleBreakdown {
  std::size_t total = 0;
  std::size_t authority_positive = 0;
  std::size_t hub_positive = 0;
  std::size_t both_positive = 0;
  std::size_t authority_only = 0;  // a > 0, h = 0
  std::size_t hub_only = 0;        // a = 0, h > 0

  double percent(std::size_t count) const {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(total);
  }

  bool consistent() const {
    return both_positive + authority_only == authority_positive && both_positive + hub_only == hub_positive &&
           authority_positive <= total && hub_positive <= total;
  }
};

inline constexpr double kDefaultZeroThreshold = 1e-15;

inline bool is_positive_score(double v, double zero_threshold = kDefaultZeroThreshold) { return v >= zero_threshold; }

inline RoleBreakdown classify_roles(const HitsScores& s, double zero_threshold = kDefaultZeroThreshold) {
  RoleBreakdown r;
  r.total = s.authority.size();
  for (std::size_t i = 0; i < r.total; ++i) {
    const bool a = is_positive_score(s.authority[i], zero_threshold);
    const bool h = is_positive_score(s.hub[i], zero_threshold);
    r.authority_positive += a;
    r.hub_positive += h;
    r.both_positive += a && h;
    r.authority_only += a && !h;
    r.hub_only += !a && h;
  }
  return r;
}

/// 1-based ranks by descending value; ties go to the smaller user id. Since
/// user indices follow user_id order, that is the smaller index.
inline std::vector<std::size_t> descending_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
  std::vector<std::size_t> rank(values.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k + 1;
  return rank;
}

inline void write_hits_csv(std::ostream& out, const DiffusionGraph& g, const HitsScores& s) {
  const auto ar = descending_ranks(s.authority), hr = descending_ranks(s.hub);
  csv::write_row(out, {"user_id", "authority", "hub", "authority_rank", "hub_rank"});
  for (std::size_t i = 0; i < g.size(); ++i)
    csv::write_row(out, {g.users().name(static_cast<NodeId>(i)), csv::format_double(s.authority[i]),
                         csv::format_double(s.hub[i]), std::to_string(ar[i]), std::to_string(hr[i])});
}

/// Reads scores back in the user order of `g`.
inline HitsScores read_hits_csv(std::istream& in, const DiffusionGraph& g) {
  const auto t = csv::parse(in);
  const auto uid = t.column("user_id"), a = t.column("authority"), h = t.column("hub");
  if (t.rows.size() != g.size()) throw Error("HITS scores do not cover the graph's users");
  HitsScores s;
  s.authority.assign(g.size(), 0.0);
  s.hub.assign(g.size(), 0.0);
  for (const auto& r : t.rows) {
    const auto i = g.users().at(r[uid]);
    s.authority[i] = csv::parse_number<double>(r[a]);
    s.hub[i] = csv::parse_number<double>(r[h]);
  }
  return s;
}

}  // namespace arxivnet
