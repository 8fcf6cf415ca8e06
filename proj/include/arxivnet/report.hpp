#pragma once

// CSV renderers for the report tables and figure data. Every function
// returns the complete file contents.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "arxivnet/centrality.hpp"
#include "arxivnet/community.hpp"
#include "arxivnet/csv.hpp"
#include "arxivnet/diffusion_graph.hpp"
#include "arxivnet/hits.hpp"
#include "arxivnet/profiling.hpp"
#include "arxivnet/spreader_network.hpp"

namespace arxivnet::report {

inline std::string pct(double v) { return csv::format_fixed(v, 1); }

inline std::string dataset_table(const DatasetSummary& s) {
  std::ostringstream out;
  csv::write_row(out, {"item", "count", "percent"});
  const auto row = [&](std::string_view item, std::size_t n, std::string p) {
    csv::write_row(out, {item, std::to_string(n), p});
  };
  row("Number of mentioned papers", s.mentioned_papers, "");
  row("Total number of mention tweets", s.mention_tweets, pct(s.mention_tweets ? 100.0 : 0.0));
  row("Number of liked tweets", s.liked_tweets, pct(s.liked_pct()));
  row("Number of retweeted tweets", s.retweeted_tweets, pct(s.retweeted_pct()));
  row("Total number of users", s.total_users, pct(s.total_users ? 100.0 : 0.0));
  row("Number of users mentioned", s.mentioning_users, pct(s.mentioning_pct()));
  return out.str();
}

inline std::string roles_table(const RoleBreakdown& r) {
  std::ostringstream out;
  csv::write_row(out, {"class", "count", "percent"});
  const auto row = [&](std::string_view cls, std::size_t n) {
    csv::write_row(out, {cls, std::to_string(n), pct(r.percent(n))});
  };
  row("Total number of users", r.total);
  row("a>0", r.authority_positive);
  row("h>0", r.hub_positive);
  row("a>0 & h>0", r.both_positive);
  row("a>0 & h=0", r.authority_only);
  row("a=0 & h>0", r.hub_only);
  return out.str();
}

struct NetworkSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double threshold = 0.0;
  std::size_t communities = 0;
  double modularity = 0.0;
  std::size_t components = 0;
  ComponentInfo largest;
};

inline std::string network_table(const NetworkSummary& s) {
  std::ostringstream out;
  csv::write_row(out, {"item", "value"});
  csv::write_row(out, {"threshold", csv::format_double(s.threshold)});
  csv::write_row(out, {"spreader nodes", std::to_string(s.nodes)});
  csv::write_row(out, {"spreader edges", std::to_string(s.edges)});
  csv::write_row(out, {"communities", std::to_string(s.communities)});
  csv::write_row(out, {"modularity", csv::format_double(s.modularity)});
  csv::write_row(out, {"connected components", std::to_string(s.components)});
  csv::write_row(out, {"largest component nodes", std::to_string(s.largest.nodes)});
  csv::write_row(out, {"largest component node percent", pct(s.largest.node_pct)});
  csv::write_row(out, {"largest component edges", std::to_string(s.largest.edges)});
  csv::write_row(out, {"largest component edge percent", pct(s.largest.edge_pct)});
  csv::write_row(out, {"largest component communities", std::to_string(s.largest.communities)});
  return out.str();
}

inline std::string format_top(const std::vector<TopEntry>& top) {
  std::string s;
  for (const auto& e : top) {
    if (!s.empty()) s += ", ";
    s += e.key + ": " + std::to_string(e.count);
  }
  return s;
}

inline std::string category_table(const std::vector<CommunityProfile>& profiles) {
  std::ostringstream out;
  csv::write_row(out, {"community", "users", "spread_categories", "collect_categories", "spread_none", "collect_none"});
  for (const auto& p : profiles)
    csv::write_row(out, {std::to_string(p.community), std::to_string(p.users), format_top(p.spread_top),
                         format_top(p.collect_top), std::to_string(p.spread_none), std::to_string(p.collect_none)});
  return out.str();
}

inline std::string language_table(const std::vector<CommunityProfile>& profiles) {
  std::ostringstream out;
  csv::write_row(out, {"community", "users", "cl", "pl"});
  for (const auto& p : profiles)
    csv::write_row(out, {std::to_string(p.community), std::to_string(p.users), format_top(p.cl_top), format_top(p.pl_top)});
  return out.str();
}

inline std::string mention_period_table(const std::vector<CommunityProfile>& profiles) {
  std::ostringstream out;
  csv::write_row(out, {"community", "users_with_period", "mean", "maximum", "median", "stddev"});
  for (const auto& p : profiles) {
    if (!p.mention_period) {
      csv::write_row(out, {std::to_string(p.community), "0", "", "", "", ""});
      continue;
    }
    const auto& s = *p.mention_period;
    csv::write_row(out, {std::to_string(p.community), std::to_string(s.count), csv::format_fixed(s.mean, 1),
                         csv::format_fixed(s.max, 1), csv::format_fixed(s.median, 1), csv::format_fixed(s.stddev, 1)});
  }
  return out.str();
}

inline std::string optional_community(const std::optional<std::uint32_t>& c) { return c ? std::to_string(*c) : "-"; }

inline std::string authority_ranking(const std::vector<KeyPersonRow>& rows) {
  std::ostringstream out;
  csv::write_row(out, {"rank", "user_id", "screen_name", "community", "cl", "pl", "authority", "hub", "hub_rank"});
  for (const auto& r : rows)
    csv::write_row(out, {std::to_string(r.rank), r.user_id, r.screen_name, optional_community(r.community),
                         r.communication_lang, r.profile_lang, csv::format_double(r.value),
                         r.secondary_value ? csv::format_double(*r.secondary_value) : "", std::to_string(r.cross_rank)});
  return out.str();
}

inline std::string betweenness_ranking(const std::vector<KeyPersonRow>& rows) {
  std::ostringstream out;
  csv::write_row(out, {"rank", "user_id", "screen_name", "community", "cl", "pl", "betweenness", "authority_rank"});
  for (const auto& r : rows)
    csv::write_row(out, {std::to_string(r.rank), r.user_id, r.screen_name, optional_community(r.community),
                         r.communication_lang, r.profile_lang, csv::format_double(r.value),
                         std::to_string(r.cross_rank)});
  return out.str();
}

inline std::string time_series(const TimeSeries& ts) {
  std::ostringstream out;
  csv::write_row(out, {"year", "group", "count"});
  for (const auto& [key, n] : ts.counts) csv::write_row(out, {std::to_string(key.first), key.second, std::to_string(n)});
  return out.str();
}

/// One row per spreader-network node: mention period against authority.
inline std::string period_vs_authority(const SpreaderNetwork& net, const DiffusionGraph& graph, const HitsScores& hits,
                                       const std::unordered_map<std::string, UserProfile>& profiles) {
  std::ostringstream out;
  csv::write_row(out, {"user_id", "mention_period_days", "authority"});
  for (auto node : net.nodes) {
    const auto& id = graph.users().name(node);
    const auto it = profiles.find(id);
    const auto period = it == profiles.end() ? std::nullopt : it->second.mention_period_days;
    csv::write_row(out, {id, period ? std::to_string(*period) : "", csv::format_double(hits.authority[node])});
  }
  return out.str();
}

}  // namespace arxivnet::report
