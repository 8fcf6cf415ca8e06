#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "arxivnet/csv.hpp"
#include "arxivnet/error.hpp"
#include "arxivnet/ingest.hpp"

namespace arxivnet {

using NodeId = std::uint32_t;

/// Dense, deterministic numbering of users: index order is user_id order.
class UserIndex {
public:
  UserIndex() = default;

  template <typename Range>
  explicit UserIndex(const Range& ids) : names_(std::begin(ids), std::end(ids)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    lookup_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) lookup_.emplace(names_[i], static_cast<NodeId>(i));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(NodeId i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<NodeId> find(std::string_view user_id) const {
    const auto it = lookup_.find(std::string(user_id));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  NodeId at(std::string_view user_id) const {
    if (auto i = find(user_id)) return *i;
    throw Error("unknown user " + std::string(user_id));
  }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> lookup_;
};

/// One collector -> spreader adjacency entry with its provenance counts.
struct DiffusionEntry {
  NodeId collector = 0;
  NodeId spreader = 0;
  std::uint32_t retweets = 0;
  std::uint32_t likes = 0;

  bool operator==(const DiffusionEntry&) const = default;
};

/// Binary adjacency D over N users, rows = collectors and columns =
/// spreaders: d(i, j) = 1 when collector i retweeted or liked a mention tweet
/// authored by j. Stored twice (row-major and column-major) so that both
/// D*x and D^T*x are gathers. Immutable once built.
class DiffusionGraph {
public:
  DiffusionGraph() = default;

  /// Builds from (collector, spreader) entries. Self-loops are dropped and
  /// repeated pairs are merged, summing their counts.
  DiffusionGraph(UserIndex users, std::vector<DiffusionEntry> entries,
                 std::vector<std::uint32_t> mention_counts = {})
      : users_(std::move(users)), mention_counts_(std::move(mention_counts)) {
    const auto n = users_.size();
    if (mention_counts_.empty()) mention_counts_.assign(n, 0);
    if (mention_counts_.size() != n) throw Error("mention count vector does not match user count");

    std::erase_if(entries, [](const DiffusionEntry& e) { return e.collector == e.spreader; });
    for (const auto& e : entries)
      if (e.collector >= n || e.spreader >= n) throw Error("diffusion entry out of range");
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return std::pair(a.collector, a.spreader) < std::pair(b.collector, b.spreader);
    });
    for (const auto& e : entries) {
      if (!entries_.empty() && entries_.back().collector == e.collector && entries_.back().spreader == e.spreader) {
        entries_.back().retweets += e.retweets;
        entries_.back().likes += e.likes;
      } else {
        entries_.push_back(e);
      }
    }

    row_ptr_.assign(n + 1, 0);
    col_ptr_.assign(n + 1, 0);
    for (const auto& e : entries_) {
      ++row_ptr_[e.collector + 1];
      ++col_ptr_[e.spreader + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
      row_ptr_[i + 1] += row_ptr_[i];
      col_ptr_[i + 1] += col_ptr_[i];
    }
    row_idx_.resize(entries_.size());
    col_idx_.resize(entries_.size());
    std::vector<std::size_t> fill(col_ptr_.begin(), col_ptr_.end() - 1);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      col_idx_[k] = entries_[k].spreader;
      row_idx_[fill[entries_[k].spreader]++] = entries_[k].collector;
    }
  }

  /// Convenience for synthetic graphs: node names are zero-padded indices.
  static DiffusionGraph from_pairs(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs) {
    std::vector<std::string> names(n);
    const auto width = std::to_string(n > 0 ? n - 1 : 0).size();
    for (std::size_t i = 0; i < n; ++i) {
      auto s = std::to_string(i);
      names[i] = std::string(width - s.size(), '0') + s;
    }
    std::vector<DiffusionEntry> entries;
    entries.reserve(pairs.size());
    for (const auto& [c, s] : pairs) entries.push_back({c, s, 0, 0});
    return DiffusionGraph(UserIndex(names), std::move(entries));
  }

  std::size_t size() const { return users_.size(); }
  std::size_t entry_count() const { return entries_.size(); }
  const UserIndex& users() const { return users_; }
  const std::vector<DiffusionEntry>& entries() const { return entries_; }
  const std::vector<std::uint32_t>& mention_counts() const { return mention_counts_; }

  /// Spreaders the collector interacted with, ascending.
  std::span<const NodeId> spreaders_of(NodeId collector) const {
    return {col_idx_.data() + row_ptr_[collector], row_ptr_[collector + 1] - row_ptr_[collector]};
  }
  /// Collector set of a spreader, ascending.
  std::span<const NodeId> collectors_of(NodeId spreader) const {
    return {row_idx_.data() + col_ptr_[spreader], col_ptr_[spreader + 1] - col_ptr_[spreader]};
  }

  bool has_entry(NodeId collector, NodeId spreader) const {
    const auto row = spreaders_of(collector);
    return std::binary_search(row.begin(), row.end(), spreader);
  }

private:
  UserIndex users_;
  std::vector<DiffusionEntry> entries_;  // row-major order
  std::vector<std::uint32_t> mention_counts_;
  std::vector<std::size_t> row_ptr_, col_ptr_;
  std::vector<NodeId> col_idx_, row_idx_;
};

/// Builds D from the event store. Users are every mention author, every
/// interaction actor and every entry of the user file.
inline DiffusionGraph build_diffusion_graph(const EventStore& events, const UserBatch* users = nullptr) {
  std::vector<std::string_view> ids;
  ids.reserve(events.mentions.size() + events.interactions.size());
  for (const auto& m : events.mentions) ids.push_back(m.user_id);
  for (const auto& e : events.interactions) ids.push_back(e.actor_user_id);
  if (users)
    for (const auto& u : users->users) ids.push_back(u.user_id);
  UserIndex index(ids);

  std::vector<std::uint32_t> mention_counts(index.size(), 0);
  for (const auto& m : events.mentions) ++mention_counts[index.at(m.user_id)];

  std::vector<DiffusionEntry> entries;
  entries.reserve(events.interactions.size());
  for (const auto& e : events.interactions) {
    const auto* target = events.find_mention(e.target_tweet_id);
    if (!target) continue;
    DiffusionEntry d{index.at(e.actor_user_id), index.at(target->user_id), 0, 0};
    (e.kind == InteractionKind::like ? d.likes : d.retweets) = 1;
    entries.push_back(d);
  }
  return DiffusionGraph(std::move(index), std::move(entries), std::move(mention_counts));
}

/// Counts behind the dataset overview table.
struct DatasetSummary {
  std::size_t mentioned_papers = 0;
  std::size_t mention_tweets = 0;
  std::size_t liked_tweets = 0;
  std::size_t retweeted_tweets = 0;
  std::size_t total_users = 0;
  std::size_t mentioning_users = 0;

  static double percent(std::size_t part, std::size_t base) {
    return base == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(base);
  }
  double liked_pct() const { return percent(liked_tweets, mention_tweets); }
  double retweeted_pct() const { return percent(retweeted_tweets, mention_tweets); }
  double mentioning_pct() const { return percent(mentioning_users, total_users); }
};

inline DatasetSummary dataset_summary(const DiffusionGraph& graph, const EventStore& events) {
  DatasetSummary s;
  std::unordered_set<std::string_view> papers, liked, retweeted;
  for (const auto& m : events.mentions)
    for (const auto& p : m.paper_ids) papers.insert(p);
  for (const auto& e : events.interactions)
    (e.kind == InteractionKind::like ? liked : retweeted).insert(e.target_tweet_id);
  s.mentioned_papers = papers.size();
  s.mention_tweets = events.mentions.size();
  s.liked_tweets = liked.size();
  s.retweeted_tweets = retweeted.size();
  s.total_users = graph.size();
  s.mentioning_users = static_cast<std::size_t>(
      std::count_if(graph.mention_counts().begin(), graph.mention_counts().end(), [](auto c) { return c > 0; }));
  return s;
}

// Snapshot: a user table (user_id, mention_tweets) plus an edge list
// (collector_id, spreader_id, retweets, likes).

inline void write_graph_users_csv(std::ostream& out, const DiffusionGraph& g) {
  csv::write_row(out, {"user_id", "mention_tweets"});
  for (std::size_t i = 0; i < g.size(); ++i)
    csv::write_row(out, {g.users().name(static_cast<NodeId>(i)), std::to_string(g.mention_counts()[i])});
}

inline void write_graph_edges_csv(std::ostream& out, const DiffusionGraph& g) {
  csv::write_row(out, {"collector_id", "spreader_id", "retweets", "likes"});
  for (const auto& e : g.entries())
    csv::write_row(out, {g.users().name(e.collector), g.users().name(e.spreader), std::to_string(e.retweets),
                         std::to_string(e.likes)});
}

inline DiffusionGraph read_graph_csv(std::istream& users_in, std::istream& edges_in) {
  const auto ut = csv::parse(users_in);
  const auto uid = ut.column("user_id"), umc = ut.column("mention_tweets");
  std::vector<std::string> names;
  for (const auto& r : ut.rows) names.push_back(r[uid]);
  UserIndex index(names);
  if (index.size() != names.size()) throw Error("graph snapshot: duplicate user ids");
  std::vector<std::uint32_t> counts(index.size(), 0);
  for (const auto& r : ut.rows) counts[index.at(r[uid])] = csv::parse_number<std::uint32_t>(r[umc]);

  const auto et = csv::parse(edges_in);
  const auto c = et.column("collector_id"), s = et.column("spreader_id"), rt = et.column("retweets"),
             lk = et.column("likes");
  std::vector<DiffusionEntry> entries;
  entries.reserve(et.rows.size());
  for (const auto& r : et.rows)
    entries.push_back({index.at(r[c]), index.at(r[s]), csv::parse_number<std::uint32_t>(r[rt]),
                       csv::parse_number<std::uint32_t>(r[lk])});
  return DiffusionGraph(std::move(index), std::move(entries), std::move(counts));
}

}  // namespace arxivnet
