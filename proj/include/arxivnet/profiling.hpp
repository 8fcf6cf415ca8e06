#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arxivnet/categories.hpp"
#include "arxivnet/community.hpp"
#include "arxivnet/error.hpp"
#include "arxivnet/ingest.hpp"
#include "arxivnet/language.hpp"
#include "arxivnet/time.hpp"

namespace arxivnet {

/// The first listed category of a paper.
inline const std::string& main_category(const ArxivRecord& record) {
  if (record.categories.empty()) throw Error("paper " + record.paper_id + " has no categories");
  return record.categories.front();
}

/// Most frequent key; ties go to the lexicographically smallest key.
inline std::optional<std::string> modal_value(const std::map<std::string, std::size_t>& counts) {
  std::optional<std::string> best;
  std::size_t best_n = 0;
  for (const auto& [k, n] : counts)  // ascending keys, so strict > keeps the smallest
    if (n > best_n) {
      best = k;
      best_n = n;
    }
  return best;
}

enum class CategoryMode { spread, collect };

namespace detail {

template <typename Fn>
void for_each_attributed_paper(std::string_view user_id, const EventStore& events, CategoryMode mode, Fn&& fn) {
  if (mode == CategoryMode::spread) {
    for (const auto& m : events.mentions)
      if (m.user_id == user_id)
        for (const auto& p : m.paper_ids) fn(p);
  } else {
    for (const auto& e : events.interactions)
      if (e.actor_user_id == user_id)
        if (const auto* m = events.find_mention(e.target_tweet_id))
          for (const auto& p : m->paper_ids) fn(p);
  }
}

}  // namespace detail

/// Modal main category over the papers a user mentioned (spread) or
/// retweeted/liked (collect). Papers without metadata are skipped and
/// added to `missing` when given.
inline std::optional<std::string> user_category(std::string_view user_id, const EventStore& events,
                                                const PaperCatalog& catalog, CategoryMode mode,
                                                std::size_t* missing = nullptr) {
  std::map<std::string, std::size_t> counts;
  detail::for_each_attributed_paper(user_id, events, mode, [&](const std::string& paper) {
    if (const auto* rec = catalog.find(paper))
      ++counts[main_category(*rec)];
    else if (missing)
      ++*missing;
  });
  return modal_value(counts);
}

/// Whole days between a user's first and last mention tweet; undefined
/// with fewer than two mentions.
inline std::optional<std::int64_t> mention_period(std::string_view user_id, const std::vector<MentionEvent>& mentions) {
  std::size_t n = 0;
  UnixSeconds lo = 0, hi = 0;
  for (const auto& m : mentions) {
    if (m.user_id != user_id) continue;
    lo = n == 0 ? m.timestamp : std::min(lo, m.timestamp);
    hi = n == 0 ? m.timestamp : std::max(hi, m.timestamp);
    ++n;
  }
  if (n < 2) return std::nullopt;
  return (hi - lo) / 86400;
}

struct UserProfile {
  std::optional<std::string> spread_category;
  std::optional<std::string> collect_category;
  std::string communication_lang = "UD";
  std::string profile_lang = "UD";
  std::optional<std::int64_t> mention_period_days;

  bool operator==(const UserProfile&) const = default;
};

struct ProfileStats {
  std::size_t missing_papers = 0;  // referenced papers absent from the metadata
};

/// Profiles for every listed user in one pass over the events. CL is the
/// account-level language from the user file when present, otherwise the
/// most frequent decided tweet language (UD if none).
inline std::unordered_map<std::string, UserProfile> build_user_profiles(const std::vector<std::string>& user_ids,
                                                                        const EventStore& events,
                                                                        const PaperCatalog& catalog,
                                                                        const UserBatch& users,
                                                                        const LanguageDetector& detector,
                                                                        ProfileStats* stats = nullptr) {
  struct Acc {
    std::map<std::string, std::size_t> spread, collect, langs;
    std::size_t mentions = 0;
    UnixSeconds first = 0, last = 0;
  };
  std::unordered_map<std::string, Acc> acc;
  acc.reserve(user_ids.size());
  for (const auto& id : user_ids) acc.try_emplace(id);

  std::size_t missing = 0;
  auto tally = [&](std::map<std::string, std::size_t>& into, const std::vector<std::string>& papers) {
    for (const auto& p : papers) {
      if (const auto* rec = catalog.find(p))
        ++into[main_category(*rec)];
      else
        ++missing;
    }
  };
  for (const auto& m : events.mentions) {
    const auto it = acc.find(m.user_id);
    if (it == acc.end()) continue;
    auto& a = it->second;
    tally(a.spread, m.paper_ids);
    if (m.lang_code != "UD") ++a.langs[m.lang_code];
    a.first = a.mentions == 0 ? m.timestamp : std::min(a.first, m.timestamp);
    a.last = a.mentions == 0 ? m.timestamp : std::max(a.last, m.timestamp);
    ++a.mentions;
  }
  for (const auto& e : events.interactions) {
    const auto it = acc.find(e.actor_user_id);
    if (it == acc.end()) continue;
    if (const auto* m = events.find_mention(e.target_tweet_id)) tally(it->second.collect, m->paper_ids);
  }

  std::unordered_map<std::string, UserProfile> out;
  out.reserve(user_ids.size());
  for (const auto& id : user_ids) {
    const auto& a = acc.at(id);
    UserProfile p;
    p.spread_category = modal_value(a.spread);
    p.collect_category = modal_value(a.collect);
    const auto* rec = users.find(id);
    if (rec && rec->communication_lang)
      p.communication_lang = *rec->communication_lang;
    else
      p.communication_lang = modal_value(a.langs).value_or("UD");
    p.profile_lang = rec ? profile_language(rec->profile_text, detector) : "UD";
    if (a.mentions >= 2) p.mention_period_days = (a.last - a.first) / 86400;
    out.emplace(id, std::move(p));
  }
  if (stats) stats->missing_papers += missing;
  return out;
}

struct TopEntry {
  std::string key;
  std::size_t count = 0;

  bool operator==(const TopEntry&) const = default;
};

/// Largest counts first, ties by key.
inline std::vector<TopEntry> top_entries(const std::map<std::string, std::size_t>& counts, std::size_t k) {
  std::vector<TopEntry> v;
  for (const auto& [key, n] : counts) v.push_back({key, n});
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.count > b.count; });
  if (v.size() > k) v.resize(k);
  return v;
}

/// Mean, maximum, median and population standard deviation.
struct PeriodStats {
  std::size_t count = 0;
  double mean = 0.0;
  double max = 0.0;
  double median = 0.0;
  double stddev = 0.0;
};

inline std::optional<PeriodStats> period_stats(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  PeriodStats s;
  s.count = values.size();
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  s.max = values.back();
  s.median = s.count % 2 ? values[s.count / 2] : (values[s.count / 2 - 1] + values[s.count / 2]) / 2.0;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(s.count));
  return s;
}

struct CommunityProfile {
  std::uint32_t community = 0;
  std::size_t users = 0;
  std::vector<TopEntry> spread_top, collect_top, cl_top, pl_top;
  std::size_t spread_none = 0;  // members without a spread category
  std::size_t collect_none = 0;
  std::map<std::string, std::size_t> spread_counts, collect_counts;
  std::optional<PeriodStats> mention_period;
};

/// Per-community tabulations for the partition's members. `member_ids[i]`
/// is the user id of partition node i. Empty communities are skipped.
inline std::vector<CommunityProfile> community_profiles(const Partition& partition,
                                                        const std::vector<std::string>& member_ids,
                                                        const std::unordered_map<std::string, UserProfile>& profiles,
                                                        std::size_t top_k = 3) {
  if (member_ids.size() != partition.community.size()) throw Error("partition and member ids are misaligned");
  struct Acc {
    std::size_t users = 0, spread_none = 0, collect_none = 0;
    std::map<std::string, std::size_t> spread, collect, cl, pl;
    std::vector<double> periods;
  };
  std::vector<Acc> acc(partition.count);
  for (std::size_t i = 0; i < member_ids.size(); ++i) {
    const auto it = profiles.find(member_ids[i]);
    if (it == profiles.end()) throw Error("no profile for user " + member_ids[i]);
    const auto& p = it->second;
    auto& a = acc[partition.community[i]];
    ++a.users;
    if (p.spread_category) ++a.spread[*p.spread_category]; else ++a.spread_none;
    if (p.collect_category) ++a.collect[*p.collect_category]; else ++a.collect_none;
    ++a.cl[p.communication_lang];
    ++a.pl[p.profile_lang];
    if (p.mention_period_days) a.periods.push_back(static_cast<double>(*p.mention_period_days));
  }
  std::vector<CommunityProfile> out;
  for (std::uint32_t c = 0; c < acc.size(); ++c) {
    auto& a = acc[c];
    if (a.users == 0) continue;
    CommunityProfile cp;
    cp.community = c;
    cp.users = a.users;
    cp.spread_top = top_entries(a.spread, top_k);
    cp.collect_top = top_entries(a.collect, top_k);
    cp.cl_top = top_entries(a.cl, top_k);
    cp.pl_top = top_entries(a.pl, top_k);
    cp.spread_none = a.spread_none;
    cp.collect_none = a.collect_none;
    cp.spread_counts = std::move(a.spread);
    cp.collect_counts = std::move(a.collect);
    cp.mention_period = period_stats(std::move(a.periods));
    out.push_back(std::move(cp));
  }
  return out;
}

enum class TimeSeriesGroup { archive, subcategory, community };

struct TimeSeries {
  std::map<std::pair<int, std::string>, std::size_t> counts;  // (year, group) -> mention tweets
  std::size_t missing_papers = 0;
  std::size_t unknown_categories = 0;  // codes sent to "other"
};

struct TimeSeriesOptions {
  TimeSeriesGroup group_by = TimeSeriesGroup::archive;
  // Sub-category view only: keep codes of this archive (e.g. "cs"); empty keeps all.
  std::string archive_filter;
  // Community view: user_id -> community. Authors outside it are skipped.
  const std::unordered_map<std::string, std::uint32_t>* communities = nullptr;
};

/// Mention tweets per UTC calendar year and group. A tweet adds one to each
/// distinct group among its papers.
inline TimeSeries mention_time_series(const EventStore& events, const PaperCatalog& catalog,
                                      const TimeSeriesOptions& opts) {
  if (opts.group_by == TimeSeriesGroup::community && !opts.communities)
    throw Error("community time series needs a partition");
  TimeSeries ts;
  std::vector<std::string> groups;
  for (const auto& m : events.mentions) {
    const int year = utc_year(m.timestamp);
    groups.clear();
    if (opts.group_by == TimeSeriesGroup::community) {
      const auto it = opts.communities->find(m.user_id);
      if (it == opts.communities->end()) continue;
      groups.push_back(std::to_string(it->second));
    } else {
      for (const auto& p : m.paper_ids) {
        const auto* rec = catalog.find(p);
        if (!rec) {
          ++ts.missing_papers;
          continue;
        }
        const auto& code = main_category(*rec);
        auto view = opts.group_by == TimeSeriesGroup::archive ? CategoryView::archive : CategoryView::subcategory;
        auto g = rollup_category(code, view);
        if (g == kOtherGroup) ++ts.unknown_categories;
        if (view == CategoryView::subcategory && !opts.archive_filter.empty() && archive_of(code) != opts.archive_filter)
          continue;
        groups.push_back(std::move(g));
      }
      std::sort(groups.begin(), groups.end());
      groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    }
    for (auto& g : groups) ++ts.counts[{year, g}];
  }
  return ts;
}

}  // namespace arxivnet
