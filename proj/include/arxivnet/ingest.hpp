#pragma once

// Line-delimited JSON readers for the four input files (mentions,
// interactions, arXiv metadata, users). Each reader validates records,
// normalizes arXiv identifiers and keeps per-stream accounting such that
//   accepted + rejected + duplicates == total_lines
// holds for every stream. Blank lines are ignored and not counted.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arxivnet/arxiv_id.hpp"
#include "arxivnet/error.hpp"
#include "arxivnet/time.hpp"

namespace arxivnet {

using json = nlohmann::json;

/// A tweet that links at least one arXiv paper.
struct MentionEvent {
  std::string tweet_id;
  std::string user_id;
  UnixSeconds timestamp = 0;
  std::vector<std::string> paper_ids;  // normalized, unique, source order
  std::string lang_code;               // ISO 639-1 or "UD"
  std::optional<std::string> is_retweet_of;

  bool operator==(const MentionEvent&) const = default;
};

/// A native retweet record from the mention file. It is not a mention in its
/// own right: the retweeter acts as a collector of the original tweet.
struct NativeRetweet {
  std::string tweet_id;
  std::string user_id;
  UnixSeconds timestamp = 0;
  std::string original_tweet_id;  // resolved to a MentionEvent

  bool operator==(const NativeRetweet&) const = default;
};

enum class InteractionKind { retweet, like };

inline std::string_view to_string(InteractionKind k) { return k == InteractionKind::like ? "like" : "retweet"; }

inline std::optional<InteractionKind> parse_interaction_kind(std::string_view s) {
  if (s == "retweet") return InteractionKind::retweet;
  if (s == "like") return InteractionKind::like;
  return std::nullopt;
}

struct InteractionEvent {
  InteractionKind kind = InteractionKind::like;
  std::string actor_user_id;
  std::string target_tweet_id;  // always a MentionEvent tweet id after resolution
  bool through_retweet = false;  // raw target was a native retweet of target_tweet_id

  bool operator==(const InteractionEvent&) const = default;
};

struct ArxivRecord {
  std::string paper_id;
  std::vector<std::string> categories;  // first element is the main category
  std::int64_t submitted_days = 0;      // days since epoch
  std::string title;

  bool operator==(const ArxivRecord&) const = default;
};

struct UserRecord {
  std::string user_id;
  std::string screen_name;
  std::string profile_text;
  std::optional<std::string> communication_lang;  // account-level override of CL

  bool operator==(const UserRecord&) const = default;
};

/// Per-stream accounting. Only the counters relevant to a stream are nonzero.
struct IngestStats {
  std::size_t total_lines = 0;
  std::size_t accepted = 0;
  std::size_t malformed = 0;
  std::size_t unknown_target = 0;
  std::size_t duplicates = 0;

  // mention streams
  std::size_t mention_tweets = 0;
  std::size_t native_retweets = 0;
  std::size_t mentioned_papers = 0;
  std::size_t non_arxiv_urls = 0;

  // interaction streams
  std::size_t likes = 0;
  std::size_t retweets = 0;
  std::size_t capped_liked_tweets = 0;
  std::size_t capped_retweeted_tweets = 0;
  bool cap_warning = false;

  std::size_t rejected() const { return malformed + unknown_target; }

  bool operator==(const IngestStats&) const = default;
};

inline json to_json(const IngestStats& s) {
  return json{{"total_lines", s.total_lines},
              {"accepted", s.accepted},
              {"rejected", s.rejected()},
              {"malformed", s.malformed},
              {"unknown_target", s.unknown_target},
              {"duplicates", s.duplicates},
              {"mention_tweets", s.mention_tweets},
              {"native_retweets", s.native_retweets},
              {"mentioned_papers", s.mentioned_papers},
              {"non_arxiv_urls", s.non_arxiv_urls},
              {"likes", s.likes},
              {"retweets", s.retweets},
              {"capped_liked_tweets", s.capped_liked_tweets},
              {"capped_retweeted_tweets", s.capped_retweeted_tweets},
              {"cap_warning", s.cap_warning}};
}

struct IngestOptions {
  bool strict = false;  // throw ParseError on the first malformed line
  // Credit likes/retweets of a native retweet to the original mention tweet.
  // When false such interactions are dropped as unknown targets.
  bool credit_retweet_interactions = true;
  // Source API limit on retrieved retweets/likes per tweet.
  std::size_t interaction_cap = 100;
};

/// ISO 639-1 code or "UD". Lowercases, keeps the primary subtag and maps the
/// Twitter "und" marker (and empty values) to "UD".
inline std::optional<std::string> normalize_lang_code(std::string_view raw) {
  std::string s(detail::trim(raw));
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s.empty() || s == "und" || s == "ud") return std::string("UD");
  if (const auto sep = s.find_first_of("-_"); sep != std::string::npos) s.resize(sep);
  if (s.size() == 2 && std::islower(static_cast<unsigned char>(s[0])) &&
      std::islower(static_cast<unsigned char>(s[1])))
    return s;
  return std::nullopt;
}

inline bool is_lang_code(std::string_view s) {
  return s == "UD" || (s.size() == 2 && std::islower(static_cast<unsigned char>(s[0])) &&
                       std::islower(static_cast<unsigned char>(s[1])));
}

namespace detail {

class MalformedRecord : public std::exception {
public:
  explicit MalformedRecord(std::string msg) : msg_(std::move(msg)) {}
  const char* what() const noexcept override { return msg_.c_str(); }

private:
  std::string msg_;
};

// String or integer key (tweet ids are often exported as numbers).
inline std::string key_field(const json& rec, const char* name, bool required = true) {
  const auto it = rec.find(name);
  if (it == rec.end() || it->is_null()) {
    if (required) throw MalformedRecord(std::string("missing field ") + name);
    return {};
  }
  if (it->is_string()) {
    auto v = it->get<std::string>();
    if (v.empty() && required) throw MalformedRecord(std::string("empty field ") + name);
    return v;
  }
  if (it->is_number_integer()) return it->dump();
  throw MalformedRecord(std::string("field ") + name + " must be a string");
}

inline std::string string_field(const json& rec, const char* name) {
  const auto it = rec.find(name);
  if (it == rec.end() || it->is_null()) return {};
  if (!it->is_string()) throw MalformedRecord(std::string("field ") + name + " must be a string");
  return it->get<std::string>();
}

// Runs `handle(record, line_no)` for each non-blank line; a MalformedRecord or
// JSON error counts the line as malformed (or throws in strict mode).
template <typename Handler>
void for_each_record(std::istream& in, IngestStats& stats, bool strict, Handler&& handle) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty()) continue;
    ++stats.total_lines;
    try {
      const json rec = json::parse(line);
      if (!rec.is_object()) throw MalformedRecord("record is not an object");
      handle(rec, line_no);
    } catch (const MalformedRecord& e) {
      ++stats.malformed;
      if (strict) throw ParseError(line_no, e.what());
    } catch (const json::exception& e) {
      ++stats.malformed;
      if (strict) throw ParseError(line_no, e.what());
    }
  }
}

}  // namespace detail

struct MentionBatch {
  std::vector<MentionEvent> mentions;  // original mention tweets, source order
  std::vector<NativeRetweet> retweets;
  IngestStats stats;
  std::unordered_map<std::string, std::size_t> mention_index;  // tweet_id -> mentions[i]
  std::unordered_map<std::string, std::size_t> retweet_index;  // tweet_id -> retweets[i]
};

/// Parses the mention file. Records with `retweeted_tweet_id` become native
/// retweets; a retweet whose original is absent from the stream is rejected
/// as an unknown target.
inline MentionBatch parse_mention_stream(std::istream& in, const IngestOptions& opts = {}) {
  MentionBatch out;
  auto& stats = out.stats;
  std::unordered_set<std::string> seen;
  std::vector<std::pair<NativeRetweet, std::size_t>> pending;  // with line number

  detail::for_each_record(in, stats, opts.strict, [&](const json& rec, std::size_t line_no) {
    MentionEvent ev;
    ev.tweet_id = detail::key_field(rec, "tweet_id");
    ev.user_id = detail::key_field(rec, "user_id");
    const auto ts = parse_rfc3339(detail::string_field(rec, "timestamp"));
    if (!ts) throw detail::MalformedRecord("bad timestamp");
    ev.timestamp = *ts;
    const auto lang = normalize_lang_code(detail::string_field(rec, "lang"));
    if (!lang) throw detail::MalformedRecord("bad lang code");
    ev.lang_code = *lang;
    auto rt = detail::key_field(rec, "retweeted_tweet_id", false);
    if (!rt.empty()) ev.is_retweet_of = std::move(rt);

    std::size_t non_arxiv = 0;
    if (const auto it = rec.find("urls"); it != rec.end() && !it->is_null()) {
      if (!it->is_array()) throw detail::MalformedRecord("urls must be a list");
      for (const auto& u : *it) {
        if (!u.is_string()) throw detail::MalformedRecord("urls must hold strings");
        if (auto id = normalize_arxiv_id(u.get<std::string>())) {
          if (std::find(ev.paper_ids.begin(), ev.paper_ids.end(), *id) == ev.paper_ids.end())
            ev.paper_ids.push_back(std::move(*id));
        } else {
          ++non_arxiv;
        }
      }
    }
    if (!ev.is_retweet_of && ev.paper_ids.empty()) throw detail::MalformedRecord("no arXiv URL");

    if (!seen.insert(ev.tweet_id).second) {
      ++stats.duplicates;
      return;
    }
    stats.non_arxiv_urls += non_arxiv;
    if (ev.is_retweet_of) {
      pending.push_back({NativeRetweet{ev.tweet_id, ev.user_id, ev.timestamp, *ev.is_retweet_of}, line_no});
    } else {
      out.mention_index.emplace(ev.tweet_id, out.mentions.size());
      out.mentions.push_back(std::move(ev));
    }
  });

  // Retweets may precede their original in the file; resolve once all
  // mentions are known. A retweet of a retweet credits the original.
  std::unordered_map<std::string, std::string> retweet_target;
  for (const auto& [rt, line] : pending) retweet_target.emplace(rt.tweet_id, rt.original_tweet_id);
  for (auto& [rt, line] : pending) {
    std::string target = rt.original_tweet_id;
    for (int hops = 0; hops < 8 && !out.mention_index.count(target); ++hops) {
      const auto it = retweet_target.find(target);
      if (it == retweet_target.end()) break;
      target = it->second;
    }
    if (!out.mention_index.count(target)) {
      ++stats.unknown_target;
      continue;
    }
    rt.original_tweet_id = target;
    out.retweet_index.emplace(rt.tweet_id, out.retweets.size());
    out.retweets.push_back(std::move(rt));
  }

  std::unordered_set<std::string_view> papers;
  for (const auto& m : out.mentions)
    for (const auto& p : m.paper_ids) papers.insert(p);
  stats.mention_tweets = out.mentions.size();
  stats.native_retweets = out.retweets.size();
  stats.mentioned_papers = papers.size();
  stats.accepted = out.mentions.size() + out.retweets.size();
  return out;
}

struct InteractionBatch {
  std::vector<InteractionEvent> interactions;
  IngestStats stats;
};

/// Parses the interaction file against the mentions it may reference.
inline InteractionBatch parse_interaction_stream(std::istream& in, const MentionBatch& mentions,
                                                 const IngestOptions& opts = {}) {
  InteractionBatch out;
  auto& stats = out.stats;
  std::map<std::pair<std::string, InteractionKind>, std::size_t> per_target;

  detail::for_each_record(in, stats, opts.strict, [&](const json& rec, std::size_t) {
    const auto kind = parse_interaction_kind(detail::string_field(rec, "kind"));
    if (!kind) throw detail::MalformedRecord("kind must be retweet or like");
    InteractionEvent ev;
    ev.kind = *kind;
    ev.actor_user_id = detail::key_field(rec, "actor_user_id");
    ev.target_tweet_id = detail::key_field(rec, "target_tweet_id");
    ++per_target[{ev.target_tweet_id, ev.kind}];

    if (!mentions.mention_index.count(ev.target_tweet_id)) {
      const auto rt = mentions.retweet_index.find(ev.target_tweet_id);
      if (rt == mentions.retweet_index.end() || !opts.credit_retweet_interactions) {
        ++stats.unknown_target;
        return;
      }
      ev.target_tweet_id = mentions.retweets[rt->second].original_tweet_id;
      ev.through_retweet = true;
    }
    (ev.kind == InteractionKind::like ? stats.likes : stats.retweets)++;
    out.interactions.push_back(std::move(ev));
  });

  for (const auto& [key, n] : per_target) {
    if (n < opts.interaction_cap) continue;
    (key.second == InteractionKind::like ? stats.capped_liked_tweets : stats.capped_retweeted_tweets)++;
    stats.cap_warning = true;
  }
  stats.accepted = out.interactions.size();
  return out;
}

/// Paper metadata keyed by normalized id, in source order.
class PaperCatalog {
public:
  const ArxivRecord* find(std::string_view paper_id) const {
    const auto it = index_.find(std::string(paper_id));
    return it == index_.end() ? nullptr : &records_[it->second];
  }
  const std::vector<ArxivRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  // Returns false if the id is already present.
  bool add(ArxivRecord rec) {
    if (!index_.emplace(rec.paper_id, records_.size()).second) return false;
    records_.push_back(std::move(rec));
    return true;
  }

private:
  std::vector<ArxivRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct MetadataBatch {
  PaperCatalog catalog;
  IngestStats stats;
};

/// Parses the metadata file. `categories` is either a list or a
/// whitespace-separated string; its order is preserved.
inline MetadataBatch parse_arxiv_metadata(std::istream& in, const IngestOptions& opts = {}) {
  MetadataBatch out;
  detail::for_each_record(in, out.stats, opts.strict, [&](const json& rec, std::size_t) {
    ArxivRecord r;
    const auto id = normalize_arxiv_id(detail::key_field(rec, "id"));
    if (!id) throw detail::MalformedRecord("bad arXiv id");
    r.paper_id = *id;
    const auto cats = rec.find("categories");
    if (cats == rec.end() || cats->is_null()) throw detail::MalformedRecord("missing categories");
    auto push = [&](std::string_view c) {
      c = detail::trim(c);
      if (!c.empty() && std::find(r.categories.begin(), r.categories.end(), c) == r.categories.end())
        r.categories.emplace_back(c);
    };
    if (cats->is_string()) {
      const auto s = cats->get<std::string>();
      std::size_t pos = 0;
      while (pos < s.size()) {
        const auto end = s.find_first_of(" \t,", pos);
        push(std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos));
        if (end == std::string::npos) break;
        pos = end + 1;
      }
    } else if (cats->is_array()) {
      for (const auto& c : *cats) {
        if (!c.is_string()) throw detail::MalformedRecord("categories must hold strings");
        push(c.get<std::string>());
      }
    } else {
      throw detail::MalformedRecord("categories must be a list or string");
    }
    if (r.categories.empty()) throw detail::MalformedRecord("empty categories");
    const auto submitted = detail::string_field(rec, "submitted");
    if (!submitted.empty()) {
      const auto d = parse_iso_date(submitted.substr(0, 10));
      if (!d) throw detail::MalformedRecord("bad submitted date");
      r.submitted_days = *d;
    }
    r.title = detail::string_field(rec, "title");
    if (!out.catalog.add(std::move(r))) ++out.stats.duplicates;
  });
  out.stats.accepted = out.catalog.size();
  return out;
}

struct UserBatch {
  std::vector<UserRecord> users;
  std::unordered_map<std::string, std::size_t> index;
  IngestStats stats;

  const UserRecord* find(std::string_view user_id) const {
    const auto it = index.find(std::string(user_id));
    return it == index.end() ? nullptr : &users[it->second];
  }
};

inline UserBatch parse_user_stream(std::istream& in, const IngestOptions& opts = {}) {
  UserBatch out;
  detail::for_each_record(in, out.stats, opts.strict, [&](const json& rec, std::size_t) {
    UserRecord u;
    u.user_id = detail::key_field(rec, "user_id");
    u.screen_name = detail::string_field(rec, "screen_name");
    u.profile_text = detail::string_field(rec, "profile_text");
    if (const auto it = rec.find("lang"); it != rec.end() && !it->is_null()) {
      const auto lang = normalize_lang_code(detail::string_field(rec, "lang"));
      if (!lang) throw detail::MalformedRecord("bad lang code");
      u.communication_lang = *lang;
    }
    if (!out.index.emplace(u.user_id, out.users.size()).second) {
      ++out.stats.duplicates;
      return;
    }
    out.users.push_back(std::move(u));
  });
  out.stats.accepted = out.users.size();
  return out;
}

/// Mentions plus every collector action (explicit interactions and native
/// retweets), all targeting original mention tweets.
struct EventStore {
  std::vector<MentionEvent> mentions;
  std::vector<InteractionEvent> interactions;
  std::unordered_map<std::string, std::size_t> mention_index;

  const MentionEvent* find_mention(std::string_view tweet_id) const {
    const auto it = mention_index.find(std::string(tweet_id));
    return it == mention_index.end() ? nullptr : &mentions[it->second];
  }
};

inline EventStore make_event_store(const MentionBatch& mentions, const InteractionBatch& interactions) {
  EventStore store;
  store.mentions = mentions.mentions;
  store.mention_index = mentions.mention_index;
  store.interactions.reserve(mentions.retweets.size() + interactions.interactions.size());
  for (const auto& rt : mentions.retweets)
    store.interactions.push_back({InteractionKind::retweet, rt.user_id, rt.original_tweet_id, false});
  store.interactions.insert(store.interactions.end(), interactions.interactions.begin(),
                            interactions.interactions.end());
  return store;
}

// Writers emit the same schema the readers accept, so normalized artifacts
// can be re-ingested. Keys are written in sorted order.

inline void write_mentions_jsonl(std::ostream& out, const std::vector<MentionEvent>& mentions) {
  for (const auto& m : mentions) {
    json rec{{"tweet_id", m.tweet_id},
             {"user_id", m.user_id},
             {"timestamp", format_rfc3339(m.timestamp)},
             {"urls", m.paper_ids},
             {"lang", m.lang_code}};
    if (m.is_retweet_of) rec["retweeted_tweet_id"] = *m.is_retweet_of;
    out << rec.dump() << '\n';
  }
}

inline void write_interactions_jsonl(std::ostream& out, const std::vector<InteractionEvent>& events) {
  for (const auto& e : events)
    out << json{{"kind", to_string(e.kind)}, {"actor_user_id", e.actor_user_id}, {"target_tweet_id", e.target_tweet_id}}
               .dump()
        << '\n';
}

inline void write_metadata_jsonl(std::ostream& out, const PaperCatalog& catalog) {
  for (const auto& r : catalog.records())
    out << json{{"id", r.paper_id},
                {"categories", r.categories},
                {"submitted", format_iso_date(r.submitted_days)},
                {"title", r.title}}
               .dump()
        << '\n';
}

inline void write_users_jsonl(std::ostream& out, const std::vector<UserRecord>& users) {
  for (const auto& u : users) {
    json rec{{"user_id", u.user_id}, {"screen_name", u.screen_name}, {"profile_text", u.profile_text}};
    if (u.communication_lang) rec["lang"] = *u.communication_lang;
    out << rec.dump() << '\n';
  }
}

}  // namespace arxivnet
