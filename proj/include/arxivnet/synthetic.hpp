#pragma once

// Generator for small corpora with planted spreader groups. Each group has
// its own spreaders, its own collector audience and its own research field;
// a few shared collectors touch every group so the diffusion graph stays
// connected. Also plants bot accounts (a > 0, h = 0) and native retweets.

#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arxivnet/time.hpp"

namespace arxivnet {

struct SyntheticOptions {
  std::size_t groups = 2;
  std::size_t spreaders_per_group = 8;
  std::size_t audience_per_group = 30;
  double audience_p = 0.95;  // chance an audience member likes a given spreader
  std::size_t shared_collectors = 1;
  std::size_t bots_per_group = 2;
  std::size_t tweets_per_spreader = 4;
  std::uint64_t seed = 7;
};

struct SyntheticCorpus {
  std::string mentions, interactions, metadata, users;
  std::map<std::string, std::size_t> planted;  // spreader user_id -> group
};

inline SyntheticCorpus make_synthetic_corpus(const SyntheticOptions& opt = {}) {
  using nlohmann::json;
  static const std::vector<std::vector<std::string>> fields = {
      {"cs.LG", "cs.CV", "stat.ML"}, {"astro-ph.EP", "astro-ph.GA", "gr-qc"}, {"quant-ph", "physics.chem-ph", "cs.ET"},
      {"math.CT", "cs.LO", "cs.PL"},  {"hep-th", "hep-ph", "math-ph"}};
  static const std::vector<std::string> langs = {"ja", "en", "en", "es", "en"};

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::ostringstream mentions, interactions, metadata, users;
  SyntheticCorpus out;

  auto name = [](const char* fmt, std::size_t a, std::size_t b) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    return std::string(buf);
  };
  std::size_t paper_seq = 0, tweet_seq = 0;
  auto next_paper = [&] {
    const std::size_t k = paper_seq++;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%02zu%02zu.%05zu", 15 + (k / 12) % 5, 1 + k % 12, 10 + k);
    return std::string(buf);
  };
  const UnixSeconds start = *parse_rfc3339("2012-01-01T00:00:00Z");
  const UnixSeconds span = *parse_rfc3339("2019-12-31T00:00:00Z") - start;

  // tweets[g][k] = tweet ids of spreader k in group g
  std::vector<std::vector<std::vector<std::string>>> tweets(opt.groups);
  std::vector<std::vector<std::string>> bot_tweets(opt.groups);

  auto post = [&](const std::string& user, std::size_t g, std::vector<std::string>& into) {
    const auto& cats = fields[g % fields.size()];
    for (std::size_t t = 0; t < opt.tweets_per_spreader; ++t) {
      const auto paper = next_paper();
      std::vector<std::string> c{cats[t % cats.size()], cats[(t + 1) % cats.size()]};
      metadata << json{{"id", paper}, {"categories", c}, {"submitted", "2016-05-01"}, {"title", "Paper " + paper}}.dump()
               << '\n';
      const auto tweet = "t" + std::to_string(++tweet_seq);
      const auto ts = start + static_cast<UnixSeconds>(unit(rng) * static_cast<double>(span));
      mentions << json{{"tweet_id", tweet},
                       {"user_id", user},
                       {"timestamp", format_rfc3339(ts)},
                       {"urls", {"https://arxiv.org/abs/" + paper + "v1"}},
                       {"lang", langs[g % langs.size()]}}
                      .dump()
               << '\n';
      into.push_back(tweet);
    }
  };
  auto like = [&](const std::string& actor, const std::string& tweet) {
    interactions << json{{"kind", "like"}, {"actor_user_id", actor}, {"target_tweet_id", tweet}}.dump() << '\n';
  };
  auto retweet_native = [&](const std::string& actor, const std::string& tweet) {
    const auto id = "t" + std::to_string(++tweet_seq);
    const auto ts = start + static_cast<UnixSeconds>(unit(rng) * static_cast<double>(span));
    mentions << json{{"tweet_id", id}, {"user_id", actor}, {"timestamp", format_rfc3339(ts)}, {"urls", json::array()},
                     {"lang", "en"}, {"retweeted_tweet_id", tweet}}
                    .dump()
             << '\n';
  };

  for (std::size_t g = 0; g < opt.groups; ++g) {
    tweets[g].resize(opt.spreaders_per_group);
    for (std::size_t k = 0; k < opt.spreaders_per_group; ++k) {
      const auto user = name("g%zu_s%02zu", g, k);
      out.planted.emplace(user, g);
      post(user, g, tweets[g][k]);
      const bool ja = langs[g % langs.size()] == "ja";
      users << json{{"user_id", user}, {"screen_name", "@" + user},
                    {"profile_text", ja ? "機械学習の研究者です https://example.jp" : "Researcher. https://example.org"}}
                   .dump()
            << '\n';
    }
    for (std::size_t k = 0; k < opt.bots_per_group; ++k) {
      const auto bot = name("g%zu_bot%02zu", g, k);
      post(bot, g, bot_tweets[g]);
      users << json{{"user_id", bot}, {"screen_name", "@" + bot}, {"profile_text", "Automated feed"}, {"lang", "en"}}.dump()
            << '\n';
    }
  }

  for (std::size_t g = 0; g < opt.groups; ++g) {
    // Spreaders collect from each other within the group.
    for (std::size_t k = 0; k < opt.spreaders_per_group; ++k)
      for (std::size_t j = 0; j < opt.spreaders_per_group; ++j)
        if (j != k) {
          const auto actor = name("g%zu_s%02zu", g, k);
          if ((j + k) % 3 == 0)
            retweet_native(actor, tweets[g][j].front());
          else
            like(actor, tweets[g][j].back());
        }
    for (std::size_t c = 0; c < opt.audience_per_group; ++c) {
      const auto actor = name("g%zu_c%02zu", g, c);
      for (std::size_t k = 0; k < opt.spreaders_per_group; ++k)
        if (unit(rng) < opt.audience_p) like(actor, tweets[g][k][c % opt.tweets_per_spreader]);
      if (!bot_tweets[g].empty()) like(actor, bot_tweets[g][c % bot_tweets[g].size()]);
    }
  }
  for (std::size_t s = 0; s < opt.shared_collectors; ++s) {
    const auto actor = "shared_c" + std::to_string(s);
    for (std::size_t g = 0; g < opt.groups; ++g)
      for (std::size_t k = 0; k < opt.spreaders_per_group; ++k) like(actor, tweets[g][k].front());
  }

  out.mentions = mentions.str();
  out.interactions = interactions.str();
  out.metadata = metadata.str();
  out.users = users.str();
  return out;
}

}  // namespace arxivnet
