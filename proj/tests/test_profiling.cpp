#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "arxivnet/profiling.hpp"
#include "arxivnet/report.hpp"

using namespace arxivnet;

namespace {

UnixSeconds at(const char* ts) { return parse_rfc3339(ts).value(); }

struct Fixture {
  EventStore events;
  PaperCatalog catalog;

  void paper(const std::string& id, std::vector<std::string> cats) { catalog.add({id, std::move(cats), 0, ""}); }
  void tweet(const std::string& id, const std::string& user, std::vector<std::string> papers,
             const char* ts = "2016-01-01T00:00:00Z", const std::string& lang = "en") {
    events.mention_index.emplace(id, events.mentions.size());
    events.mentions.push_back({id, user, at(ts), std::move(papers), lang, std::nullopt});
  }
  void like(const std::string& actor, const std::string& tweet) {
    events.interactions.push_back({InteractionKind::like, actor, tweet, false});
  }
};

}  // namespace

TEST(MainCategory, FirstListed) {
  EXPECT_EQ(main_category({"x", {"cs.AI", "stat.ML"}, 0, ""}), "cs.AI");
  EXPECT_EQ(main_category({"x", {"quant-ph"}, 0, ""}), "quant-ph");
  EXPECT_EQ(main_category({"x", {"math.CT", "cs.LO"}, 0, ""}), "math.CT");
  EXPECT_THROW(main_category({"x", {}, 0, ""}), Error);
}

TEST(UserCategory, ModeAndLexicographicTie) {
  Fixture f;
  f.paper("1", {"cs.LG"});
  f.paper("2", {"cs.LG", "cs.CV"});
  f.paper("3", {"cs.CV"});
  f.paper("4", {"cs.CV"});
  f.tweet("t1", "u", {"1", "2", "3"});
  f.tweet("t2", "v", {"1", "2"});
  f.tweet("t3", "v", {"3", "4"});
  EXPECT_EQ(user_category("u", f.events, f.catalog, CategoryMode::spread), "cs.LG");
  EXPECT_EQ(user_category("v", f.events, f.catalog, CategoryMode::spread), "cs.CV");
  EXPECT_FALSE(user_category("u", f.events, f.catalog, CategoryMode::collect));
}

TEST(UserCategory, TieBreakAgreesWithExhaustiveOrdering) {
  // For every count vector over three codes with entries 0..3, the chosen
  // category is the smallest code among those with the maximal count.
  const std::vector<std::string> codes{"astro-ph.GA", "cs.CV", "cs.LG"};
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        std::map<std::string, std::size_t> counts;
        const int n[3] = {a, b, c};
        for (int k = 0; k < 3; ++k)
          if (n[k] > 0) counts[codes[static_cast<std::size_t>(k)]] = static_cast<std::size_t>(n[k]);
        std::optional<std::string> want;
        int best = 0;
        for (int k = 0; k < 3; ++k)
          if (n[k] > best) {
            best = n[k];
            want = codes[static_cast<std::size_t>(k)];
          }
        EXPECT_EQ(modal_value(counts), want);
      }
}

TEST(UserCategory, CollectUsesTargetTweetPapers) {
  Fixture f;
  f.paper("1", {"astro-ph.EP"});
  f.tweet("t1", "s", {"1", "missing"});
  f.like("c", "t1");
  std::size_t missing = 0;
  EXPECT_EQ(user_category("c", f.events, f.catalog, CategoryMode::collect, &missing), "astro-ph.EP");
  EXPECT_EQ(missing, 1u);
}

TEST(ProfileLanguage, Examples) {
  const LanguageDetector ja = [](std::string_view) { return std::optional<std::string>("ja"); };
  EXPECT_EQ(profile_language("機械学習の研究者 https://example.jp", ja), "ja");
  EXPECT_EQ(profile_language("", ja), "UD");
  EXPECT_EQ(profile_language("http://a.b", ja), "UD");
  const LanguageDetector broken = [](std::string_view) -> std::optional<std::string> { throw std::runtime_error("x"); };
  EXPECT_EQ(profile_language("hello", broken), "UD");
  const LanguageDetector junk = [](std::string_view) { return std::optional<std::string>("klingon"); };
  EXPECT_EQ(profile_language("hello", junk), "UD");
}

TEST(ProfileLanguage, DetectorSeesTextWithoutUrls) {
  std::string seen;
  const LanguageDetector spy = [&](std::string_view t) {
    seen = t;
    return std::optional<std::string>("en");
  };
  profile_language("see https://x.org/y and www.z.com now", spy);
  EXPECT_EQ(seen.find("http"), std::string::npos);
  EXPECT_EQ(seen.find("www"), std::string::npos);
}

TEST(ScriptDetector, Scripts) {
  EXPECT_EQ(script_detector("機械学習の研究者です"), "ja");
  EXPECT_EQ(script_detector("机器学习研究"), "zh");
  EXPECT_EQ(script_detector("기계 학습"), "ko");
  EXPECT_EQ(script_detector("Researcher in ML"), "en");
  EXPECT_EQ(script_detector("Исследователь"), "ru");
  EXPECT_FALSE(script_detector("12345 !!"));
}

TEST(MentionPeriod, Examples) {
  Fixture f;
  f.tweet("a1", "a", {"1"}, "2016-01-01T00:00:00Z");
  f.tweet("a2", "a", {"1"}, "2016-01-11T00:00:00Z");
  f.tweet("b1", "b", {"1"}, "2016-01-01T00:00:00Z");
  f.tweet("c1", "c", {"1"}, "2016-03-01T12:00:00Z");
  f.tweet("c2", "c", {"1"}, "2016-03-01T12:00:00Z");
  f.tweet("d1", "d", {"1"}, "2016-03-02T23:59:59Z");
  f.tweet("d2", "d", {"1"}, "2016-03-01T00:00:00Z");
  EXPECT_EQ(mention_period("a", f.events.mentions), 10);
  EXPECT_FALSE(mention_period("b", f.events.mentions));
  EXPECT_EQ(mention_period("c", f.events.mentions), 0);
  EXPECT_EQ(mention_period("d", f.events.mentions), 1);
}

TEST(PeriodStats, HandComputedPopulationSigma) {
  const auto s = period_stats({60, 10, 20}).value();
  EXPECT_DOUBLE_EQ(s.mean, 30.0);
  EXPECT_DOUBLE_EQ(s.median, 20.0);
  EXPECT_DOUBLE_EQ(s.max, 60.0);
  // ((20^2 + 10^2 + 30^2) / 3)^(1/2) = sqrt(1400 / 3)
  EXPECT_DOUBLE_EQ(s.stddev, std::sqrt(1400.0 / 3.0));
  EXPECT_NEAR(s.stddev, 21.60, 0.005);
  EXPECT_DOUBLE_EQ(period_stats({1, 2, 3, 10}).value().median, 2.5);
  EXPECT_FALSE(period_stats({}));
}

TEST(Rollup, PhysicsFamilyAndLegacyArchives) {
  for (const char* c : {"gr-qc", "nlin.AO", "nucl-th", "nucl-ex", "quant-ph", "physics.optics", "chao-dyn", "atom-ph"})
    EXPECT_EQ(rollup_category(c, CategoryView::archive), "physics*") << c;
  EXPECT_EQ(rollup_category("astro-ph.EP", CategoryView::archive), "astro-ph");
  EXPECT_EQ(rollup_category("hep-th", CategoryView::archive), "hep-th");
  EXPECT_EQ(rollup_category("cmp-lg", CategoryView::archive), "cs");
  EXPECT_EQ(rollup_category("astro-ph.EP", CategoryView::subcategory), "astro-ph.EP");
  EXPECT_EQ(rollup_category("quant-ph", CategoryView::subcategory), "quant-ph");
  EXPECT_EQ(rollup_category("bogus.XX", CategoryView::archive), "other");
}

TEST(CommunityProfiles, TopCountsAndMentionPeriods) {
  std::unordered_map<std::string, UserProfile> profiles;
  profiles["a"] = {"cs.LG", "cs.LG", "en", "en", 10};
  profiles["b"] = {"cs.LG", std::nullopt, "ja", "ja", 20};
  profiles["c"] = {std::nullopt, "cs.CV", "en", "UD", 60};
  profiles["d"] = {"math.CT", "math.CT", "en", "en", std::nullopt};
  Partition p{{0, 0, 0, 2}, 3};
  const auto rows = community_profiles(p, {"a", "b", "c", "d"}, profiles);
  ASSERT_EQ(rows.size(), 2u);  // community 1 is empty
  const auto& c0 = rows[0];
  EXPECT_EQ(c0.users, 3u);
  EXPECT_EQ(c0.spread_top, (std::vector<TopEntry>{{"cs.LG", 2}}));
  EXPECT_EQ(c0.spread_none, 1u);
  EXPECT_EQ(c0.cl_top, (std::vector<TopEntry>{{"en", 2}, {"ja", 1}}));
  ASSERT_TRUE(c0.mention_period);
  EXPECT_DOUBLE_EQ(c0.mention_period->mean, 30.0);
  EXPECT_EQ(rows[1].community, 2u);
  EXPECT_FALSE(rows[1].mention_period);
  EXPECT_EQ(report::format_top(c0.cl_top), "en: 2, ja: 1");
}

TEST(TimeSeries, CountsPerYearAndGroup) {
  Fixture f;
  f.paper("1", {"cs.CV"});
  f.paper("2", {"cs.CV"});
  f.paper("3", {"cs.LG"});
  f.paper("4", {"math.CO"});
  f.paper("5", {"astro-ph.EP"});
  f.paper("6", {"cs.CV", "cs.LG"});
  f.tweet("t1", "u", {"1"}, "2014-03-01T00:00:00Z");
  f.tweet("t2", "u", {"2"}, "2014-09-01T00:00:00Z");
  f.tweet("t3", "u", {"3", "4"}, "2015-01-01T00:00:00Z");
  f.tweet("t4", "v", {"5"}, "2016-01-01T00:00:00Z");
  f.tweet("t5", "v", {"1", "6"}, "2016-01-01T00:00:00Z");

  TimeSeriesOptions sub;
  sub.group_by = TimeSeriesGroup::subcategory;
  const auto s = mention_time_series(f.events, f.catalog, sub);
  EXPECT_EQ(s.counts.at({2014, "cs.CV"}), 2u);
  EXPECT_EQ(s.counts.at({2015, "cs.LG"}), 1u);
  EXPECT_EQ(s.counts.at({2015, "math.CO"}), 1u);
  EXPECT_EQ(s.counts.at({2016, "cs.CV"}), 1u);  // two cs.CV papers, one tweet

  const auto a = mention_time_series(f.events, f.catalog, {});
  EXPECT_EQ(a.counts.at({2016, "astro-ph"}), 1u);
  EXPECT_EQ(a.counts.at({2014, "cs"}), 2u);

  std::unordered_map<std::string, std::uint32_t> comm{{"u", 0}};
  TimeSeriesOptions by_comm;
  by_comm.group_by = TimeSeriesGroup::community;
  by_comm.communities = &comm;
  const auto c = mention_time_series(f.events, f.catalog, by_comm);
  EXPECT_EQ(c.counts.at({2014, "0"}), 2u);
  EXPECT_EQ(c.counts.size(), 2u);
}

TEST(UserProfiles, LanguageOverrideAndModalLang) {
  Fixture f;
  f.paper("1", {"cs.LG"});
  f.tweet("t1", "u", {"1"}, "2016-01-01T00:00:00Z", "ja");
  f.tweet("t2", "u", {"1"}, "2016-02-01T00:00:00Z", "UD");
  f.tweet("t3", "u", {"1"}, "2016-03-01T00:00:00Z", "UD");
  f.tweet("t4", "w", {"1"}, "2016-03-01T00:00:00Z", "en");
  UserBatch users;
  users.users.push_back({"w", "@w", "研究者です", std::string("es")});
  users.index.emplace("w", 0);
  const auto p = build_user_profiles({"u", "w", "x"}, f.events, f.catalog, users, script_detector);
  EXPECT_EQ(p.at("u").communication_lang, "ja");
  EXPECT_EQ(p.at("u").profile_lang, "UD");
  EXPECT_EQ(p.at("u").mention_period_days, 60);
  EXPECT_EQ(p.at("w").communication_lang, "es");
  EXPECT_EQ(p.at("w").profile_lang, "ja");
  EXPECT_EQ(p.at("x").communication_lang, "UD");
  EXPECT_FALSE(p.at("x").spread_category);
}
