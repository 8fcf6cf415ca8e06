#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "arxivnet/pipeline.hpp"
#include "arxivnet/synthetic.hpp"

using namespace arxivnet;
namespace fs = std::filesystem;

namespace {

class PipelineTest : public ::testing::Test {
protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("arxivnet-test-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_ / "in");
    const auto c = make_synthetic_corpus();
    write(root_ / "in/mentions.jsonl", c.mentions);
    write(root_ / "in/interactions.jsonl", c.interactions);
    write(root_ / "in/metadata.jsonl", c.metadata);
    write(root_ / "in/users.jsonl", c.users);
  }
  void TearDown() override { fs::remove_all(root_); }

  static void write(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

  PipelineConfig config(const std::string& out) const {
    PipelineConfig cfg;
    cfg.mentions_path = (root_ / "in/mentions.jsonl").string();
    cfg.interactions_path = (root_ / "in/interactions.jsonl").string();
    cfg.metadata_path = (root_ / "in/metadata.jsonl").string();
    cfg.users_path = (root_ / "in/users.jsonl").string();
    cfg.output_dir = (root_ / out).string();
    return cfg;
  }

  static std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(dir))
      if (e.is_regular_file()) files[fs::relative(e.path(), dir).generic_string()] = detail::read_file(e.path());
    return files;
  }

  fs::path root_;
};

}  // namespace

TEST_F(PipelineTest, HitsWithoutGraphNamesTheMissingStage) {
  const auto cfg = config("out");
  run_stage(Stage::ingest, cfg);
  try {
    run_stage(Stage::hits, cfg);
    FAIL() << "expected MissingArtifactError";
  } catch (const MissingArtifactError& e) {
    EXPECT_EQ(e.required_stage(), "graph");
    EXPECT_NE(std::string(e.what()).find("run `graph` first"), std::string::npos);
  }
  EXPECT_FALSE(fs::exists(root_ / "out/hits"));
}

TEST_F(PipelineTest, ReportEmitsAllTables) {
  const auto cfg = config("out");
  run_pipeline(cfg);
  for (const char* f : {"table1_dataset.csv", "table2_roles.csv", "network_summary.csv", "table3_categories.csv",
                        "table4_languages.csv", "table5_authority_top.csv", "table6_betweenness_top.csv",
                        "table7_mention_periods.csv", "fig2_mentions_by_archive.csv",
                        "fig3_mentions_cs_subcategories.csv", "fig6_period_vs_authority.csv",
                        "fig7_mentions_by_community.csv", "manifest.json"})
    EXPECT_TRUE(fs::exists(root_ / "out/report" / f)) << f;
  EXPECT_TRUE(fs::exists(root_ / "out/export/spreader_network.graphml"));
  EXPECT_TRUE(fs::exists(root_ / "out/config.json"));
  for (const auto& e : fs::directory_iterator(root_ / "out"))
    EXPECT_EQ(e.path().string().find(".staging"), std::string::npos);
}

TEST_F(PipelineTest, ManifestRecordsHashesAndRows) {
  const auto cfg = config("out");
  run_stage(Stage::ingest, cfg);
  const auto r = run_stage(Stage::graph, cfg);
  const auto m = nlohmann::json::parse(detail::read_file(root_ / "out/graph/manifest.json"));
  EXPECT_EQ(m, r.manifest);
  EXPECT_EQ(m.at("stage"), "graph");
  EXPECT_FALSE(m.at("config").contains("output_dir"));
  for (const auto& in : m.at("inputs"))
    EXPECT_EQ(in.at("sha256"), sha256_hex(detail::read_file(root_ / "out" / in.at("path").get<std::string>())));
  for (const auto& out : m.at("outputs")) {
    const auto content = detail::read_file(root_ / "out/graph" / out.at("file").get<std::string>());
    EXPECT_EQ(out.at("sha256"), sha256_hex(content));
  }
  std::istringstream users(detail::read_file(root_ / "out/graph/users.csv"));
  EXPECT_EQ(m.at("outputs")[0].at("rows").get<std::size_t>(), csv::parse(users).rows.size());
}

TEST_F(PipelineTest, RerunsAreByteIdentical) {
  run_pipeline(config("a"));
  const auto first = snapshot(root_ / "a");
  run_pipeline(config("a"));
  EXPECT_EQ(snapshot(root_ / "a"), first);
  run_pipeline(config("b"));
  EXPECT_EQ(snapshot(root_ / "b"), first);
}

TEST_F(PipelineTest, DownstreamStageCanBeRerunAlone) {
  auto cfg = config("out");
  run_pipeline(cfg);
  cfg.threshold = 0.9;
  run_stage(Stage::spreader_net, cfg);
  const auto info = nlohmann::json::parse(detail::read_file(root_ / "out/spreader-net/info.json"));
  EXPECT_EQ(info.at("threshold").get<double>(), 0.9);
  EXPECT_NO_THROW(run_stage(Stage::communities, cfg));
}

TEST_F(PipelineTest, InvalidConfigIsRejected) {
  auto cfg = config("out");
  cfg.threshold = 0.0;
  EXPECT_THROW(run_stage(Stage::ingest, cfg), Error);
  cfg = config("out");
  cfg.mentions_path = (root_ / "nope.jsonl").string();
  EXPECT_THROW(run_stage(Stage::ingest, cfg), Error);
}

TEST(Stages, NamesRoundTrip) {
  for (auto s : kAllStages) EXPECT_EQ(parse_stage(stage_name(s)), s);
  EXPECT_THROW(parse_stage("louvain"), Error);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Csv, QuotesAndParsesBack) {
  std::ostringstream out;
  csv::write_row(out, {"a", "b,c", "say \"hi\"", "line\nbreak"});
  csv::write_row(out, {"1", "2", "3", "4"});
  std::istringstream in(out.str());
  const auto t = csv::parse(in);
  EXPECT_EQ(t.header, (std::vector<std::string>{"a", "b,c", "say \"hi\"", "line\nbreak"}));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(csv::parse_number<double>(csv::format_double(0.1 + 0.2)), 0.1 + 0.2);
}
