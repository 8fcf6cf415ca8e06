#pragma once

// Stage-wise pipeline. Every stage reads the persisted artifacts of its
// upstream stages from the output directory and writes its own directory
// atomically (staging directory + rename) together with a manifest that
// records the config, the hashes of everything it read and of everything it
// wrote. Outputs are a pure function of (inputs, config).

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arxivnet/centrality.hpp"
#include "arxivnet/community.hpp"
#include "arxivnet/csv.hpp"
#include "arxivnet/diffusion_graph.hpp"
#include "arxivnet/error.hpp"
#include "arxivnet/graphml.hpp"
#include "arxivnet/hits.hpp"
#include "arxivnet/ingest.hpp"
#include "arxivnet/language.hpp"
#include "arxivnet/profiling.hpp"
#include "arxivnet/report.hpp"
#include "arxivnet/sha256.hpp"
#include "arxivnet/spreader_network.hpp"

namespace arxivnet {

namespace fs = std::filesystem;

enum class Stage { ingest, graph, hits, spreader_net, communities, centrality, profile, report, export_graphml };

inline constexpr std::array<Stage, 9> kAllStages = {Stage::ingest,      Stage::graph,      Stage::hits,
                                                    Stage::spreader_net, Stage::communities, Stage::centrality,
                                                    Stage::profile,     Stage::report,     Stage::export_graphml};

inline std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::ingest: return "ingest";
    case Stage::graph: return "graph";
    case Stage::hits: return "hits";
    case Stage::spreader_net: return "spreader-net";
    case Stage::communities: return "communities";
    case Stage::centrality: return "centrality";
    case Stage::profile: return "profile";
    case Stage::report: return "report";
    case Stage::export_graphml: return "export";
  }
  return "";
}

inline Stage parse_stage(std::string_view name) {
  for (auto s : kAllStages)
    if (stage_name(s) == name) return s;
  throw Error("unknown stage '" + std::string(name) + "'");
}

inline constexpr const char* kOutputDirEnv = "ARXIVNET_OUT";

inline std::string default_output_dir() {
  const char* env = std::getenv(kOutputDirEnv);
  return env && *env ? env : "arxivnet-out";
}

struct PipelineConfig {
  std::string mentions_path;
  std::string interactions_path;
  std::string metadata_path;  // optional
  std::string users_path;     // optional
  std::string output_dir = default_output_dir();

  bool strict = false;
  bool credit_retweet_interactions = true;

  double threshold = 0.5;
  double hits_tolerance = 1e-10;
  std::size_t hits_max_iterations = 1000;
  HitsNorm hits_norm = HitsNorm::l2;
  double zero_threshold = kDefaultZeroThreshold;

  std::uint64_t louvain_seed = 0;
  double resolution = 1.0;
  bool weighted = true;

  bool betweenness_normalized = true;
  bool betweenness_largest_component = false;

  std::size_t top_k = 20;             // key-person table length
  std::size_t report_communities = 10;  // communities listed in tables, 0 = all
  unsigned threads = 1;

  void validate() const {
    if (!(threshold > 0.0 && threshold <= 1.0)) throw Error("threshold must lie in (0, 1]");
    if (!(hits_tolerance > 0.0)) throw Error("hits tolerance must be positive");
    if (hits_max_iterations < 1) throw Error("hits max iterations must be at least 1");
    if (!(zero_threshold > 0.0)) throw Error("zero threshold must be positive");
    if (!(resolution > 0.0)) throw Error("resolution must be positive");
    if (top_k < 1) throw Error("top-k must be at least 1");
    if (threads < 1) throw Error("threads must be at least 1");
    if (output_dir.empty()) throw Error("output directory is empty");
  }

  /// Everything that determines outputs. The output directory is left out
  /// so identical runs into different directories produce identical files.
  nlohmann::json to_json() const {
    return nlohmann::json{{"inputs",
                           {{"mentions", mentions_path},
                            {"interactions", interactions_path},
                            {"metadata", metadata_path},
                            {"users", users_path}}},
                          {"strict", strict},
                          {"credit_retweet_interactions", credit_retweet_interactions},
                          {"threshold", threshold},
                          {"hits", {{"tolerance", hits_tolerance}, {"max_iterations", hits_max_iterations},
                                    {"norm", to_string(hits_norm)}, {"zero_threshold", zero_threshold}}},
                          {"louvain", {{"seed", louvain_seed}, {"resolution", resolution}, {"weighted", weighted}}},
                          {"betweenness", {{"normalized", betweenness_normalized},
                                           {"largest_component_only", betweenness_largest_component}}},
                          {"report", {{"top_k", top_k}, {"communities", report_communities}}}};
  }
};

/// Result of one stage run.
struct StageResult {
  Stage stage;
  fs::path directory;
  nlohmann::json manifest;
};

namespace detail {

inline std::size_t count_rows(std::string_view file, std::string_view content) {
  auto lines = static_cast<std::size_t>(std::count(content.begin(), content.end(), '\n'));
  if (!content.empty() && content.back() != '\n') ++lines;
  if (file.ends_with(".csv") && lines > 0) --lines;  // header
  return lines;
}

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& p, std::string_view content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + p.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failed: " + p.string());
}

inline void write_file_atomic(const fs::path& p, std::string_view content) {
  auto tmp = p;
  tmp += ".tmp";
  write_file(tmp, content);
  fs::rename(tmp, p);
}

// Reads upstream artifacts and remembers their hashes for the manifest.
class Workspace {
public:
  Workspace(const PipelineConfig& cfg, const LanguageDetector& detector) : cfg_(cfg), root_(cfg.output_dir), detector_(detector) {}

  const PipelineConfig& config() const { return cfg_; }
  const fs::path& root() const { return root_; }
  const LanguageDetector& detector() const { return detector_; }

  std::string read(Stage from, std::string_view file) {
    const auto dir = root_ / stage_name(from);
    if (!fs::exists(dir / "manifest.json")) throw MissingArtifactError(std::string(stage_name(from)), dir.string());
    const auto path = dir / file;
    auto content = read_file(path);
    inputs_.push_back({{"path", (fs::path(stage_name(from)) / file).generic_string()}, {"sha256", sha256_hex(content)}});
    return content;
  }

  std::string read_raw(const std::string& path, std::string_view role) {
    if (path.empty()) return {};
    if (!fs::exists(path)) throw Error(std::string(role) + " file not found: " + path);
    auto content = read_file(path);
    inputs_.push_back({{"path", path}, {"role", role}, {"sha256", sha256_hex(content)}});
    return content;
  }

  nlohmann::json take_inputs() { return std::exchange(inputs_, nlohmann::json::array()); }

private:
  const PipelineConfig& cfg_;
  fs::path root_;
  const LanguageDetector& detector_;
  nlohmann::json inputs_ = nlohmann::json::array();
};

using StageFiles = std::vector<std::pair<std::string, std::string>>;

inline StageResult commit_stage(Workspace& ws, Stage stage, const StageFiles& files) {
  const auto name = std::string(stage_name(stage));
  const auto final_dir = ws.root() / name;
  const auto tmp_dir = ws.root() / (name + ".staging");
  fs::create_directories(ws.root());
  fs::remove_all(tmp_dir);
  fs::create_directories(tmp_dir);

  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& [file, content] : files) {
    write_file(tmp_dir / file, content);
    outputs.push_back({{"file", file}, {"sha256", sha256_hex(content)}, {"rows", count_rows(file, content)}});
  }
  nlohmann::json manifest{{"stage", name}, {"config", ws.config().to_json()}, {"inputs", ws.take_inputs()},
                          {"outputs", outputs}};
  write_file(tmp_dir / "manifest.json", manifest.dump(2) + "\n");
  fs::remove_all(final_dir);
  fs::rename(tmp_dir, final_dir);
  write_file_atomic(ws.root() / "config.json", ws.config().to_json().dump(2) + "\n");
  return {stage, final_dir, std::move(manifest)};
}

// ---- artifact loaders -------------------------------------------------------

struct IngestData {
  MentionBatch mentions;
  InteractionBatch interactions;
  EventStore events;
  MetadataBatch metadata;
  UserBatch users;
};

inline IngestData load_ingest(Workspace& ws) {
  IngestOptions strict;
  strict.strict = true;
  IngestData d;
  std::istringstream m(ws.read(Stage::ingest, "mentions.jsonl"));
  d.mentions = parse_mention_stream(m, strict);
  std::istringstream i(ws.read(Stage::ingest, "interactions.jsonl"));
  d.interactions = parse_interaction_stream(i, d.mentions, strict);
  d.events = make_event_store(d.mentions, d.interactions);
  std::istringstream md(ws.read(Stage::ingest, "metadata.jsonl"));
  d.metadata = parse_arxiv_metadata(md, strict);
  std::istringstream u(ws.read(Stage::ingest, "users.jsonl"));
  d.users = parse_user_stream(u, strict);
  return d;
}

inline DiffusionGraph load_graph(Workspace& ws) {
  std::istringstream u(ws.read(Stage::graph, "users.csv"));
  std::istringstream e(ws.read(Stage::graph, "edges.csv"));
  return read_graph_csv(u, e);
}

inline HitsScores load_hits(Workspace& ws, const DiffusionGraph& g) {
  std::istringstream in(ws.read(Stage::hits, "scores.csv"));
  return read_hits_csv(in, g);
}

inline SpreaderNetwork load_spreader_net(Workspace& ws, const DiffusionGraph& g) {
  const auto info = nlohmann::json::parse(ws.read(Stage::spreader_net, "info.json"));
  std::istringstream n(ws.read(Stage::spreader_net, "nodes.csv"));
  std::istringstream e(ws.read(Stage::spreader_net, "edges.csv"));
  return read_spreader_network_csv(n, e, g.users(), info.at("threshold").get<double>());
}

inline std::vector<std::string> node_ids(const SpreaderNetwork& net, const DiffusionGraph& g) {
  std::vector<std::string> ids;
  ids.reserve(net.nodes.size());
  for (auto node : net.nodes) ids.push_back(g.users().name(node));
  return ids;
}

struct CommunityData {
  Partition partition;
  std::vector<std::uint32_t> component_of;
  double modularity = 0.0;
};

inline CommunityData load_communities(Workspace& ws, const SpreaderNetwork& net, const DiffusionGraph& g) {
  std::istringstream in(ws.read(Stage::communities, "partition.csv"));
  const auto t = csv::parse(in);
  const auto info = nlohmann::json::parse(ws.read(Stage::communities, "info.json"));
  const auto uid = t.column("user_id"), cid = t.column("community_id"), comp = t.column("component_id");
  const auto ids = node_ids(net, g);
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t k = 0; k < ids.size(); ++k) pos.emplace(ids[k], k);
  if (t.rows.size() != ids.size()) throw Error("partition does not cover the spreader network");
  CommunityData d;
  d.partition.community.assign(ids.size(), 0);
  d.component_of.assign(ids.size(), 0);
  for (const auto& r : t.rows) {
    const auto it = pos.find(r[uid]);
    if (it == pos.end()) throw Error("partition names unknown spreader " + r[uid]);
    d.partition.community[it->second] = csv::parse_number<std::uint32_t>(r[cid]);
    d.component_of[it->second] = csv::parse_number<std::uint32_t>(r[comp]);
  }
  d.partition.count = info.at("communities").get<std::size_t>();
  d.modularity = info.at("modularity").get<double>();
  return d;
}

inline CentralityScores load_centrality(Workspace& ws, const SpreaderNetwork& net, const DiffusionGraph& g) {
  std::istringstream in(ws.read(Stage::centrality, "betweenness.csv"));
  const auto t = csv::parse(in);
  const auto uid = t.column("user_id"), b = t.column("betweenness");
  const auto ids = node_ids(net, g);
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t k = 0; k < ids.size(); ++k) pos.emplace(ids[k], k);
  CentralityScores s;
  s.values.assign(ids.size(), 0.0);
  s.normalized = ws.config().betweenness_normalized;
  for (const auto& r : t.rows) s.values.at(pos.at(r[uid])) = csv::parse_number<double>(r[b]);
  return s;
}

inline std::string profiles_csv(const std::vector<std::string>& ids,
                                const std::unordered_map<std::string, UserProfile>& profiles) {
  std::ostringstream out;
  csv::write_row(out, {"user_id", "spread_category", "collect_category", "communication_lang", "profile_lang",
                       "mention_period_days"});
  for (const auto& id : ids) {
    const auto& p = profiles.at(id);
    csv::write_row(out, {id, p.spread_category.value_or(""), p.collect_category.value_or(""), p.communication_lang,
                         p.profile_lang, p.mention_period_days ? std::to_string(*p.mention_period_days) : ""});
  }
  return out.str();
}

inline std::unordered_map<std::string, UserProfile> load_profiles(Workspace& ws) {
  std::istringstream in(ws.read(Stage::profile, "user_profiles.csv"));
  const auto t = csv::parse(in);
  const auto uid = t.column("user_id"), sc = t.column("spread_category"), cc = t.column("collect_category"),
             cl = t.column("communication_lang"), pl = t.column("profile_lang"), mp = t.column("mention_period_days");
  std::unordered_map<std::string, UserProfile> out;
  for (const auto& r : t.rows) {
    UserProfile p;
    if (!r[sc].empty()) p.spread_category = r[sc];
    if (!r[cc].empty()) p.collect_category = r[cc];
    p.communication_lang = r[cl];
    p.profile_lang = r[pl];
    if (!r[mp].empty()) p.mention_period_days = csv::parse_number<std::int64_t>(r[mp]);
    out.emplace(r[uid], std::move(p));
  }
  return out;
}

// ---- stages -----------------------------------------------------------------

inline StageFiles run_ingest(Workspace& ws) {
  const auto& cfg = ws.config();
  if (cfg.mentions_path.empty() || cfg.interactions_path.empty())
    throw Error("ingest needs --mentions and --interactions");
  IngestOptions opts;
  opts.strict = cfg.strict;
  opts.credit_retweet_interactions = cfg.credit_retweet_interactions;

  std::istringstream m(ws.read_raw(cfg.mentions_path, "mentions"));
  const auto mentions = parse_mention_stream(m, opts);
  std::istringstream i(ws.read_raw(cfg.interactions_path, "interactions"));
  const auto interactions = parse_interaction_stream(i, mentions, opts);
  std::istringstream md(ws.read_raw(cfg.metadata_path, "metadata"));
  const auto metadata = parse_arxiv_metadata(md, opts);
  std::istringstream u(ws.read_raw(cfg.users_path, "users"));
  const auto users = parse_user_stream(u, opts);
  const auto events = make_event_store(mentions, interactions);

  std::ostringstream mo, io, mdo, uo;
  write_mentions_jsonl(mo, events.mentions);
  write_interactions_jsonl(io, events.interactions);
  write_metadata_jsonl(mdo, metadata.catalog);
  write_users_jsonl(uo, users.users);
  const nlohmann::json stats{{"mentions", to_json(mentions.stats)},
                             {"interactions", to_json(interactions.stats)},
                             {"metadata", to_json(metadata.stats)},
                             {"users", to_json(users.stats)}};
  return {{"mentions.jsonl", mo.str()},
          {"interactions.jsonl", io.str()},
          {"metadata.jsonl", mdo.str()},
          {"users.jsonl", uo.str()},
          {"stats.json", stats.dump(2) + "\n"}};
}

inline StageFiles run_graph(Workspace& ws) {
  const auto d = load_ingest(ws);
  const auto g = build_diffusion_graph(d.events, &d.users);
  std::ostringstream u, e;
  write_graph_users_csv(u, g);
  write_graph_edges_csv(e, g);
  return {{"users.csv", u.str()}, {"edges.csv", e.str()}, {"summary.csv", report::dataset_table(dataset_summary(g, d.events))}};
}

inline StageFiles run_hits(Workspace& ws) {
  const auto& cfg = ws.config();
  const auto g = load_graph(ws);
  HitsOptions opts;
  opts.tolerance = cfg.hits_tolerance;
  opts.max_iterations = cfg.hits_max_iterations;
  opts.norm = cfg.hits_norm;
  opts.threads = cfg.threads;
  const auto s = compute_hits(g, opts);
  std::ostringstream out;
  write_hits_csv(out, g, s);
  const nlohmann::json info{{"iterations", s.iterations}, {"residual", s.residual}, {"converged", s.converged}};
  return {{"scores.csv", out.str()},
          {"roles.csv", report::roles_table(classify_roles(s, cfg.zero_threshold))},
          {"info.json", info.dump(2) + "\n"}};
}

inline StageFiles run_spreader_net(Workspace& ws) {
  const auto& cfg = ws.config();
  const auto g = load_graph(ws);
  const auto s = load_hits(ws, g);
  const auto net = build_spreader_network(collector_sets(g, s, cfg.zero_threshold), cfg.threshold);
  std::ostringstream n, e;
  write_spreader_nodes_csv(n, net, g, s);
  write_spreader_edges_csv(e, net, g);
  const nlohmann::json info{{"threshold", cfg.threshold}, {"nodes", net.nodes.size()}, {"edges", net.graph.edge_count()}};
  return {{"nodes.csv", n.str()}, {"edges.csv", e.str()}, {"info.json", info.dump(2) + "\n"}};
}

inline StageFiles run_communities(Workspace& ws) {
  const auto& cfg = ws.config();
  const auto g = load_graph(ws);
  const auto net = load_spreader_net(ws, g);
  LouvainOptions opts;
  opts.seed = cfg.louvain_seed;
  opts.resolution = cfg.resolution;
  opts.weighted = cfg.weighted;
  const auto lv = louvain(net.graph, opts);
  const auto comps = connected_components(net.graph, &lv.partition);

  std::ostringstream p, c;
  csv::write_row(p, {"user_id", "community_id", "component_id"});
  for (std::size_t k = 0; k < net.nodes.size(); ++k)
    csv::write_row(p, {g.users().name(net.nodes[k]), std::to_string(lv.partition.community[k]),
                       std::to_string(comps.component_of[k])});
  csv::write_row(c, {"component_id", "nodes", "node_percent", "edges", "edge_percent", "communities"});
  for (std::size_t k = 0; k < comps.components.size(); ++k) {
    const auto& ci = comps.components[k];
    csv::write_row(c, {std::to_string(k), std::to_string(ci.nodes), report::pct(ci.node_pct), std::to_string(ci.edges),
                       report::pct(ci.edge_pct), std::to_string(ci.communities)});
  }
  const nlohmann::json info{{"communities", lv.partition.count},
                            {"modularity", lv.modularity},
                            {"levels", lv.levels},
                            {"components", comps.components.size()}};
  return {{"partition.csv", p.str()}, {"components.csv", c.str()}, {"info.json", info.dump(2) + "\n"}};
}

inline StageFiles run_centrality(Workspace& ws) {
  const auto& cfg = ws.config();
  const auto g = load_graph(ws);
  const auto s = load_hits(ws, g);
  const auto net = load_spreader_net(ws, g);
  BetweennessOptions opts;
  opts.normalized = cfg.betweenness_normalized;
  opts.largest_component_only = cfg.betweenness_largest_component;
  opts.threads = cfg.threads;
  const auto b = betweenness(net.graph, opts);
  const auto b_rank = descending_ranks(b.values);
  const auto a_rank = descending_ranks(s.authority);
  std::ostringstream out;
  csv::write_row(out, {"user_id", "betweenness", "betweenness_rank", "authority_rank"});
  for (std::size_t k = 0; k < net.nodes.size(); ++k)
    csv::write_row(out, {g.users().name(net.nodes[k]), csv::format_double(b.values[k]), std::to_string(b_rank[k]),
                         std::to_string(a_rank[net.nodes[k]])});
  return {{"betweenness.csv", out.str()}};
}

inline StageFiles run_profile(Workspace& ws) {
  const auto d = load_ingest(ws);
  const auto g = load_graph(ws);
  ProfileStats stats;
  const auto profiles =
      build_user_profiles(g.users().names(), d.events, d.metadata.catalog, d.users, ws.detector(), &stats);
  const nlohmann::json info{{"users", profiles.size()}, {"missing_papers", stats.missing_papers}};
  return {{"user_profiles.csv", profiles_csv(g.users().names(), profiles)}, {"info.json", info.dump(2) + "\n"}};
}

inline std::unordered_map<std::string, PersonInfo> person_table(
    const DiffusionGraph& g, const UserBatch& users, const std::unordered_map<std::string, UserProfile>& profiles,
    const std::unordered_map<std::string, std::uint32_t>& community_of) {
  std::unordered_map<std::string, PersonInfo> people;
  for (const auto& id : g.users().names()) {
    PersonInfo p;
    if (const auto* u = users.find(id)) p.screen_name = u->screen_name;
    if (const auto it = community_of.find(id); it != community_of.end()) p.community = it->second;
    if (const auto it = profiles.find(id); it != profiles.end()) {
      p.communication_lang = it->second.communication_lang;
      p.profile_lang = it->second.profile_lang;
    }
    people.emplace(id, std::move(p));
  }
  return people;
}

inline StageFiles run_report(Workspace& ws) {
  const auto& cfg = ws.config();
  const auto d = load_ingest(ws);
  const auto g = load_graph(ws);
  const auto s = load_hits(ws, g);
  const auto net = load_spreader_net(ws, g);
  const auto cd = load_communities(ws, net, g);
  const auto b = load_centrality(ws, net, g);
  const auto profiles = load_profiles(ws);
  const auto ids = node_ids(net, g);

  std::unordered_map<std::string, std::uint32_t> community_of;
  for (std::size_t k = 0; k < ids.size(); ++k) community_of.emplace(ids[k], cd.partition.community[k]);

  auto community_rows = community_profiles(cd.partition, ids, profiles);
  if (cfg.report_communities && community_rows.size() > cfg.report_communities)
    community_rows.resize(cfg.report_communities);

  const auto comps = connected_components(net.graph, &cd.partition);
  report::NetworkSummary ns;
  ns.nodes = net.nodes.size();
  ns.edges = net.graph.edge_count();
  ns.threshold = net.threshold;
  ns.communities = cd.partition.count;
  ns.modularity = cd.modularity;
  ns.components = comps.components.size();
  if (!comps.components.empty()) ns.largest = comps.components.front();

  const auto people = person_table(g, d.users, profiles, community_of);
  const auto a_rank = descending_ranks(s.authority), h_rank = descending_ranks(s.hub);
  std::vector<RankCandidate> by_authority;
  for (std::size_t i = 0; i < g.size(); ++i)
    by_authority.push_back({g.users().name(static_cast<NodeId>(i)), s.authority[i], s.hub[i], h_rank[i]});
  std::vector<RankCandidate> by_betweenness;
  for (std::size_t k = 0; k < ids.size(); ++k) by_betweenness.push_back({ids[k], b.values[k], std::nullopt, a_rank[net.nodes[k]]});

  TimeSeriesOptions archive_ts, cs_ts, community_ts;
  archive_ts.group_by = TimeSeriesGroup::archive;
  cs_ts.group_by = TimeSeriesGroup::subcategory;
  cs_ts.archive_filter = "cs";
  community_ts.group_by = TimeSeriesGroup::community;
  community_ts.communities = &community_of;

  return {
      {"table1_dataset.csv", report::dataset_table(dataset_summary(g, d.events))},
      {"table2_roles.csv", report::roles_table(classify_roles(s, cfg.zero_threshold))},
      {"network_summary.csv", report::network_table(ns)},
      {"table3_categories.csv", report::category_table(community_rows)},
      {"table4_languages.csv", report::language_table(community_rows)},
      {"table5_authority_top.csv", report::authority_ranking(rank_key_people(by_authority, people, cfg.top_k))},
      {"table6_betweenness_top.csv", report::betweenness_ranking(rank_key_people(by_betweenness, people, cfg.top_k))},
      {"table7_mention_periods.csv", report::mention_period_table(community_rows)},
      {"fig2_mentions_by_archive.csv", report::time_series(mention_time_series(d.events, d.metadata.catalog, archive_ts))},
      {"fig3_mentions_cs_subcategories.csv", report::time_series(mention_time_series(d.events, d.metadata.catalog, cs_ts))},
      {"fig6_period_vs_authority.csv", report::period_vs_authority(net, g, s, profiles)},
      {"fig7_mentions_by_community.csv",
       report::time_series(mention_time_series(d.events, d.metadata.catalog, community_ts))},
  };
}

inline StageFiles run_export(Workspace& ws) {
  const auto g = load_graph(ws);
  const auto s = load_hits(ws, g);
  const auto net = load_spreader_net(ws, g);
  const auto cd = load_communities(ws, net, g);
  const auto b = load_centrality(ws, net, g);
  const auto profiles = load_profiles(ws);
  return {{"spreader_network.graphml", export_graphml(net, g, cd.partition, s, b, profiles)}};
}

}  // namespace detail

/// Runs one stage against the artifacts already in `cfg.output_dir`.
/// Throws MissingArtifactError naming the stage to run first.
inline StageResult run_stage(Stage stage, const PipelineConfig& cfg,
                             const LanguageDetector& detector = script_detector) {
  cfg.validate();
  detail::Workspace ws(cfg, detector);
  detail::StageFiles files;
  switch (stage) {
    case Stage::ingest: files = detail::run_ingest(ws); break;
    case Stage::graph: files = detail::run_graph(ws); break;
    case Stage::hits: files = detail::run_hits(ws); break;
    case Stage::spreader_net: files = detail::run_spreader_net(ws); break;
    case Stage::communities: files = detail::run_communities(ws); break;
    case Stage::centrality: files = detail::run_centrality(ws); break;
    case Stage::profile: files = detail::run_profile(ws); break;
    case Stage::report: files = detail::run_report(ws); break;
    case Stage::export_graphml: files = detail::run_export(ws); break;
  }
  return detail::commit_stage(ws, stage, files);
}

inline std::vector<StageResult> run_pipeline(const PipelineConfig& cfg,
                                             const LanguageDetector& detector = script_detector) {
  std::vector<StageResult> results;
  for (auto s : kAllStages) results.push_back(run_stage(s, cfg, detector));
  return results;
}

}  // namespace arxivnet
