// arxivnet: command-line driver for the staged analysis pipeline.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arxivnet/arxivnet.hpp"

namespace {

void add_config_options(CLI::App& cmd, arxivnet::PipelineConfig& cfg, std::string& norm) {
  cmd.add_option("--mentions", cfg.mentions_path, "Mention tweets (JSON lines)");
  cmd.add_option("--interactions", cfg.interactions_path, "Retweet/like events (JSON lines)");
  cmd.add_option("--metadata", cfg.metadata_path, "arXiv metadata (JSON lines)");
  cmd.add_option("--users", cfg.users_path, "User records (JSON lines)");
  cmd.add_option("-o,--out", cfg.output_dir, "Output directory")
      ->envname(arxivnet::kOutputDirEnv)
      ->capture_default_str();
  cmd.add_flag("--strict", cfg.strict, "Abort on the first malformed input line");
  cmd.add_flag("!--no-retweet-credit", cfg.credit_retweet_interactions,
               "Drop likes/retweets of native retweets instead of crediting the original tweet");
  cmd.add_option("-T,--threshold", cfg.threshold, "Overlap-coefficient threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--hits-tol", cfg.hits_tolerance, "HITS max-abs change tolerance")->capture_default_str();
  cmd.add_option("--hits-max-iter", cfg.hits_max_iterations, "HITS iteration cap")->capture_default_str();
  cmd.add_option("--hits-norm", norm, "HITS normalization (l1 or l2)")
      ->check(CLI::IsMember({"l1", "l2"}))
      ->capture_default_str();
  cmd.add_option("--zero-threshold", cfg.zero_threshold, "Scores below this count as zero")->capture_default_str();
  cmd.add_option("--seed", cfg.louvain_seed, "Louvain seed (0 = ascending node order)")->capture_default_str();
  cmd.add_option("--resolution", cfg.resolution, "Louvain resolution")->capture_default_str();
  cmd.add_flag("!--unweighted", cfg.weighted, "Ignore overlap coefficients in Louvain");
  cmd.add_flag("!--raw-betweenness", cfg.betweenness_normalized, "Report unnormalized betweenness");
  cmd.add_flag("--largest-component", cfg.betweenness_largest_component,
               "Compute betweenness on the largest component only");
  cmd.add_option("--top-k", cfg.top_k, "Rows in the key-person rankings")->capture_default_str();
  cmd.add_option("--report-communities", cfg.report_communities, "Communities listed in tables (0 = all)")
      ->capture_default_str();
  cmd.add_option("--threads", cfg.threads, "Worker threads for HITS and betweenness")->capture_default_str();
}

void print_result(const arxivnet::StageResult& r) {
  std::cout << arxivnet::stage_name(r.stage) << ": " << r.directory.string() << " ("
            << r.manifest.at("outputs").size() << " files)\n";
}

void write_text(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw arxivnet::Error("cannot write " + p.string());
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diffusion analysis of arXiv links on Twitter: HITS roles, spreader communities, key people"};
  app.require_subcommand(1);

  arxivnet::PipelineConfig cfg;
  std::string norm = "l2";

  auto* run = app.add_subcommand("run", "Run one or more stages against the output directory");
  std::vector<std::string> stages;
  run->add_option("stages", stages,
                  "ingest, graph, hits, spreader-net, communities, centrality, profile, report, export")
      ->required();
  add_config_options(*run, cfg, norm);

  auto* all = app.add_subcommand("pipeline", "Run every stage in order");
  add_config_options(*all, cfg, norm);

  auto* normalize = app.add_subcommand("normalize-id", "Print the canonical arXiv id of URLs or identifiers");
  std::vector<std::string> raw_ids;
  normalize->add_option("inputs", raw_ids, "URLs or identifiers")->required();

  auto* synth = app.add_subcommand("synth", "Write a synthetic corpus with planted spreader groups");
  arxivnet::SyntheticOptions synth_opts;
  std::string synth_dir = "synthetic";
  synth->add_option("-d,--dir", synth_dir, "Destination directory")->capture_default_str();
  synth->add_option("--groups", synth_opts.groups)->capture_default_str();
  synth->add_option("--spreaders", synth_opts.spreaders_per_group)->capture_default_str();
  synth->add_option("--audience", synth_opts.audience_per_group)->capture_default_str();
  synth->add_option("--seed", synth_opts.seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.hits_norm = arxivnet::parse_hits_norm(norm);
    if (*run) {
      for (const auto& s : stages) print_result(arxivnet::run_stage(arxivnet::parse_stage(s), cfg));
    } else if (*all) {
      for (const auto& r : arxivnet::run_pipeline(cfg)) print_result(r);
    } else if (*normalize) {
      int status = 0;
      for (const auto& raw : raw_ids) {
        if (const auto id = arxivnet::normalize_arxiv_id(raw)) {
          std::cout << *id << '\n';
        } else {
          std::cout << "REJECT\t" << raw << '\n';
          status = 2;
        }
      }
      return status;
    } else if (*synth) {
      const auto corpus = arxivnet::make_synthetic_corpus(synth_opts);
      std::filesystem::create_directories(synth_dir);
      const std::filesystem::path dir(synth_dir);
      write_text(dir / "mentions.jsonl", corpus.mentions);
      write_text(dir / "interactions.jsonl", corpus.interactions);
      write_text(dir / "metadata.jsonl", corpus.metadata);
      write_text(dir / "users.jsonl", corpus.users);
      std::cout << "wrote synthetic corpus to " << dir.string() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
