// repute — reputation analytics for a corporation/CEO pair on social media
// posts: dual-polarity sentiment, mention frequency, dimension
// classification, timeline superimposition and correlation, plus a
// deterministic synthetic corpus generator.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "repute/cli.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::string scenario_path;
  std::string out_dir;
  bool strict = false;
  bool weight_by_retweets = false;
  bool exclude_reposts = false;
  bool rank_per_bucket = false;
  int k = 0;
  int max_lag = 0;
  double z_threshold = 0.0;
};

void apply_overrides(repute::RunConfig& config, const CLI::App& cmd, const Overrides& ov) {
  if (cmd.count("--out")) config.out_dir = ov.out_dir;
  if (cmd.count("--strict")) config.strict = true;
  if (cmd.count("--weight-by-retweets")) config.weight_by_retweets = true;
  if (cmd.count("--exclude-reposts")) config.exclude_reposts = true;
  if (cmd.count("--rank-per-bucket")) config.rank_per_bucket = true;
  if (cmd.count("--k")) config.subsample_k = ov.k;
  if (cmd.count("--max-lag")) config.max_lag = ov.max_lag;
  if (cmd.count("--z-threshold")) config.z_threshold = ov.z_threshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"social media reputation measurement for a corporation/CEO pair"};
  app.require_subcommand(1);

  Overrides ov;
  const auto add_common = [&](CLI::App* cmd, bool needs_config) {
    if (needs_config)
      cmd->add_option("--config", ov.config_path, "run configuration (JSON)")->required();
    cmd->add_option("--out", ov.out_dir, "output directory (overrides config)");
    cmd->add_flag("--strict", ov.strict, "abort on the first malformed corpus record");
    cmd->add_flag("--weight-by-retweets", ov.weight_by_retweets,
                  "weight mean sentiment by 1 + retweet count");
    cmd->add_flag("--exclude-reposts", ov.exclude_reposts,
                  "drop forwarded posts after ingest");
    cmd->add_flag("--rank-per-bucket", ov.rank_per_bucket,
                  "take the subsample top-k within each bucket instead of globally");
    cmd->add_option("--k", ov.k, "subsample size for classify");
    cmd->add_option("--max-lag", ov.max_lag, "maximum lead/lag in buckets for correlate");
    cmd->add_option("--z-threshold", ov.z_threshold, "divergence threshold in z-units");
  };

  CLI::App* score = app.add_subcommand("score", "score each post and summarize polarities");
  CLI::App* timeline = app.add_subcommand("timeline", "emit per-entity weekly timelines");
  CLI::App* correlate =
      app.add_subcommand("correlate", "correlate the two timelines and flag divergence");
  CLI::App* classify =
      app.add_subcommand("classify", "dimension profiles and retweet-ranked subsample");
  CLI::App* gen = app.add_subcommand("gen", "generate a synthetic corpus with ground truth");
  for (CLI::App* cmd : {score, timeline, correlate, classify}) add_common(cmd, true);
  gen->add_option("--scenario", ov.scenario_path, "scenario description (JSON)")->required();
  gen->add_option("--out", ov.out_dir, "output directory")->default_val("out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    repute::RunOutput output;
    std::string out_dir;
    if (gen->parsed()) {
      output = repute::run_gen(repute::load_scenario(ov.scenario_path));
      out_dir = ov.out_dir;
    } else {
      repute::RunConfig config = repute::load_run_config(ov.config_path);
      CLI::App* cmd = score->parsed() ? score
                      : timeline->parsed() ? timeline
                      : correlate->parsed() ? correlate
                                            : classify;
      apply_overrides(config, *cmd, ov);
      if (score->parsed())
        output = repute::run_score(config);
      else if (timeline->parsed())
        output = repute::run_timeline(config);
      else if (correlate->parsed())
        output = repute::run_correlate(config);
      else
        output = repute::run_classify(config);
      out_dir = config.out_dir;
    }
    repute::write_outputs(output, out_dir);
    std::cout << output.summary << "\n";
    for (const auto& [name, content] : output.files)
      std::cout << "wrote " << out_dir << "/" << name << " (" << content.size() << " bytes)\n";
    return 0;
  } catch (const repute::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return repute::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
