#pragma once
// Command implementations behind the CLI binary. Each run_* function is a
// pure composition of module operations returning the files it would
// write, so outputs can be produced (and tested) without touching disk;
// the binary only parses flags, calls one of these and persists the
// result. Nothing is written until a command has fully succeeded.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "repute/analytics.hpp"
#include "repute/classify.hpp"
#include "repute/core.hpp"
#include "repute/corpusgen.hpp"
#include "repute/defaults.hpp"
#include "repute/ingest.hpp"
#include "repute/sentiment.hpp"

namespace repute {

struct LexiconPaths {
  std::string terms;
  std::string boosters;
  std::string negators;
  std::string emoticons;
};

struct RunConfig {
  std::string corpus_path;
  std::optional<CorpusFormat> corpus_format;  // sniffed from extension when absent
  std::optional<LexiconPaths> lexicon;        // built-in lexicon when absent
  std::optional<std::string> dimensions_path; // built-in cues when absent
  EntityProfile corporation;
  EntityProfile ceo;
  StudyWindow window;
  bool strict = false;
  bool weight_by_retweets = false;
  bool exclude_reposts = false;   // drop forwarded posts right after ingest
  bool rank_per_bucket = false;   // subsample top-k within each bucket instead of globally
  int subsample_k = 100;
  int max_lag = 4;
  double z_threshold = 2.0;
  std::string out_dir = "out";
};

struct RunOutput {
  std::vector<std::pair<std::string, std::string>> files;  // relative name -> content
  std::string summary;                                     // printed to stdout
};

namespace cli_detail {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json parse_json_file(const std::string& path) {
  const auto j = nlohmann::json::parse(slurp(path), nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(Errc::InvalidConfig, "'" + path + "' is not a JSON object");
  return j;
}

inline EntityProfile parse_entity(const nlohmann::json& j, const std::string& role,
                                  EntityKind kind) {
  if (!j.is_object()) fail(Errc::InvalidConfig, role + " block must be an object");
  EntityProfile profile;
  profile.kind = kind;
  profile.name = j.value("name", role);
  if (auto it = j.find("keywords"); it != j.end() && it->is_array())
    for (const auto& kw : *it) profile.keywords.insert(kw.get<std::string>());
  if (auto it = j.find("handles"); it != j.end() && it->is_array())
    for (const auto& h : *it) profile.handles.insert(h.get<std::string>());
  validate_profile(profile);
  return profile;
}

inline StudyWindow parse_window(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("end"))
    fail(Errc::InvalidConfig, "window block needs integer 'start' and 'end'");
  return StudyWindow(j["start"].get<std::int64_t>(), j["end"].get<std::int64_t>(),
                     j.value("bucket_width", kSecondsPerWeek));
}

inline CorpusFormat sniff_format(const RunConfig& config) {
  if (config.corpus_format) return *config.corpus_format;
  const std::string& p = config.corpus_path;
  if (p.size() >= 4 && p.compare(p.size() - 4, 4, ".csv") == 0) return CorpusFormat::CSV;
  return CorpusFormat::NDJSON;
}

struct LoadedInputs {
  std::vector<Post> posts;
  IngestReport report;
  SentimentLexicon lexicon;
  DimensionLexicon dimensions;
};

inline LoadedInputs load_inputs(const RunConfig& config) {
  LoadedInputs loaded;
  if (config.lexicon) {
    std::ifstream t(config.lexicon->terms), b(config.lexicon->boosters),
        n(config.lexicon->negators), e(config.lexicon->emoticons);
    if (!t) fail(Errc::IoError, "cannot open '" + config.lexicon->terms + "'");
    if (!b) fail(Errc::IoError, "cannot open '" + config.lexicon->boosters + "'");
    if (!n) fail(Errc::IoError, "cannot open '" + config.lexicon->negators + "'");
    if (!e) fail(Errc::IoError, "cannot open '" + config.lexicon->emoticons + "'");
    loaded.lexicon = load_lexicon(t, b, n, e);
  } else {
    loaded.lexicon = defaults::lexicon();
  }
  if (config.dimensions_path) {
    std::ifstream d(*config.dimensions_path);
    if (!d) fail(Errc::IoError, "cannot open '" + *config.dimensions_path + "'");
    loaded.dimensions = load_dimension_lexicon(d);
  } else {
    loaded.dimensions = defaults::dimensions();
  }
  std::ifstream corpus(config.corpus_path, std::ios::binary);
  if (!corpus) fail(Errc::IoError, "cannot open '" + config.corpus_path + "'");
  IngestResult result = read_posts(corpus, sniff_format(config), config.strict);
  loaded.posts = std::move(result.posts);
  loaded.report = result.report;
  if (config.exclude_reposts) {
    std::vector<Post> originals;
    for (Post& p : loaded.posts)
      if (!p.is_repost) originals.push_back(std::move(p));
    loaded.posts = std::move(originals);
  }
  return loaded;
}

struct EntityPosts {
  std::vector<Post> corporation;
  std::vector<Post> ceo;
};

inline EntityPosts split_by_entity(const std::vector<Post>& posts, const RunConfig& config) {
  EntityPosts out;
  out.corporation = filter_by_entity(posts, config.corporation, config.window);
  out.ceo = filter_by_entity(posts, config.ceo, config.window);
  return out;
}

inline std::vector<Post> preprocess_all(const std::vector<Post>& posts) {
  std::vector<Post> out;
  out.reserve(posts.size());
  for (const Post& p : posts) out.push_back(preprocess(p));
  return out;
}

// Global top-k by default; per-bucket mode ranks within each bucket and
// concatenates in bucket order.
inline std::vector<Post> subsample(const std::vector<Post>& posts, const RunConfig& config) {
  if (!config.rank_per_bucket) return top_retweeted(posts, config.subsample_k);
  std::vector<Post> out;
  for (int b = 0; b < config.window.bucket_count(); ++b) {
    std::vector<Post> bucket_posts;
    for (const Post& p : posts)
      if (config.window.bucket_index(p.timestamp) == b) bucket_posts.push_back(p);
    for (Post& p : top_retweeted(std::move(bucket_posts), config.subsample_k))
      out.push_back(std::move(p));
  }
  return out;
}

inline std::string scores_csv(const std::vector<ScoredPost>& scored) {
  std::ostringstream os;
  csv::write_row(os, {"id", "positive", "negative", "net", "polarity"});
  for (const ScoredPost& sp : scored)
    csv::write_row(os, {sp.post.id, std::to_string(sp.score.positive()),
                        std::to_string(sp.score.negative()), std::to_string(sp.score.net()),
                        polarity_name(sp.score.polarity())});
  return os.str();
}

inline nlohmann::ordered_json polarity_counts_json(const std::vector<ScoredPost>& scored) {
  std::int64_t pos = 0, neg = 0, neu = 0;
  for (const ScoredPost& sp : scored) switch (sp.score.polarity()) {
      case Polarity::POSITIVE: ++pos; break;
      case Polarity::NEGATIVE: ++neg; break;
      case Polarity::NEUTRAL: ++neu; break;
    }
  nlohmann::ordered_json j;
  j["posts"] = static_cast<std::int64_t>(scored.size());
  j["positive"] = pos;
  j["negative"] = neg;
  j["neutral"] = neu;
  return j;
}

}  // namespace cli_detail

inline RunConfig load_run_config(const std::string& path) {
  const auto j = cli_detail::parse_json_file(path);
  RunConfig config;
  if (!j.contains("corpus") || !j["corpus"].is_string())
    fail(Errc::InvalidConfig, "config needs a 'corpus' path");
  config.corpus_path = j["corpus"].get<std::string>();
  if (auto it = j.find("corpus_format"); it != j.end()) {
    const std::string f = it->get<std::string>();
    if (f == "ndjson")
      config.corpus_format = CorpusFormat::NDJSON;
    else if (f == "csv")
      config.corpus_format = CorpusFormat::CSV;
    else
      fail(Errc::InvalidConfig, "corpus_format must be 'ndjson' or 'csv'");
  }
  if (auto it = j.find("lexicon"); it != j.end()) {
    const auto& lx = *it;
    for (const char* key : {"terms", "boosters", "negators", "emoticons"})
      if (!lx.contains(key) || !lx[key].is_string())
        fail(Errc::InvalidConfig, std::string("lexicon block needs a '") + key + "' path");
    config.lexicon = LexiconPaths{lx["terms"].get<std::string>(),
                                  lx["boosters"].get<std::string>(),
                                  lx["negators"].get<std::string>(),
                                  lx["emoticons"].get<std::string>()};
  }
  if (auto it = j.find("dimensions"); it != j.end())
    config.dimensions_path = it->get<std::string>();
  if (!j.contains("corporation") || !j.contains("ceo"))
    fail(Errc::InvalidConfig, "config needs both 'corporation' and 'ceo' blocks");
  config.corporation =
      cli_detail::parse_entity(j["corporation"], "corporation", EntityKind::CORPORATION);
  config.ceo = cli_detail::parse_entity(j["ceo"], "ceo", EntityKind::CEO);
  if (!j.contains("window")) fail(Errc::InvalidConfig, "config needs a 'window' block");
  config.window = cli_detail::parse_window(j["window"]);
  config.strict = j.value("strict", false);
  config.weight_by_retweets = j.value("weight_by_retweets", false);
  config.exclude_reposts = j.value("exclude_reposts", false);
  config.rank_per_bucket = j.value("rank_per_bucket", false);
  config.subsample_k = j.value("k", 100);
  config.max_lag = j.value("max_lag", 4);
  config.z_threshold = j.value("z_threshold", 2.0);
  config.out_dir = j.value("out", std::string("out"));
  if (config.subsample_k < 0) fail(Errc::InvalidConfig, "k must be >= 0");
  if (config.max_lag < 0) fail(Errc::InvalidConfig, "max_lag must be >= 0");
  if (!(config.z_threshold > 0)) fail(Errc::InvalidConfig, "z_threshold must be positive");
  return config;
}

// Per-post scores and a per-entity polarity summary.
inline RunOutput run_score(const RunConfig& config) {
  const auto loaded = cli_detail::load_inputs(config);
  const auto split = cli_detail::split_by_entity(loaded.posts, config);
  const auto corp_scored = score_posts(split.corporation, loaded.lexicon);
  const auto ceo_scored = score_posts(split.ceo, loaded.lexicon);

  RunOutput out;
  out.files.emplace_back("scores_corporation.csv", cli_detail::scores_csv(corp_scored));
  out.files.emplace_back("scores_ceo.csv", cli_detail::scores_csv(ceo_scored));
  nlohmann::ordered_json summary;
  summary["corporation"] = cli_detail::polarity_counts_json(corp_scored);
  summary["ceo"] = cli_detail::polarity_counts_json(ceo_scored);
  out.files.emplace_back("score_summary.json", summary.dump(2) + "\n");
  std::ostringstream ss;
  ss << "read " << loaded.report.records_read << " records, scored "
     << corp_scored.size() << " corporation and " << ceo_scored.size() << " ceo posts";
  out.summary = ss.str();
  return out;
}

// Per-entity timeline CSVs plus one aligned plot-data file.
inline RunOutput run_timeline(const RunConfig& config) {
  const auto loaded = cli_detail::load_inputs(config);
  const auto split = cli_detail::split_by_entity(loaded.posts, config);
  const BucketizeOptions opt{config.weight_by_retweets};
  const auto corp_points = build_timeline(score_posts(split.corporation, loaded.lexicon),
                                          config.corporation, config.window, opt);
  const auto ceo_points = build_timeline(score_posts(split.ceo, loaded.lexicon), config.ceo,
                                         config.window, opt);

  RunOutput out;
  std::ostringstream corp_csv, ceo_csv, plot;
  write_timeline_csv(corp_csv, corp_points, config.corporation.name);
  write_timeline_csv(ceo_csv, ceo_points, config.ceo.name);
  out.files.emplace_back("timeline_corporation.csv", corp_csv.str());
  out.files.emplace_back("timeline_ceo.csv", ceo_csv.str());

  csv::write_row(plot, {"bucket_start", "corporation_post_count", "corporation_mention_count",
                        "corporation_mean_net", "corporation_rep_index", "ceo_post_count",
                        "ceo_mention_count", "ceo_mean_net", "ceo_rep_index"});
  for (std::size_t i = 0; i < corp_points.size(); ++i) {
    const TimelinePoint& c = corp_points[i];
    const TimelinePoint& e = ceo_points[i];
    csv::write_row(plot,
                   {std::to_string(c.bucket_start), std::to_string(c.post_count),
                    std::to_string(c.mention_count),
                    c.mean_net_sentiment ? format_double(*c.mean_net_sentiment) : std::string(),
                    c.reputation_index ? format_double(*c.reputation_index) : std::string(),
                    std::to_string(e.post_count), std::to_string(e.mention_count),
                    e.mean_net_sentiment ? format_double(*e.mean_net_sentiment) : std::string(),
                    e.reputation_index ? format_double(*e.reputation_index) : std::string()});
  }
  out.files.emplace_back("plot_data.csv", plot.str());
  out.summary = std::to_string(corp_points.size()) + " buckets per entity";
  return out;
}

// Correlation/divergence report for the two aligned timelines.
inline RunOutput run_correlate(const RunConfig& config) {
  const auto loaded = cli_detail::load_inputs(config);
  const auto split = cli_detail::split_by_entity(loaded.posts, config);
  const BucketizeOptions opt{config.weight_by_retweets};
  auto corp_points = build_timeline(score_posts(split.corporation, loaded.lexicon),
                                    config.corporation, config.window, opt);
  auto ceo_points = build_timeline(score_posts(split.ceo, loaded.lexicon), config.ceo,
                                   config.window, opt);
  const DualTimeline dual =
      superimpose(std::move(corp_points), std::move(ceo_points), config.window);
  const CorrelationReport report = correlate(dual, config.max_lag, config.z_threshold);

  RunOutput out;
  out.files.emplace_back("correlation_report.json",
                         correlation_report_json(report).dump(2) + "\n");
  std::ostringstream ss;
  ss << "pearson_r=" << format_double(report.pearson_r) << " best_lag=" << report.best_lag
     << " divergence_buckets=" << report.divergence_buckets.size();
  out.summary = ss.str();
  return out;
}

// Dimension profiles (counts + coverage) and top-k retweet subsamples.
inline RunOutput run_classify(const RunConfig& config) {
  const auto loaded = cli_detail::load_inputs(config);
  const auto split = cli_detail::split_by_entity(loaded.posts, config);
  const auto corp_posts = cli_detail::preprocess_all(split.corporation);
  const auto ceo_posts = cli_detail::preprocess_all(split.ceo);

  const auto profile_json = [&](const DimensionProfile& profile) {
    nlohmann::ordered_json j;
    j["entity"] = profile.entity.name;
    j["total_posts"] = profile.total_posts;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    nlohmann::ordered_json coverage = nlohmann::ordered_json::object();
    for (ReputationDimension d : all_dimensions()) {
      counts[dimension_name(d)] = profile.counts.at(d);
      coverage[dimension_name(d)] = profile.coverage(d);
    }
    j["counts"] = counts;
    j["coverage"] = coverage;
    return j;
  };

  RunOutput out;
  nlohmann::ordered_json report;
  report["corporation"] =
      profile_json(dimension_profile(corp_posts, loaded.dimensions, config.corporation));
  report["ceo"] = profile_json(dimension_profile(ceo_posts, loaded.dimensions, config.ceo));
  out.files.emplace_back("dimension_profiles.json", report.dump(2) + "\n");
  out.files.emplace_back(
      "subsample_corporation.csv",
      export_subsample_csv(cli_detail::subsample(corp_posts, config), loaded.dimensions));
  out.files.emplace_back(
      "subsample_ceo.csv",
      export_subsample_csv(cli_detail::subsample(ceo_posts, config), loaded.dimensions));
  out.summary = "classified " + std::to_string(corp_posts.size()) + " corporation and " +
                std::to_string(ceo_posts.size()) + " ceo posts, k=" +
                std::to_string(config.subsample_k);
  return out;
}

inline ScenarioConfig load_scenario(const std::string& path) {
  const auto j = cli_detail::parse_json_file(path);
  ScenarioConfig config;
  if (!j.contains("seed")) fail(Errc::InvalidConfig, "scenario needs a 'seed'");
  config.seed = j["seed"].get<std::uint64_t>();
  if (!j.contains("window")) fail(Errc::InvalidConfig, "scenario needs a 'window' block");
  config.window = cli_detail::parse_window(j["window"]);

  const auto parse_side = [&](const char* role, EntityKind kind) {
    if (!j.contains(role)) fail(Errc::InvalidConfig, std::string("scenario needs a '") + role +
                                                         "' block");
    const auto& e = j[role];
    EntityScenario side;
    side.profile = cli_detail::parse_entity(e, role, kind);
    side.posts_per_bucket = e.value("posts_per_bucket", 0);
    if (auto it = e.find("mix"); it != e.end()) {
      side.p_positive = it->value("positive", 0.0);
      side.p_negative = it->value("negative", 0.0);
      side.p_neutral = it->value("neutral", 0.0);
    }
    side.mention_rate = e.value("mention_rate", 0.0);
    return side;
  };
  config.corporation = parse_side("corporation", EntityKind::CORPORATION);
  config.ceo = parse_side("ceo", EntityKind::CEO);

  if (auto it = j.find("crisis"); it != j.end() && !it->is_null()) {
    CrisisSpec crisis;
    const std::string entity = it->value("entity", std::string("corporation"));
    if (entity != "corporation" && entity != "ceo")
      fail(Errc::InvalidConfig, "crisis entity must be 'corporation' or 'ceo'");
    crisis.entity = entity == "ceo" ? EntityKind::CEO : EntityKind::CORPORATION;
    crisis.start_bucket = it->value("start_bucket", 0);
    crisis.duration_buckets = it->value("duration_buckets", 0);
    crisis.negative_shift = it->value("negative_shift", 0.0);
    config.crisis = crisis;
  }
  if (auto it = j.find("retweets"); it != j.end()) {
    config.retweets.alpha = it->value("alpha", 2.5);
    config.retweets.cap = it->value("cap", 100);
  }
  validate(config);
  return config;
}

// Synthetic corpus plus ground-truth sidecar.
inline RunOutput run_gen(const ScenarioConfig& scenario) {
  const GeneratedCorpus corpus = generate(scenario);
  RunOutput out;
  out.files.emplace_back("corpus.ndjson", corpus_ndjson(corpus.posts));
  out.files.emplace_back("truth.ndjson", truth_ndjson(corpus.truth));
  std::int64_t corp = 0, ceo = 0;
  for (const TruthRecord& t : corpus.truth)
    (t.entity == EntityKind::CORPORATION ? corp : ceo) += 1;
  std::ostringstream ss;
  ss << "seed=" << scenario.seed << " posts=" << corpus.posts.size() << " corporation=" << corp
     << " ceo=" << ceo << " buckets=" << scenario.window.bucket_count();
  out.summary = ss.str();
  return out;
}

// Persists a RunOutput. Files land only after every byte is ready; if a
// write fails midway, everything written so far is removed.
inline void write_outputs(const RunOutput& out, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(Errc::IoError, "cannot create output directory '" + out_dir + "'");
  std::vector<fs::path> written;
  for (const auto& [name, content] : out.files) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (f) f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) {
      for (const fs::path& p : written) fs::remove(p, ec);
      fs::remove(path, ec);
      fail(Errc::IoError, "failed writing '" + path.string() + "'");
    }
    written.push_back(path);
  }
}

// Exit status classes: 1 for usage/config problems, 2 for data problems.
inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidConfig:
    case Errc::IoError:
    case Errc::EmptyKeywordSet:
    case Errc::MalformedHandle:
      return 1;
    default:
      return 2;
  }
}

}  // namespace repute
