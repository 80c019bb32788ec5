#pragma once
// Deterministic synthetic corpus generator with ground-truth sidecars.
// Post texts are assembled from template fragments whose scores under the
// shipped lexicon are known exactly, so pipeline behaviour on generated
// corpora is analytically predictable rather than merely statistical.
// Identical configs produce byte-identical output on every platform.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "repute/core.hpp"
#include "repute/ingest.hpp"
#include "repute/rng.hpp"
#include "repute/sentiment.hpp"

namespace repute {

struct EntityScenario {
  EntityProfile profile;
  int posts_per_bucket = 0;
  double p_positive = 0.0;
  double p_negative = 0.0;
  double p_neutral = 1.0;
  double mention_rate = 0.0;  // probability a post @-mentions the entity's first handle
};

struct CrisisSpec {
  EntityKind entity = EntityKind::CORPORATION;
  int start_bucket = 0;
  int duration_buckets = 0;
  double negative_shift = 0.0;  // in (0, 1]; added to p_negative, then renormalized
};

// Discrete power law over retweet counts: P(x) proportional to
// (1+x)^-alpha for x in [0, cap]. alpha must be a positive multiple of 0.5
// so the weights need only correctly-rounded IEEE operations (multiply and
// sqrt), keeping draws bit-identical across platforms.
struct RetweetModel {
  double alpha = 2.5;
  int cap = 100;
};

struct ScenarioConfig {
  std::uint64_t seed = 0;
  StudyWindow window;
  EntityScenario corporation;
  EntityScenario ceo;
  std::optional<CrisisSpec> crisis;
  RetweetModel retweets;
};

struct TruthRecord {
  std::string id;
  EntityKind entity = EntityKind::CORPORATION;
  int bucket = 0;
  Polarity intended = Polarity::NEUTRAL;
};

struct GeneratedCorpus {
  std::vector<Post> posts;
  std::vector<TruthRecord> truth;
};

namespace gen_detail {

// Template shells. "{kw}" is replaced with the entity's first keyword.
// Under the default lexicon every positive shell scores exactly (3,-1),
// every negative shell (1,-3) and every neutral shell (1,-1); a unit test
// pins this. Shell vocabulary must stay clear of lexicon terms, boosters,
// negators and emoticons.
inline const std::vector<std::string>& positive_templates() {
  static const std::vector<std::string> t = {
      "{kw} earnings look solid this quarter",
      "{kw} ships a nice update for customers",
      "analysts call {kw} reliable after the review",
      "{kw} made employees proud with the announcement",
      "customers trust {kw} with the new rollout",
  };
  return t;
}

inline const std::vector<std::string>& negative_templates() {
  static const std::vector<std::string> t = {
      "{kw} faces a crisis after the recall",
      "this is bad news for {kw} investors",
      "{kw} quarter looks poor according to the report",
      "{kw} results disappoint the street again",
      "the outlook for {kw} turned ugly overnight",
  };
  return t;
}

inline const std::vector<std::string>& neutral_templates() {
  static const std::vector<std::string> t = {
      "{kw} schedules the annual meeting for next month",
      "{kw} posts the quarterly filing today",
      "notes on the {kw} filing are online",
      "{kw} updates the calendar for investors",
  };
  return t;
}

inline std::string instantiate(const std::string& tmpl, const std::string& keyword) {
  std::string out;
  out.reserve(tmpl.size() + keyword.size());
  std::size_t pos = 0;
  for (;;) {
    const std::size_t hit = tmpl.find("{kw}", pos);
    if (hit == std::string::npos) {
      out.append(tmpl, pos, std::string::npos);
      return out;
    }
    out.append(tmpl, pos, hit - pos);
    out += keyword;
    pos = hit + 4;
  }
}

// Cumulative weights for the capped power law, built with *, / and sqrt
// only (all correctly rounded under IEEE 754).
inline std::vector<double> retweet_cdf(const RetweetModel& model) {
  const double halves = model.alpha * 2.0;
  const auto k = static_cast<long long>(halves);
  std::vector<double> cdf;
  cdf.reserve(static_cast<std::size_t>(model.cap) + 1);
  double total = 0.0;
  for (int x = 0; x <= model.cap; ++x) {
    const double base = 1.0 + static_cast<double>(x);
    double denom = 1.0;
    for (long long i = 0; i < k / 2; ++i) denom *= base;
    if (k % 2 != 0) denom *= std::sqrt(base);
    total += 1.0 / denom;
    cdf.push_back(total);
  }
  for (double& v : cdf) v /= total;
  return cdf;
}

inline std::int64_t draw_retweets(SplitMix64& rng, const std::vector<double>& cdf) {
  const double u = rng.next_double();
  for (std::size_t x = 0; x < cdf.size(); ++x)
    if (u < cdf[x]) return static_cast<std::int64_t>(x);
  return static_cast<std::int64_t>(cdf.size()) - 1;
}

}  // namespace gen_detail

inline void validate(const ScenarioConfig& config) {
  const auto check_entity = [&](const EntityScenario& e, const char* role) {
    validate_profile(e.profile);
    if (e.posts_per_bucket < 0)
      fail(Errc::InvalidConfig, std::string(role) + ": posts_per_bucket must be >= 0");
    if (e.p_positive < 0 || e.p_negative < 0 || e.p_neutral < 0)
      fail(Errc::InvalidConfig, std::string(role) + ": probabilities must be non-negative");
    const double sum = e.p_positive + e.p_negative + e.p_neutral;
    if (std::fabs(sum - 1.0) > 1e-9)
      fail(Errc::InvalidConfig, std::string(role) + ": sentiment mix must sum to 1");
    if (e.mention_rate < 0 || e.mention_rate > 1)
      fail(Errc::InvalidConfig, std::string(role) + ": mention_rate must be in [0,1]");
  };
  check_entity(config.corporation, "corporation");
  check_entity(config.ceo, "ceo");
  if (config.crisis) {
    const CrisisSpec& c = *config.crisis;
    if (!(c.negative_shift > 0.0) || c.negative_shift > 1.0)
      fail(Errc::InvalidConfig, "crisis negative_shift must be in (0,1]");
    if (c.start_bucket < 0 || c.duration_buckets <= 0 ||
        c.start_bucket + c.duration_buckets > config.window.bucket_count())
      fail(Errc::InvalidConfig, "crisis bucket range outside study window");
  }
  if (!(config.retweets.alpha > 1.0))
    fail(Errc::InvalidConfig, "retweet alpha must be > 1");
  const double halves = config.retweets.alpha * 2.0;
  if (halves != std::floor(halves))
    fail(Errc::InvalidConfig, "retweet alpha must be a multiple of 0.5");
  if (config.retweets.cap < 0) fail(Errc::InvalidConfig, "retweet cap must be >= 0");
}

// Draw order per post is fixed (polarity, template, timestamp offset,
// author, retweets, mention), so the same seed yields the same stream of
// decisions regardless of other knobs — raising negative_shift can only
// turn individual posts negative, never the reverse.
inline GeneratedCorpus generate(const ScenarioConfig& config) {
  validate(config);
  GeneratedCorpus out;
  SplitMix64 rng(config.seed);
  const std::vector<double> retweet_cdf = gen_detail::retweet_cdf(config.retweets);
  const int buckets = config.window.bucket_count();
  std::int64_t counter = 0;

  const auto emit_entity = [&](const EntityScenario& entity, int bucket) {
    double p_neg = entity.p_negative;
    double p_pos = entity.p_positive;
    if (config.crisis && config.crisis->entity == entity.profile.kind &&
        bucket >= config.crisis->start_bucket &&
        bucket < config.crisis->start_bucket + config.crisis->duration_buckets) {
      const double total = 1.0 + config.crisis->negative_shift;
      p_neg = (p_neg + config.crisis->negative_shift) / total;
      p_pos = p_pos / total;
    }
    const std::string keyword = *entity.profile.keywords.begin();
    const std::string handle =
        entity.profile.handles.empty() ? std::string() : *entity.profile.handles.begin();

    for (int j = 0; j < entity.posts_per_bucket; ++j) {
      const double u = rng.next_double();
      Polarity polarity;
      const std::vector<std::string>* templates;
      if (u < p_neg) {
        polarity = Polarity::NEGATIVE;
        templates = &gen_detail::negative_templates();
      } else if (u < p_neg + p_pos) {
        polarity = Polarity::POSITIVE;
        templates = &gen_detail::positive_templates();
      } else {
        polarity = Polarity::NEUTRAL;
        templates = &gen_detail::neutral_templates();
      }
      const auto tmpl_index = rng.next_below(templates->size());
      const auto ts_offset =
          static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(
              std::min(config.window.bucket_width,
                       config.window.end - config.window.bucket_start_at(bucket)))));
      const std::uint64_t author_n = rng.next_below(100000);
      const std::int64_t retweets = gen_detail::draw_retweets(rng, retweet_cdf);
      const double mention_u = rng.next_double();

      Post post;
      ++counter;
      char idbuf[32];
      std::snprintf(idbuf, sizeof idbuf, "p%06lld", static_cast<long long>(counter));
      post.id = idbuf;
      post.timestamp = config.window.bucket_start_at(bucket) + ts_offset;
      post.author_handle = "user" + std::to_string(author_n);
      post.text = gen_detail::instantiate((*templates)[tmpl_index], keyword);
      if (!handle.empty() && mention_u < entity.mention_rate) post.text += " @" + handle;
      post.retweet_count = retweets;
      post.mentions = extract_mentions(post.text);
      out.posts.push_back(std::move(post));
      out.truth.push_back({out.posts.back().id, entity.profile.kind, bucket, polarity});
    }
  };

  for (int bucket = 0; bucket < buckets; ++bucket) {
    emit_entity(config.corporation, bucket);
    emit_entity(config.ceo, bucket);
  }
  return out;
}

// NDJSON serializations (one object per line, fixed field order).
inline std::string corpus_ndjson(const std::vector<Post>& posts) {
  std::string out;
  for (const Post& p : posts) {
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["ts"] = p.timestamp;
    j["author"] = p.author_handle;
    j["text"] = p.text;
    j["retweets"] = p.retweet_count;
    if (p.repost_of) j["repost_of"] = *p.repost_of;
    out += j.dump();
    out += '\n';
  }
  return out;
}

inline std::string truth_ndjson(const std::vector<TruthRecord>& truth) {
  std::string out;
  for (const TruthRecord& t : truth) {
    nlohmann::ordered_json j;
    j["id"] = t.id;
    j["entity"] = entity_kind_name(t.entity);
    j["bucket"] = t.bucket;
    j["intended_polarity"] = polarity_name(t.intended);
    out += j.dump();
    out += '\n';
  }
  return out;
}

inline std::vector<TruthRecord> parse_truth_ndjson(const std::string& content) {
  std::vector<TruthRecord> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string::npos) eol = content.size();
    const std::string line = content.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("id") || !j.contains("entity") ||
        !j.contains("bucket") || !j.contains("intended_polarity"))
      fail(Errc::MalformedRecord, "truth line " + std::to_string(line_no) + ": invalid record");
    TruthRecord t;
    t.id = j["id"].get<std::string>();
    t.entity = j["entity"].get<std::string>() == "ceo" ? EntityKind::CEO
                                                       : EntityKind::CORPORATION;
    t.bucket = j["bucket"].get<int>();
    const std::string p = j["intended_polarity"].get<std::string>();
    t.intended = p == "POSITIVE" ? Polarity::POSITIVE
                                 : (p == "NEGATIVE" ? Polarity::NEGATIVE : Polarity::NEUTRAL);
    out.push_back(std::move(t));
  }
  return out;
}

struct Agreement {
  std::int64_t matched = 0;
  std::int64_t total = 0;

  // Fraction of posts whose scored polarity equals the intended one;
  // 1.0 by convention when empty (check total before trusting it).
  double rate() const {
    return total == 0 ? 1.0 : static_cast<double>(matched) / static_cast<double>(total);
  }
};

// Scored posts and the sidecar must cover exactly the same ids.
inline Agreement verify_against_truth(const std::vector<ScoredPost>& scored,
                                      const std::vector<TruthRecord>& truth) {
  std::unordered_map<std::string, Polarity> intended;
  for (const TruthRecord& t : truth) intended.emplace(t.id, t.intended);
  if (intended.size() != truth.size())
    fail(Errc::IdMismatch, "duplicate ids in ground-truth sidecar");
  if (scored.size() != truth.size())
    fail(Errc::IdMismatch, "scored " + std::to_string(scored.size()) + " posts vs " +
                               std::to_string(truth.size()) + " truth records");
  Agreement result;
  for (const ScoredPost& sp : scored) {
    const auto it = intended.find(sp.post.id);
    if (it == intended.end())
      fail(Errc::IdMismatch, "post '" + sp.post.id + "' missing from ground truth");
    ++result.total;
    if (sp.score.polarity() == it->second) ++result.matched;
  }
  return result;
}

}  // namespace repute
