#pragma once
// Time-bucketed aggregation and the corporation-vs-CEO comparison: mention
// frequency, a [-1,1] reputation index combining volume and favourability,
// Pearson correlation with a lead/lag profile, and divergence detection on
// z-scored tone series.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "repute/core.hpp"
#include "repute/sentiment.hpp"
#include "repute/text.hpp"

namespace repute {

struct BucketizeOptions {
  // When set, mean net sentiment weights each post by 1 + retweet_count so
  // widely forwarded posts count for more; counts stay unweighted.
  bool weight_by_retweets = false;
};

// Janis-Fadner coefficient of imbalance over a bucket's polarity counts:
// favourable vs unfavourable share, in [-1, 1]. Requires a non-empty bucket.
inline double reputation_index(const TimelinePoint& point) {
  if (point.post_count == 0)
    fail(Errc::EmptyBucket, "reputation index undefined for empty bucket at " +
                                std::to_string(point.bucket_start));
  const double f = static_cast<double>(point.positive_count);
  const double u = static_cast<double>(point.negative_count);
  const double t = static_cast<double>(point.post_count);
  if (f > u) return (f * f - f * u) / (t * t);
  if (f < u) return (f * u - u * u) / (t * t);
  return 0.0;
}

// One TimelinePoint per bucket, empty buckets included. Posts must lie in
// [window.start, window.end). mention_count is left at zero; pair with
// mention_frequency (or use build_timeline).
inline std::vector<TimelinePoint> bucketize(const std::vector<ScoredPost>& scored,
                                            const StudyWindow& window,
                                            const BucketizeOptions& opt = {}) {
  const int buckets = window.bucket_count();
  std::vector<TimelinePoint> points(static_cast<std::size_t>(buckets));
  std::vector<double> weight_sum(static_cast<std::size_t>(buckets), 0.0);
  std::vector<double> weighted_net(static_cast<std::size_t>(buckets), 0.0);
  for (int i = 0; i < buckets; ++i) points[i].bucket_start = window.bucket_start_at(i);

  for (const ScoredPost& sp : scored) {
    if (!window.contains(sp.post.timestamp))
      fail(Errc::PostOutsideWindow, "post '" + sp.post.id + "' outside study window");
    const auto b = static_cast<std::size_t>(window.bucket_index(sp.post.timestamp));
    TimelinePoint& point = points[b];
    ++point.post_count;
    switch (sp.score.polarity()) {
      case Polarity::POSITIVE: ++point.positive_count; break;
      case Polarity::NEGATIVE: ++point.negative_count; break;
      case Polarity::NEUTRAL: ++point.neutral_count; break;
    }
    const double w = opt.weight_by_retweets ? 1.0 + static_cast<double>(sp.post.retweet_count)
                                            : 1.0;
    weight_sum[b] += w;
    weighted_net[b] += w * static_cast<double>(sp.score.net());
  }
  for (int i = 0; i < buckets; ++i) {
    TimelinePoint& point = points[static_cast<std::size_t>(i)];
    if (point.post_count > 0) {
      point.mean_net_sentiment = weighted_net[static_cast<std::size_t>(i)] /
                                 weight_sum[static_cast<std::size_t>(i)];
      point.reputation_index = reputation_index(point);
    }
  }
  return points;
}

// Per-bucket coverage volume: whole-word keyword occurrences plus
// @-mentions of tracked handles, counted per instance.
inline std::vector<std::int64_t> mention_frequency(const std::vector<Post>& posts,
                                                   const EntityProfile& profile,
                                                   const StudyWindow& window) {
  std::vector<std::string> keywords_lower;
  for (const auto& kw : profile.keywords) keywords_lower.push_back(text::to_lower(kw));
  std::unordered_set<std::string> handles_lower;
  for (const auto& h : profile.handles) handles_lower.insert(text::to_lower(h));

  std::vector<std::int64_t> counts(static_cast<std::size_t>(window.bucket_count()), 0);
  for (const Post& post : posts) {
    if (!window.contains(post.timestamp))
      fail(Errc::PostOutsideWindow, "post '" + post.id + "' outside study window");
    const std::string lower_text = text::to_lower(post.text);
    std::int64_t hits = 0;
    for (const auto& kw : keywords_lower)
      hits += static_cast<std::int64_t>(text::count_word_occurrences(lower_text, kw));
    for (const auto& m : post.mentions)
      if (handles_lower.count(text::to_lower(m))) ++hits;
    counts[static_cast<std::size_t>(window.bucket_index(post.timestamp))] += hits;
  }
  return counts;
}

// Full per-entity timeline: bucketized sentiment plus mention counts.
inline std::vector<TimelinePoint> build_timeline(const std::vector<ScoredPost>& scored,
                                                 const EntityProfile& profile,
                                                 const StudyWindow& window,
                                                 const BucketizeOptions& opt = {}) {
  std::vector<TimelinePoint> points = bucketize(scored, window, opt);
  std::vector<Post> posts;
  posts.reserve(scored.size());
  for (const ScoredPost& sp : scored) posts.push_back(sp.post);
  const std::vector<std::int64_t> mentions = mention_frequency(posts, profile, window);
  for (std::size_t i = 0; i < points.size(); ++i) points[i].mention_count = mentions[i];
  return points;
}

using Series = std::vector<std::optional<double>>;

inline Series mean_net_series(const std::vector<TimelinePoint>& points) {
  Series s;
  s.reserve(points.size());
  for (const TimelinePoint& p : points) s.push_back(p.mean_net_sentiment);
  return s;
}

namespace detail {

// Sample Pearson r over fully defined pairs; nullopt when fewer than three
// pairs remain or either side is constant.
inline std::optional<double> try_pearson(const std::vector<double>& x,
                                         const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 3) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

inline void paired_defined(const Series& a, const Series& b, int lag, std::vector<double>& x,
                           std::vector<double>& y) {
  x.clear();
  y.clear();
  const auto n = static_cast<std::int64_t>(a.size());
  for (std::int64_t t = 0; t < n; ++t) {
    const std::int64_t u = t + lag;
    if (u < 0 || u >= n) continue;
    if (a[static_cast<std::size_t>(t)] && b[static_cast<std::size_t>(u)]) {
      x.push_back(*a[static_cast<std::size_t>(t)]);
      y.push_back(*b[static_cast<std::size_t>(u)]);
    }
  }
}

}  // namespace detail

// Sample Pearson correlation. Buckets undefined on either side are dropped
// pairwise; at least 3 pairs must remain and both sides must vary.
inline double pearson(const Series& a, const Series& b) {
  if (a.size() != b.size()) fail(Errc::InvalidConfig, "series lengths differ");
  std::vector<double> x, y;
  detail::paired_defined(a, b, 0, x, y);
  if (x.size() < 3)
    fail(Errc::InsufficientData,
         "only " + std::to_string(x.size()) + " defined pairs; need at least 3");
  const auto r = detail::try_pearson(x, y);
  if (!r) fail(Errc::ZeroVariance, "a series is constant over the overlap");
  return *r;
}

// r between a[t] and b[t+lag] for each lag in [-max_lag, max_lag]; positive
// lag means b trails a. Lags without enough overlap or with a constant side
// are omitted.
inline std::map<int, double> lagged_correlation(const Series& a, const Series& b, int max_lag) {
  if (max_lag < 0) fail(Errc::InvalidConfig, "max_lag must be >= 0");
  if (a.size() != b.size()) fail(Errc::InvalidConfig, "series lengths differ");
  std::map<int, double> profile;
  std::vector<double> x, y;
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    detail::paired_defined(a, b, lag, x, y);
    if (x.size() < 3) continue;
    if (const auto r = detail::try_pearson(x, y)) profile[lag] = *r;
  }
  return profile;
}

// Largest |r|; ties prefer the smaller |lag|, then the negative lag.
inline int best_lag(const std::map<int, double>& profile) {
  if (profile.empty()) fail(Errc::InsufficientData, "empty lag profile");
  int best = 0;
  double best_abs = -1.0;
  for (const auto& [lag, r] : profile) {
    const double abs_r = std::fabs(r);
    const bool better =
        abs_r > best_abs ||
        (abs_r == best_abs && (std::abs(lag) < std::abs(best) ||
                               (std::abs(lag) == std::abs(best) && lag < best)));
    if (better) {
      best = lag;
      best_abs = abs_r;
    }
  }
  return best;
}

// Aligns the two per-entity timelines on the shared bucket axis.
inline DualTimeline superimpose(std::vector<TimelinePoint> corporation,
                                std::vector<TimelinePoint> ceo, const StudyWindow& window) {
  return DualTimeline(window, std::move(corporation), std::move(ceo));
}

// Buckets where the z-scored tone of the two entities drifts apart by more
// than z_threshold. Each side is standardized independently over its
// defined buckets (population deviation; a constant series z-scores to 0).
inline std::vector<std::int64_t> divergence_buckets(const DualTimeline& dual,
                                                    double z_threshold) {
  if (!(z_threshold > 0)) fail(Errc::InvalidConfig, "z_threshold must be positive");
  const Series corp = mean_net_series(dual.corporation);
  const Series ceo = mean_net_series(dual.ceo);

  const auto zscore = [](const Series& s) {
    std::vector<double> defined;
    for (const auto& v : s)
      if (v) defined.push_back(*v);
    if (defined.size() < 3)
      fail(Errc::InsufficientData, "need at least 3 defined buckets per series");
    double mean = 0;
    for (double v : defined) mean += v;
    mean /= static_cast<double>(defined.size());
    double var = 0;
    for (double v : defined) var += (v - mean) * (v - mean);
    var /= static_cast<double>(defined.size());
    const double sd = std::sqrt(var);
    Series z(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) z[i] = (sd == 0.0) ? 0.0 : (*s[i] - mean) / sd;
    return z;
  };

  const Series zc = zscore(corp);
  const Series ze = zscore(ceo);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < zc.size(); ++i)
    if (zc[i] && ze[i] && std::fabs(*zc[i] - *ze[i]) > z_threshold)
      out.push_back(dual.window.bucket_start_at(static_cast<int>(i)));
  return out;
}

struct CorrelationReport {
  double pearson_r = 0.0;
  std::map<int, double> lag_profile;
  int best_lag = 0;
  std::int64_t n_buckets_used = 0;
  std::vector<std::int64_t> divergence_buckets;
};

inline CorrelationReport correlate(const DualTimeline& dual, int max_lag, double z_threshold) {
  const Series corp = mean_net_series(dual.corporation);
  const Series ceo = mean_net_series(dual.ceo);
  CorrelationReport report;
  report.pearson_r = pearson(corp, ceo);
  std::vector<double> x, y;
  detail::paired_defined(corp, ceo, 0, x, y);
  report.n_buckets_used = static_cast<std::int64_t>(x.size());
  report.lag_profile = lagged_correlation(corp, ceo, max_lag);
  report.best_lag = best_lag(report.lag_profile);
  report.divergence_buckets = divergence_buckets(dual, z_threshold);
  return report;
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// bucket_start,entity,post_count,mention_count,mean_net,pos,neg,neu,rep_index
// Undefined values are emitted as empty fields.
inline void write_timeline_csv(std::ostream& os, const std::vector<TimelinePoint>& points,
                               std::string_view entity_name) {
  csv::write_row(os, {"bucket_start", "entity", "post_count", "mention_count", "mean_net", "pos",
                      "neg", "neu", "rep_index"});
  for (const TimelinePoint& p : points) {
    csv::write_row(
        os, {std::to_string(p.bucket_start), std::string(entity_name),
             std::to_string(p.post_count), std::to_string(p.mention_count),
             p.mean_net_sentiment ? format_double(*p.mean_net_sentiment) : std::string(),
             std::to_string(p.positive_count), std::to_string(p.negative_count),
             std::to_string(p.neutral_count),
             p.reputation_index ? format_double(*p.reputation_index) : std::string()});
  }
}

inline nlohmann::ordered_json correlation_report_json(const CorrelationReport& report) {
  nlohmann::ordered_json j;
  j["pearson_r"] = report.pearson_r;
  j["best_lag"] = report.best_lag;
  j["n_buckets_used"] = report.n_buckets_used;
  nlohmann::ordered_json profile = nlohmann::ordered_json::object();
  for (const auto& [lag, r] : report.lag_profile) profile[std::to_string(lag)] = r;
  j["lag_profile"] = profile;
  j["divergence_buckets"] = report.divergence_buckets;
  return j;
}

}  // namespace repute
