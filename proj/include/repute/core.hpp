#pragma once
// Core domain types shared by every stage of the reputation pipeline.
// These types carry no I/O and no computation beyond their own invariants;
// everything is immutable by convention after construction.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace repute {

enum class Errc {
  EmptyKeywordSet,
  MalformedHandle,
  MalformedRecord,
  DuplicateTerm,
  StrengthOutOfRange,
  MalformedLine,
  PostOutsideWindow,
  EmptyBucket,
  InsufficientData,
  ZeroVariance,
  MisalignedTimelines,
  IdMismatch,
  InvalidConfig,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyKeywordSet: return "EmptyKeywordSet";
    case Errc::MalformedHandle: return "MalformedHandle";
    case Errc::MalformedRecord: return "MalformedRecord";
    case Errc::DuplicateTerm: return "DuplicateTerm";
    case Errc::StrengthOutOfRange: return "StrengthOutOfRange";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::PostOutsideWindow: return "PostOutsideWindow";
    case Errc::EmptyBucket: return "EmptyBucket";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::ZeroVariance: return "ZeroVariance";
    case Errc::MisalignedTimelines: return "MisalignedTimelines";
    case Errc::IdMismatch: return "IdMismatch";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// One social-media message. `mentions` is always the exact output of
// extract_mentions(text); readers populate it, downstream code relies on it.
struct Post {
  std::string id;
  std::int64_t timestamp = 0;  // UTC epoch seconds
  std::string author_handle;
  std::string text;
  std::int64_t retweet_count = 0;
  bool is_repost = false;
  std::optional<std::string> repost_of;
  std::vector<std::string> mentions;
  std::vector<std::string> matched_keywords;  // lowercase, filled by filter_by_entity
};

enum class EntityKind { CEO, CORPORATION };

inline const char* entity_kind_name(EntityKind k) {
  return k == EntityKind::CEO ? "ceo" : "corporation";
}

// A tracked subject: the corporation or its chief executive.
// Handles are stored bare (no leading '@').
struct EntityProfile {
  std::string name;
  EntityKind kind = EntityKind::CORPORATION;
  std::set<std::string> keywords;  // matched case-insensitively, whole word
  std::set<std::string> handles;
};

// Validates the EntityProfile invariants; throws on violation.
inline void validate_profile(const EntityProfile& profile) {
  if (profile.keywords.empty())
    fail(Errc::EmptyKeywordSet, "profile '" + profile.name + "' has no keywords");
  for (const auto& kw : profile.keywords) {
    bool blank = true;
    for (char c : kw)
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') blank = false;
    if (blank) fail(Errc::EmptyKeywordSet, "profile '" + profile.name + "' has a blank keyword");
  }
  for (const auto& h : profile.handles) {
    if (h.empty()) fail(Errc::MalformedHandle, "empty handle in profile '" + profile.name + "'");
    for (char c : h)
      if (c == '@' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
        fail(Errc::MalformedHandle, "handle '" + h + "' must be bare and contain no whitespace");
  }
}

constexpr std::int64_t kSecondsPerWeek = 7 * 24 * 3600;

// Half-open observation window [start, end) tiled by fixed-width buckets.
struct StudyWindow {
  std::int64_t start = 0;
  std::int64_t end = 16 * kSecondsPerWeek;  // default: 16 weekly buckets
  std::int64_t bucket_width = kSecondsPerWeek;

  StudyWindow() = default;
  StudyWindow(std::int64_t start_, std::int64_t end_, std::int64_t width = kSecondsPerWeek)
      : start(start_), end(end_), bucket_width(width) {
    if (start >= end) fail(Errc::InvalidConfig, "window start must precede end");
    if (bucket_width <= 0) fail(Errc::InvalidConfig, "bucket width must be positive");
  }

  bool contains(std::int64_t ts) const { return ts >= start && ts < end; }

  int bucket_count() const {
    return static_cast<int>((end - start + bucket_width - 1) / bucket_width);
  }

  int bucket_index(std::int64_t ts) const {
    return static_cast<int>((ts - start) / bucket_width);
  }

  std::int64_t bucket_start_at(int index) const { return start + index * bucket_width; }
};

enum class Polarity { POSITIVE, NEGATIVE, NEUTRAL };

inline const char* polarity_name(Polarity p) {
  switch (p) {
    case Polarity::POSITIVE: return "POSITIVE";
    case Polarity::NEGATIVE: return "NEGATIVE";
    case Polarity::NEUTRAL: return "NEUTRAL";
  }
  return "NEUTRAL";
}

// Dual-polarity sentiment: positive strength 1..5 and negative strength
// -5..-1 held simultaneously. (1, -1) is the neutral baseline.
// Construction with out-of-range values is rejected.
class SentimentScore {
 public:
  SentimentScore() = default;
  SentimentScore(int positive, int negative) : pos_(positive), neg_(negative) {
    if (pos_ < 1 || pos_ > 5)
      fail(Errc::StrengthOutOfRange, "positive score " + std::to_string(pos_) + " outside [1,5]");
    if (neg_ < -5 || neg_ > -1)
      fail(Errc::StrengthOutOfRange, "negative score " + std::to_string(neg_) + " outside [-5,-1]");
  }

  int positive() const { return pos_; }
  int negative() const { return neg_; }
  int net() const { return pos_ + neg_; }

  Polarity polarity() const {
    if (pos_ > -neg_) return Polarity::POSITIVE;
    if (-neg_ > pos_) return Polarity::NEGATIVE;
    return Polarity::NEUTRAL;
  }

  bool operator==(const SentimentScore&) const = default;

 private:
  int pos_ = 1;
  int neg_ = -1;
};

// Content categories: the six classic corporate reputation dimensions,
// three executive-specific extensions, and the catch-all.
enum class ReputationDimension {
  EMOTIONAL_APPEAL,
  PRODUCTS_SERVICES,
  VISION_LEADERSHIP,
  WORKPLACE_ENVIRONMENT,
  SOCIAL_ENVIRONMENTAL_RESPONSIBILITY,
  FINANCIAL_PERFORMANCE,
  PERSONALITY,
  AUTHORITY,
  AUTHENTICITY,
  UNCLASSIFIED,
};

constexpr int kDimensionCount = 10;

inline const std::vector<ReputationDimension>& all_dimensions() {
  static const std::vector<ReputationDimension> dims = {
      ReputationDimension::EMOTIONAL_APPEAL,
      ReputationDimension::PRODUCTS_SERVICES,
      ReputationDimension::VISION_LEADERSHIP,
      ReputationDimension::WORKPLACE_ENVIRONMENT,
      ReputationDimension::SOCIAL_ENVIRONMENTAL_RESPONSIBILITY,
      ReputationDimension::FINANCIAL_PERFORMANCE,
      ReputationDimension::PERSONALITY,
      ReputationDimension::AUTHORITY,
      ReputationDimension::AUTHENTICITY,
      ReputationDimension::UNCLASSIFIED,
  };
  return dims;
}

inline const char* dimension_name(ReputationDimension d) {
  switch (d) {
    case ReputationDimension::EMOTIONAL_APPEAL: return "emotional_appeal";
    case ReputationDimension::PRODUCTS_SERVICES: return "products_services";
    case ReputationDimension::VISION_LEADERSHIP: return "vision_leadership";
    case ReputationDimension::WORKPLACE_ENVIRONMENT: return "workplace_environment";
    case ReputationDimension::SOCIAL_ENVIRONMENTAL_RESPONSIBILITY:
      return "social_environmental_responsibility";
    case ReputationDimension::FINANCIAL_PERFORMANCE: return "financial_performance";
    case ReputationDimension::PERSONALITY: return "personality";
    case ReputationDimension::AUTHORITY: return "authority";
    case ReputationDimension::AUTHENTICITY: return "authenticity";
    case ReputationDimension::UNCLASSIFIED: return "unclassified";
  }
  return "unclassified";
}

inline std::optional<ReputationDimension> dimension_from_name(const std::string& name) {
  for (ReputationDimension d : all_dimensions())
    if (name == dimension_name(d)) return d;
  return std::nullopt;
}

// One bucket of an entity's reputation timeline. Means and the reputation
// index are absent (not zero) when the bucket holds no posts.
struct TimelinePoint {
  std::int64_t bucket_start = 0;
  std::int64_t post_count = 0;
  std::int64_t mention_count = 0;
  std::optional<double> mean_net_sentiment;
  std::int64_t positive_count = 0;
  std::int64_t negative_count = 0;
  std::int64_t neutral_count = 0;
  std::optional<double> reputation_index;  // in [-1, 1] when defined
};

// The two entities' timelines on one shared bucket axis. Construction
// rejects series that do not align with each other and with the window.
struct DualTimeline {
  StudyWindow window;
  std::vector<TimelinePoint> corporation;
  std::vector<TimelinePoint> ceo;

  DualTimeline(const StudyWindow& w, std::vector<TimelinePoint> corp,
               std::vector<TimelinePoint> ceo_points)
      : window(w), corporation(std::move(corp)), ceo(std::move(ceo_points)) {
    const int buckets = window.bucket_count();
    if (static_cast<int>(corporation.size()) != buckets ||
        static_cast<int>(ceo.size()) != buckets)
      fail(Errc::MisalignedTimelines,
           "timeline lengths " + std::to_string(corporation.size()) + "/" +
               std::to_string(ceo.size()) + " do not match " + std::to_string(buckets) +
               " window buckets");
    for (int i = 0; i < buckets; ++i) {
      const std::int64_t expected = window.bucket_start_at(i);
      if (corporation[i].bucket_start != expected || ceo[i].bucket_start != expected)
        fail(Errc::MisalignedTimelines,
             "bucket_start mismatch at bucket " + std::to_string(i));
    }
  }
};

}  // namespace repute
