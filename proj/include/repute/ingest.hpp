#pragma once
// File-based corpus ingestion: NDJSON/CSV readers, mention extraction,
// pre-processing and per-entity filtering. This replaces live platform
// crawling with deterministic file replay.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "repute/core.hpp"
#include "repute/csv.hpp"
#include "repute/text.hpp"

namespace repute {

enum class CorpusFormat { NDJSON, CSV };

struct IngestReport {
  std::int64_t records_read = 0;
  std::int64_t records_accepted = 0;
  std::int64_t records_skipped = 0;
  std::map<std::string, std::int64_t> skip_reasons;
};

struct IngestResult {
  std::vector<Post> posts;
  IngestReport report;
};

// Extracts @-mentions: '@' at text start or after a non-word character,
// followed by 1..15 characters from [A-Za-z0-9_]. Returned bare, in order
// of appearance, duplicates preserved. Runs longer than 15 characters are
// not valid handles and yield nothing.
inline std::vector<std::string> extract_mentions(std::string_view s) {
  std::vector<std::string> out;
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    if (s[i] == '@' && (i == 0 || !text::is_handle_char(s[i - 1]))) {
      std::size_t j = i + 1;
      while (j < n && text::is_handle_char(s[j])) ++j;
      const std::size_t len = j - i - 1;
      if (len >= 1 && len <= 15) out.emplace_back(s.substr(i + 1, len));
      i = (j > i + 1) ? j : i + 1;
    } else {
      ++i;
    }
  }
  return out;
}

namespace detail {

struct RawRecord {
  std::string id;
  std::int64_t ts = 0;
  std::string author;
  std::string text;
  std::int64_t retweets = 0;
  std::optional<std::string> repost_of;
};

// Returns a skip reason, or nullopt if the record parsed into `out`.
inline std::optional<std::string> parse_ndjson_record(const std::string& line, RawRecord& out) {
  const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) return "invalid json";
  const auto str_field = [&](const char* key, std::string& dst) -> bool {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) return false;
    dst = it->get<std::string>();
    return true;
  };
  if (!str_field("id", out.id) || out.id.empty()) return "missing or empty 'id'";
  auto ts = j.find("ts");
  if (ts == j.end() || !ts->is_number_integer()) return "missing or non-integer 'ts'";
  out.ts = ts->get<std::int64_t>();
  if (!str_field("author", out.author)) return "missing 'author'";
  if (!str_field("text", out.text)) return "missing 'text'";
  if (auto rt = j.find("retweets"); rt != j.end()) {
    if (!rt->is_number_integer()) return "non-integer 'retweets'";
    out.retweets = rt->get<std::int64_t>();
    if (out.retweets < 0) return "negative 'retweets'";
  }
  if (auto rp = j.find("repost_of"); rp != j.end() && !rp->is_null()) {
    if (!rp->is_string()) return "non-string 'repost_of'";
    out.repost_of = rp->get<std::string>();
  }
  return std::nullopt;
}

inline bool parse_int64(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (!text::is_ascii_digit(s[i])) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = (s[0] == '-') ? -v : v;
  return true;
}

inline std::optional<std::string> parse_csv_record(const std::vector<std::string>& fields,
                                                   RawRecord& out) {
  if (fields.size() != 6) return "expected 6 columns, got " + std::to_string(fields.size());
  out.id = fields[0];
  if (out.id.empty()) return "missing or empty 'id'";
  if (!parse_int64(fields[1], out.ts)) return "missing or non-integer 'ts'";
  out.author = fields[2];
  out.text = fields[3];
  if (fields[4].empty()) {
    out.retweets = 0;
  } else {
    if (!parse_int64(fields[4], out.retweets)) return "non-integer 'retweets'";
    if (out.retweets < 0) return "negative 'retweets'";
  }
  if (!fields[5].empty()) out.repost_of = fields[5];
  return std::nullopt;
}

inline Post to_post(RawRecord&& r) {
  Post p;
  p.id = std::move(r.id);
  p.timestamp = r.ts;
  p.author_handle = std::move(r.author);
  p.text = std::move(r.text);
  p.retweet_count = r.retweets;
  p.repost_of = std::move(r.repost_of);
  p.is_repost = p.repost_of.has_value();
  p.mentions = extract_mentions(p.text);
  return p;
}

}  // namespace detail

// Reads a post corpus from a stream. Duplicate ids are dropped (first
// occurrence wins). strict=true aborts on the first malformed record,
// naming its position; strict=false counts it under skip_reasons.
inline IngestResult read_posts(std::istream& in, CorpusFormat format, bool strict) {
  IngestResult result;
  std::unordered_set<std::string> seen_ids;

  const auto take = [&](detail::RawRecord&& raw, const std::optional<std::string>& reason,
                        std::int64_t record_no) {
    ++result.report.records_read;
    if (reason) {
      if (strict)
        fail(Errc::MalformedRecord, "record " + std::to_string(record_no) + ": " + *reason);
      ++result.report.records_skipped;
      ++result.report.skip_reasons["malformed"];
      return;
    }
    if (!seen_ids.insert(raw.id).second) {
      ++result.report.records_skipped;
      ++result.report.skip_reasons["duplicate_id"];
      return;
    }
    ++result.report.records_accepted;
    result.posts.push_back(detail::to_post(std::move(raw)));
  };

  if (format == CorpusFormat::NDJSON) {
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
        line.erase(0, 3);
      bool blank = true;
      for (char c : line)
        if (!text::is_space(c)) blank = false;
      if (blank) continue;
      detail::RawRecord raw;
      take(std::move(raw), detail::parse_ndjson_record(line, raw), line_no);
    }
  } else {
    csv::Reader reader(in);
    auto header = reader.next();
    if (header) {
      static const std::vector<std::string> expected = {"id",   "ts",       "author",
                                                        "text", "retweets", "repost_of"};
      if (*header != expected)
        fail(Errc::MalformedRecord, "unexpected CSV header; expected id,ts,author,text,retweets,repost_of");
      for (;;) {
        std::optional<std::vector<std::string>> row;
        try {
          row = reader.next();
        } catch (const Error&) {
          if (strict) throw;
          ++result.report.records_read;
          ++result.report.records_skipped;
          ++result.report.skip_reasons["malformed"];
          continue;
        }
        if (!row) break;
        detail::RawRecord raw;
        take(std::move(raw), detail::parse_csv_record(*row, raw),
             static_cast<std::int64_t>(reader.record_number()) - 1);
      }
    }
  }
  return result;
}

// Keeps posts inside the window whose text, mentions or author tie them to
// the entity. matched_keywords is populated on retained posts; input order
// is preserved. Handles compare case-insensitively.
inline std::vector<Post> filter_by_entity(const std::vector<Post>& posts,
                                          const EntityProfile& profile,
                                          const StudyWindow& window) {
  validate_profile(profile);
  std::vector<std::string> keywords_lower;
  for (const auto& kw : profile.keywords) keywords_lower.push_back(text::to_lower(kw));
  std::unordered_set<std::string> handles_lower;
  for (const auto& h : profile.handles) handles_lower.insert(text::to_lower(h));

  std::vector<Post> out;
  for (const Post& post : posts) {
    if (!window.contains(post.timestamp)) continue;
    const std::string lower_text = text::to_lower(post.text);
    std::vector<std::string> matched;
    for (const auto& kw : keywords_lower)
      if (text::contains_whole_word(lower_text, kw)) matched.push_back(kw);
    bool keep = !matched.empty();
    if (!keep && handles_lower.count(text::to_lower(post.author_handle))) keep = true;
    if (!keep)
      for (const auto& m : post.mentions)
        if (handles_lower.count(text::to_lower(m))) {
          keep = true;
          break;
        }
    if (!keep) continue;
    Post copy = post;
    copy.matched_keywords = std::move(matched);
    out.push_back(std::move(copy));
  }
  return out;
}

// Strips URL tokens (whitespace-delimited tokens starting with http:// or
// https://), collapses whitespace runs and trims. Idempotent; all fields
// other than text are left untouched.
inline Post preprocess(Post post) {
  std::string out;
  out.reserve(post.text.size());
  const std::string& s = post.text;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && text::is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !text::is_space(s[j])) ++j;
    if (j > i) {
      std::string_view token(&s[i], j - i);
      const bool url = token.substr(0, 7) == "http://" || token.substr(0, 8) == "https://";
      if (!url) {
        if (!out.empty()) out.push_back(' ');
        out.append(token);
      }
    }
    i = j;
  }
  post.text = std::move(out);
  return post;
}

}  // namespace repute
