#pragma once
// Rule-based assignment of posts to reputation dimensions, plus the
// retweet-ranked subsample export used to hand relevant posts to human
// coders. Cue lists are plain data files so study designers can edit them.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "repute/core.hpp"
#include "repute/csv.hpp"
#include "repute/text.hpp"

namespace repute {

// dimension -> lowercase cue terms (single words or space-separated
// phrases). UNCLASSIFIED never has an entry; no cue belongs to two
// dimensions.
using DimensionLexicon = std::map<ReputationDimension, std::set<std::string>>;

// Parses `dimension<TAB>cue phrase` lines; '#' comments allowed. Cues are
// lowercased and inner whitespace is collapsed.
inline DimensionLexicon load_dimension_lexicon(std::istream& in) {
  DimensionLexicon lex;
  std::set<std::string> seen_cues;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line)
      if (!text::is_space(c)) blank = false;
    if (blank || line[0] == '#') continue;
    const auto where = [&] { return "dimensions line " + std::to_string(line_no); };
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      fail(Errc::MalformedLine, where() + ": expected dimension<TAB>cue");
    const std::string dim_name = line.substr(0, tab);
    const std::string cue = text::collapse_whitespace(text::to_lower(line.substr(tab + 1)));
    if (cue.empty()) fail(Errc::MalformedLine, where() + ": empty cue");
    const auto dim = dimension_from_name(dim_name);
    if (!dim) fail(Errc::MalformedLine, where() + ": unknown dimension '" + dim_name + "'");
    if (*dim == ReputationDimension::UNCLASSIFIED)
      fail(Errc::MalformedLine, where() + ": unclassified takes no cues");
    if (!seen_cues.insert(cue).second)
      fail(Errc::DuplicateTerm, where() + ": cue '" + cue + "' assigned twice");
    lex[*dim].insert(cue);
  }
  return lex;
}

inline DimensionLexicon load_dimension_lexicon_string(const std::string& content) {
  std::istringstream in(content);
  return load_dimension_lexicon(in);
}

// Multi-label: every dimension with a cue matching case-insensitively as a
// whole word/phrase. {UNCLASSIFIED} iff nothing matched.
inline std::set<ReputationDimension> classify_post(const Post& post,
                                                   const DimensionLexicon& lex) {
  const std::string lower_text = text::to_lower(post.text);
  std::set<ReputationDimension> labels;
  for (const auto& [dim, cues] : lex)
    for (const auto& cue : cues)
      if (text::contains_whole_word(lower_text, cue)) {
        labels.insert(dim);
        break;
      }
  if (labels.empty()) labels.insert(ReputationDimension::UNCLASSIFIED);
  return labels;
}

struct DimensionProfile {
  EntityProfile entity;
  std::map<ReputationDimension, std::int64_t> counts;  // every dimension present
  std::int64_t total_posts = 0;

  double coverage(ReputationDimension d) const {
    if (total_posts == 0) return 0.0;
    return static_cast<double>(counts.at(d)) / static_cast<double>(total_posts);
  }
};

// counts[d] = number of posts whose label set contains d. Posts are
// expected to be pre-filtered for the entity.
inline DimensionProfile dimension_profile(const std::vector<Post>& posts,
                                          const DimensionLexicon& lex,
                                          const EntityProfile& entity) {
  DimensionProfile profile;
  profile.entity = entity;
  profile.total_posts = static_cast<std::int64_t>(posts.size());
  for (ReputationDimension d : all_dimensions()) profile.counts[d] = 0;
  for (const Post& post : posts)
    for (ReputationDimension d : classify_post(post, lex)) ++profile.counts[d];
  return profile;
}

// The min(k, n) posts with the highest retweet counts under the total
// order (retweets desc, timestamp asc, id asc).
inline std::vector<Post> top_retweeted(std::vector<Post> posts, int k) {
  if (k < 0) fail(Errc::InvalidConfig, "subsample size k must be >= 0");
  std::sort(posts.begin(), posts.end(), [](const Post& a, const Post& b) {
    if (a.retweet_count != b.retweet_count) return a.retweet_count > b.retweet_count;
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.id < b.id;
  });
  if (static_cast<std::size_t>(k) < posts.size()) posts.resize(static_cast<std::size_t>(k));
  return posts;
}

// CSV hand-off for content analysis: rank,id,ts,author,retweets,labels,text
// with labels semicolon-joined.
inline void export_subsample_csv(const std::vector<Post>& ranked, const DimensionLexicon& lex,
                                 std::ostream& os) {
  csv::write_row(os, {"rank", "id", "ts", "author", "retweets", "labels", "text"});
  std::int64_t rank = 0;
  for (const Post& post : ranked) {
    ++rank;
    std::string labels;
    for (ReputationDimension d : classify_post(post, lex)) {
      if (!labels.empty()) labels.push_back(';');
      labels += dimension_name(d);
    }
    csv::write_row(os, {std::to_string(rank), post.id, std::to_string(post.timestamp),
                        post.author_handle, std::to_string(post.retweet_count), labels,
                        post.text});
  }
}

inline std::string export_subsample_csv(const std::vector<Post>& ranked,
                                        const DimensionLexicon& lex) {
  std::ostringstream os;
  export_subsample_csv(ranked, lex, os);
  return os.str();
}

}  // namespace repute
