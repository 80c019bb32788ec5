#pragma once
// Dual-polarity lexicon sentiment scorer.
//
// Every text receives a positive strength in 1..5 and a negative strength
// in -5..-1 at the same time. Term strengths come from a lexicon of exact
// and prefix-wildcard entries plus emoticon literals; four modifier rules
// adjust a matched token's magnitude, applied strictly in this order:
//
//   (a) elongation      token had a run of >= 3 identical letters
//                       (collapsed to 2 before lookup)      -> magnitude +1
//   (b) capitalization  token is all uppercase, length >= 2 -> magnitude +1
//   (c) booster         immediately preceding token is a booster
//                                                           -> magnitude += delta
//   (d) negation        one of the two preceding tokens is a negator
//                                                           -> flip sign, magnitude -1
//
// Magnitude is clamped to [1,5] after each step; magnitude 1 contributes
// nothing. A sentence's positive score is the maximum positive token
// strength (floor 1), its negative score the minimum negative strength
// (ceiling -1); the text takes the max/min over its sentences. Empty text
// scores (1, -1).

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repute/core.hpp"
#include "repute/ingest.hpp"
#include "repute/text.hpp"

namespace repute {

struct SentimentLexicon {
  std::map<std::string, int> exact_terms;                   // term -> strength
  std::vector<std::pair<std::string, int>> wildcard_terms;  // stem -> strength, longest-first
  std::map<std::string, int> boosters;                      // term -> delta
  std::set<std::string> negators;
  std::map<std::string, int> emoticons;                 // literal -> strength
  std::vector<std::string> emoticons_by_length;         // longest-first, for greedy matching

  // Exact match wins; otherwise the longest wildcard stem that prefixes
  // the key.
  std::optional<int> term_strength(const std::string& key) const {
    if (auto it = exact_terms.find(key); it != exact_terms.end()) return it->second;
    for (const auto& [stem, strength] : wildcard_terms)
      if (key.size() >= stem.size() && key.compare(0, stem.size(), stem) == 0) return strength;
    return std::nullopt;
  }
};

struct ScoredPost {
  Post post;
  SentimentScore score;
};

namespace detail {

inline bool valid_term_strength(int s) { return (s >= -5 && s <= -2) || (s >= 2 && s <= 5); }
inline bool valid_booster_delta(int d) { return d == -2 || d == -1 || d == 1 || d == 2; }

struct LexiconLine {
  std::string term;
  std::optional<int> value;
};

// Splits one lexicon line into term [+ tab-separated integer]. Returns
// nullopt for blank and comment lines.
inline std::optional<LexiconLine> split_lexicon_line(const std::string& raw,
                                                     const std::string& file, std::size_t line_no,
                                                     bool expect_value) {
  std::string line = raw;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool blank = true;
  for (char c : line)
    if (!text::is_space(c)) blank = false;
  if (blank || line[0] == '#') return std::nullopt;
  const auto where = [&] { return file + " line " + std::to_string(line_no); };
  LexiconLine out;
  const std::size_t tab = line.find('\t');
  if (expect_value) {
    if (tab == std::string::npos) fail(Errc::MalformedLine, where() + ": expected term<TAB>value");
    out.term = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    std::int64_t v = 0;
    if (!parse_int64(value, v))
      fail(Errc::MalformedLine, where() + ": value '" + value + "' is not an integer");
    out.value = static_cast<int>(v);
  } else {
    if (tab != std::string::npos)
      fail(Errc::MalformedLine, where() + ": unexpected tab in negator entry");
    out.term = line;
  }
  if (out.term.empty()) fail(Errc::MalformedLine, where() + ": empty term");
  if (text::is_space(out.term.front()) || text::is_space(out.term.back()))
    fail(Errc::MalformedLine, where() + ": term has surrounding whitespace");
  return out;
}

}  // namespace detail

// Parses the four lexicon sources. Terms, boosters and negators are
// lowercased and must be disjoint; emoticon literals are kept verbatim.
// File format: UTF-8, `term<TAB>integer` per line ('#' comments allowed);
// the negators file lists one bare term per line. A single trailing '*'
// on a term makes it a prefix wildcard.
inline SentimentLexicon load_lexicon(std::istream& terms, std::istream& boosters,
                                     std::istream& negators, std::istream& emoticons) {
  SentimentLexicon lex;
  std::set<std::string> word_entries;  // across terms/boosters/negators

  const auto claim = [&](const std::string& term, const std::string& file, std::size_t line_no) {
    if (!word_entries.insert(term).second)
      fail(Errc::DuplicateTerm,
           "term '" + term + "' (" + file + " line " + std::to_string(line_no) +
               ") already defined in another list");
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(terms, line)) {
    auto parsed = detail::split_lexicon_line(line, "terms", ++line_no, true);
    if (!parsed) continue;
    std::string term = text::to_lower(parsed->term);
    if (!detail::valid_term_strength(*parsed->value))
      fail(Errc::StrengthOutOfRange, "terms line " + std::to_string(line_no) + ": strength " +
                                         std::to_string(*parsed->value) +
                                         " outside {-5..-2} U {2..5}");
    const bool wildcard = term.back() == '*';
    if (wildcard) term.pop_back();
    if (term.empty() || term.find('*') != std::string::npos)
      fail(Errc::MalformedLine,
           "terms line " + std::to_string(line_no) + ": '*' only allowed as final character");
    claim(wildcard ? term + "*" : term, "terms", line_no);
    if (wildcard)
      lex.wildcard_terms.emplace_back(term, *parsed->value);
    else
      lex.exact_terms[term] = *parsed->value;
  }

  line_no = 0;
  while (std::getline(boosters, line)) {
    auto parsed = detail::split_lexicon_line(line, "boosters", ++line_no, true);
    if (!parsed) continue;
    const std::string term = text::to_lower(parsed->term);
    if (term.find('*') != std::string::npos)
      fail(Errc::MalformedLine, "boosters line " + std::to_string(line_no) + ": no wildcards here");
    if (!detail::valid_booster_delta(*parsed->value))
      fail(Errc::StrengthOutOfRange, "boosters line " + std::to_string(line_no) + ": delta " +
                                         std::to_string(*parsed->value) +
                                         " outside {-2,-1,1,2}");
    claim(term, "boosters", line_no);
    lex.boosters[term] = *parsed->value;
  }

  line_no = 0;
  while (std::getline(negators, line)) {
    auto parsed = detail::split_lexicon_line(line, "negators", ++line_no, false);
    if (!parsed) continue;
    const std::string term = text::to_lower(parsed->term);
    if (term.find('*') != std::string::npos)
      fail(Errc::MalformedLine, "negators line " + std::to_string(line_no) + ": no wildcards here");
    claim(term, "negators", line_no);
    lex.negators.insert(term);
  }

  line_no = 0;
  while (std::getline(emoticons, line)) {
    auto parsed = detail::split_lexicon_line(line, "emoticons", ++line_no, true);
    if (!parsed) continue;
    for (char c : parsed->term)
      if (text::is_space(c))
        fail(Errc::MalformedLine,
             "emoticons line " + std::to_string(line_no) + ": literal contains whitespace");
    if (!detail::valid_term_strength(*parsed->value))
      fail(Errc::StrengthOutOfRange, "emoticons line " + std::to_string(line_no) + ": strength " +
                                         std::to_string(*parsed->value) +
                                         " outside {-5..-2} U {2..5}");
    if (!lex.emoticons.emplace(parsed->term, *parsed->value).second)
      fail(Errc::DuplicateTerm,
           "emoticons line " + std::to_string(line_no) + ": duplicate literal '" + parsed->term +
               "'");
  }

  for (const auto& [lit, strength] : lex.emoticons) lex.emoticons_by_length.push_back(lit);
  std::sort(lex.emoticons_by_length.begin(), lex.emoticons_by_length.end(),
            [](const std::string& a, const std::string& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  std::sort(lex.wildcard_terms.begin(), lex.wildcard_terms.end(),
            [](const auto& a, const auto& b) {
              return a.first.size() != b.first.size() ? a.first.size() > b.first.size()
                                                      : a.first < b.first;
            });
  return lex;
}

inline SentimentLexicon load_lexicon_strings(const std::string& terms, const std::string& boosters,
                                             const std::string& negators,
                                             const std::string& emoticons) {
  std::istringstream t(terms), b(boosters), n(negators), e(emoticons);
  return load_lexicon(t, b, n, e);
}

// Splits text into sentences of tokens. Sentences break at '.', '!', '?'
// and line breaks; tokens are maximal runs of letters/digits/apostrophes;
// emoticon literals are matched greedily (longest first) before word
// splitting; '@'-mentions and '#'-tags stay single tokens.
inline std::vector<std::vector<std::string>> tokenize(std::string_view s,
                                                      const SentimentLexicon& lex) {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> current;

  const auto flush = [&] {
    if (!current.empty()) sentences.push_back(std::move(current));
    current.clear();
  };
  const auto is_word_char = [](char c) { return text::is_ascii_alnum(c) || c == '\''; };

  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    bool matched_emoticon = false;
    for (const auto& lit : lex.emoticons_by_length) {
      if (lit.size() <= n - i && s.compare(i, lit.size(), lit) == 0) {
        current.emplace_back(lit);
        i += lit.size();
        matched_emoticon = true;
        break;
      }
    }
    if (matched_emoticon) continue;

    const char c = s[i];
    if (c == '.' || c == '!' || c == '?' || c == '\n' || c == '\r') {
      flush();
      ++i;
    } else if (c == '@' || c == '#') {
      std::size_t j = i + 1;
      while (j < n && text::is_handle_char(s[j])) ++j;
      if (j > i + 1) current.emplace_back(s.substr(i, j - i));
      i = std::max(j, i + 1);
    } else if (is_word_char(c)) {
      std::size_t j = i;
      while (j < n && is_word_char(s[j])) ++j;
      current.emplace_back(s.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  flush();
  return sentences;
}

// Individual rules can be switched off for invariance testing.
struct ScoreOptions {
  bool elongation_rule = true;
  bool capitalization_rule = true;
  bool booster_rule = true;
  bool negation_rule = true;
};

inline SentimentScore score_text(std::string_view s, const SentimentLexicon& lex,
                                 const ScoreOptions& opt = {}) {
  const auto clamp_mag = [](int m) { return std::clamp(m, 1, 5); };
  const auto lookup_key = [](const std::string& token) {
    return text::collapse_elongation(text::to_lower(token));
  };

  int text_pos = 1;
  int text_neg = -1;
  for (const auto& sentence : tokenize(s, lex)) {
    int sent_pos = 1;
    int sent_neg = -1;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const std::string& token = sentence[i];
      std::optional<int> strength;
      if (auto it = lex.emoticons.find(token); it != lex.emoticons.end())
        strength = it->second;
      else
        strength = lex.term_strength(lookup_key(token));
      if (!strength) continue;

      int sign = *strength > 0 ? 1 : -1;
      int mag = clamp_mag(*strength * sign);
      if (opt.elongation_rule && text::has_elongation(text::to_lower(token)))
        mag = clamp_mag(mag + 1);
      if (opt.capitalization_rule && text::is_shouting(token)) mag = clamp_mag(mag + 1);
      if (opt.booster_rule && i >= 1) {
        if (auto it = lex.boosters.find(lookup_key(sentence[i - 1])); it != lex.boosters.end())
          mag = clamp_mag(mag + it->second);
      }
      if (opt.negation_rule) {
        const bool negated =
            (i >= 1 && lex.negators.count(lookup_key(sentence[i - 1]))) ||
            (i >= 2 && lex.negators.count(lookup_key(sentence[i - 2])));
        if (negated) {
          sign = -sign;
          mag = clamp_mag(mag - 1);
        }
      }
      if (mag < 2) continue;
      if (sign > 0)
        sent_pos = std::max(sent_pos, mag);
      else
        sent_neg = std::min(sent_neg, -mag);
    }
    text_pos = std::max(text_pos, sent_pos);
    text_neg = std::min(text_neg, sent_neg);
  }
  return SentimentScore(text_pos, text_neg);
}

// Scores each post over its preprocessed text; the stored post is the
// original. Order preserved.
inline std::vector<ScoredPost> score_posts(const std::vector<Post>& posts,
                                           const SentimentLexicon& lex) {
  std::vector<ScoredPost> out;
  out.reserve(posts.size());
  for (const Post& post : posts)
    out.push_back({post, score_text(preprocess(post).text, lex)});
  return out;
}

}  // namespace repute
