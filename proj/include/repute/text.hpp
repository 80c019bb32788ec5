#pragma once
// Byte-level text helpers shared by ingestion, scoring, classification and
// frequency counting. All matching is ASCII-oriented: bytes >= 0x80 pass
// through untouched and act as word boundaries.

#include <cstddef>
#include <string>
#include <string_view>

namespace repute::text {

inline bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_alnum(char c) { return is_ascii_alpha(c) || is_ascii_digit(c); }

// Handle alphabet: letters, digits, underscore.
inline bool is_handle_char(char c) { return is_ascii_alnum(c) || c == '_'; }

inline char to_lower_ascii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_lower_ascii(c);
  return out;
}

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Collapses whitespace runs to single spaces and trims both ends.
inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      if (!out.empty()) pending_space = true;
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

// Counts non-overlapping whole-word occurrences of `term` in `haystack`.
// Both arguments must already be lowercase. A match is whole-word when the
// characters adjacent to it are non-alphanumeric or the text edge.
inline std::size_t count_word_occurrences(std::string_view haystack, std::string_view term) {
  if (term.empty() || haystack.size() < term.size()) return 0;
  std::size_t count = 0;
  std::size_t i = 0;
  const std::size_t n = haystack.size(), m = term.size();
  while (i + m <= n) {
    if (haystack.compare(i, m, term) == 0 && (i == 0 || !is_ascii_alnum(haystack[i - 1])) &&
        (i + m == n || !is_ascii_alnum(haystack[i + m]))) {
      ++count;
      i += m;
    } else {
      ++i;
    }
  }
  return count;
}

inline bool contains_whole_word(std::string_view haystack, std::string_view term) {
  return count_word_occurrences(haystack, term) > 0;
}

// True when the (lowercase) token contains a run of >= 3 identical letters.
inline bool has_elongation(std::string_view lower_token) {
  std::size_t run = 1;
  for (std::size_t i = 1; i < lower_token.size(); ++i) {
    if (is_ascii_alpha(lower_token[i]) && lower_token[i] == lower_token[i - 1]) {
      if (++run >= 3) return true;
    } else {
      run = 1;
    }
  }
  return false;
}

// Collapses letter runs of length >= 3 down to exactly 2 ("goooood" -> "good").
inline std::string collapse_elongation(std::string_view lower_token) {
  std::string out;
  out.reserve(lower_token.size());
  std::size_t run = 0;
  for (std::size_t i = 0; i < lower_token.size(); ++i) {
    const char c = lower_token[i];
    if (i > 0 && is_ascii_alpha(c) && c == lower_token[i - 1])
      ++run;
    else
      run = 1;
    if (run <= 2) out.push_back(c);
  }
  return out;
}

// True for tokens of length >= 2 made entirely of uppercase letters.
inline bool is_shouting(std::string_view token) {
  if (token.size() < 2) return false;
  for (char c : token)
    if (c < 'A' || c > 'Z') return false;
  return true;
}

}  // namespace repute::text
