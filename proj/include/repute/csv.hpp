#pragma once
// Minimal RFC 4180 reader/writer. The reader supports quoted fields with
// embedded commas, doubled quotes and line breaks; the writer quotes only
// when a field requires it.

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "repute/core.hpp"

namespace repute::csv {

inline bool needs_quoting(std::string_view field) {
  for (char c : field)
    if (c == ',' || c == '"' || c == '\n' || c == '\r') return true;
  return false;
}

inline std::string escape_field(std::string_view field) {
  if (!needs_quoting(field)) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline void write_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os.put(',');
    os << escape_field(fields[i]);
  }
  os.put('\n');
}

// Streaming record reader. Throws Error(MalformedRecord) on broken quoting
// and resynchronizes at the next line so callers may keep reading.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Number of the record most recently returned (1-based).
  std::size_t record_number() const { return record_; }

  std::optional<std::vector<std::string>> next() {
    int first = in_.peek();
    if (first == std::char_traits<char>::eof()) return std::nullopt;

    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool quoted_field = false;

    int ci;
    while ((ci = in_.get()) != std::char_traits<char>::eof()) {
      const char c = static_cast<char>(ci);
      if (in_quotes) {
        if (c == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            in_quotes = false;
          }
        } else {
          field.push_back(c);
        }
        continue;
      }
      if (quoted_field && c != ',' && c != '\n' && c != '\r') {
        skip_to_line_end();
        ++record_;
        fail(Errc::MalformedRecord,
             "record " + std::to_string(record_) + ": unexpected character after closing quote");
      }
      if (c == '"' && field.empty() && !quoted_field) {
        in_quotes = true;
        quoted_field = true;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
        quoted_field = false;
      } else if (c == '\r') {
        if (in_.peek() == '\n') in_.get();
        break;
      } else if (c == '\n') {
        break;
      } else {
        field.push_back(c);
      }
    }
    if (in_quotes) {
      ++record_;
      fail(Errc::MalformedRecord,
           "record " + std::to_string(record_) + ": unterminated quoted field");
    }
    fields.push_back(std::move(field));
    ++record_;
    return fields;
  }

 private:
  void skip_to_line_end() {
    int ci;
    while ((ci = in_.get()) != std::char_traits<char>::eof())
      if (ci == '\n') break;
  }

  std::istream& in_;
  std::size_t record_ = 0;
};

}  // namespace repute::csv
