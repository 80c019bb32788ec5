#pragma once
// Shared helpers for the test suites.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "repute/core.hpp"
#include "repute/rng.hpp"

namespace testing {

// Runs f and reports the Errc it threw, if any.
inline std::optional<repute::Errc> thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const repute::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline repute::Post make_post(std::string id, std::int64_t ts, std::string text,
                              std::int64_t retweets = 0, std::string author = "someone") {
  repute::Post p;
  p.id = std::move(id);
  p.timestamp = ts;
  p.text = std::move(text);
  p.retweet_count = retweets;
  p.author_handle = std::move(author);
  return p;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static repute::SplitMix64 rng(0xD1CEu ^ static_cast<std::uint64_t>(::getpid()));
    path_ = std::filesystem::temp_directory_path() /
            ("repute_" + tag + "_" + std::to_string(rng.next()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace testing
