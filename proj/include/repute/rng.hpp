#pragma once
// SplitMix64: tiny published PRNG with fully portable output. Generator
// identity is part of the corpus generator's reproducibility contract, so
// std:: distributions (whose mappings are implementation-defined) are not
// used anywhere near it.

#include <cstdint>

namespace repute {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo mapping: the bias is irrelevant for synthetic
  // data and the result is identical on every platform.
  std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform in [0, 1) with 53 significant bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace repute
