#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace rankmine {

/// Portable seeded generator. The raw stream is std::mt19937_64, whose
/// output sequence is fixed by the C++ standard; the derived draws below
/// are defined bit-exactly so results match across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n) by rejection: raw values at or above the
  /// largest multiple of n are redrawn, then reduced mod n. n >= 1.
  std::uint64_t uniform(std::uint64_t n);

  /// True with probability p: the top 53 bits as a double in [0, 1) < p.
  bool bernoulli(double p);

  /// Fisher-Yates from the last slot down: swap i with uniform(i + 1).
  template <class T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i-- > 1;) {
      std::swap(values[i], values[uniform(i + 1)]);
    }
  }
  template <class T>
  void shuffle(std::vector<T>& values) {
    shuffle(std::span<T>(values));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rankmine
