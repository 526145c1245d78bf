#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace fiatsim {

/// Seeded random stream. The draw sequence depends only on the seed: the
/// engine is mt19937_64 (whose output is fixed by the standard) and all
/// derived draws are implemented here rather than through the
/// implementation-defined std distributions.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Uniform draw from [0, 1) with 53 bits of resolution.
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Fisher-Yates shuffle.
  template <typename T> void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      using std::swap;
      swap(items[i - 1], items[uniform_index(i)]);
    }
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

} // namespace fiatsim
