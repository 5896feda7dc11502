#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <utility>

namespace mofs {

// SplitMix64: state advances by the golden-ratio increment, output is the
// standard three-step finalizer. Chosen because it is trivially reimplemented
// bit-exactly in any language.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  std::uint64_t operator()() noexcept { return next(); }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  /// Uniform integer in [0, bound) by rejection sampling; bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform integer in the closed range [lo, hi]; requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept;

 private:
  std::uint64_t state_;
};

/// The SplitMix64 output finalizer applied to a single word.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// 64-bit FNV-1a over the bytes of `text`.
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// Seed of an independent stream identified by (master, label, a, b):
///   h = mix64(master + inc); h = mix64(h ^ fnv1a64(label));
///   h = mix64(h ^ (a + inc));  h = mix64(h ^ (b + 2*inc)).
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t a = 0,
                          std::uint64_t b = 0) noexcept;

/// Fisher-Yates from the back, drawing j uniformly in [0, i].
template <typename T>
void shuffle(std::span<T> values, SplitMix64& rng) noexcept {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    using std::swap;
    swap(values[i - 1], values[j]);
  }
}

}  // namespace mofs
