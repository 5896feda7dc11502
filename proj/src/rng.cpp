#include "mofs/rng.hpp"

namespace mofs {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += kIncrement;
  return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  // Accept x only below the largest multiple of bound representable in 64 bits.
  const std::uint64_t reject_from = -bound % bound;  // == 2^64 mod bound
  for (;;) {
    const std::uint64_t x = next();
    if (x >= reject_from) return x % bound;
  }
}

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  return lo + static_cast<std::int64_t>(below(span));
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t a,
                          std::uint64_t b) noexcept {
  constexpr std::uint64_t inc = SplitMix64::kIncrement;
  std::uint64_t h = mix64(master + inc);
  h = mix64(h ^ fnv1a64(label));
  h = mix64(h ^ (a + inc));
  h = mix64(h ^ (b + 2 * inc));
  return h;
}

}  // namespace mofs
