#ifndef CCT_STREAM_HPP
#define CCT_STREAM_HPP

#include <cstdint>
#include <random>

#include "cct/rational.hpp"

namespace cct {

/// Mixes a salt into a seed; used to derive independent sub-streams
/// (retry counters, per-colour streams) from one user-facing seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Deterministic stream of small exact rationals. All randomized behaviour in
/// the library is driven by this; identical seeds give identical output on
/// every platform (mt19937_64 raw output is fully specified).
class RationalStream {
 public:
  static constexpr std::int64_t kDenominator = 1 << 20;

  explicit RationalStream(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next_u64() { return rng_(); }

  /// Uniform rational in [-1, 1) with denominator 2^20.
  Rational unit() {
    std::int64_t raw = static_cast<std::int64_t>(next_u64() % (2 * kDenominator));
    return Rational(raw - kDenominator, kDenominator);
  }

  /// Uniform rational in (0, 1] with denominator 2^20.
  Rational positive_unit() {
    std::int64_t raw = static_cast<std::int64_t>(next_u64() % kDenominator);
    return Rational(raw + 1, kDenominator);
  }

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cct

#endif  // CCT_STREAM_HPP
