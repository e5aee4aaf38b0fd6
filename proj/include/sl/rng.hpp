#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace sl {

/// FNV-1a 64-bit string hash. Used to derive per-candidate RNG streams from
/// candidate names so that removing one candidate from a library does not
/// shift the streams of the others.
std::uint64_t fnv1a64(std::string_view s);

/// splitmix64 mixing step; also used to expand seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// xoshiro256** generator seeded through splitmix64.
///
/// The stream is defined by this implementation alone (no standard-library
/// distributions are involved anywhere), so sequences are bit-identical
/// across platforms and toolchains for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Derives an independent stream from a base seed and an arbitrary list of
  /// stream labels (fold index, candidate-name hash, ...). Mixing is
  /// order-sensitive: from(s, {a,b}) != from(s, {b,a}) in general.
  static Rng from(std::uint64_t seed, std::initializer_list<std::uint64_t> labels);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, n). Unbiased (rejection sampling); n >= 1.
  std::uint64_t bounded(std::uint64_t n);

  /// Standard normal via the polar (Marsaglia) method. One value per call;
  /// the paired value is discarded to keep the stream layout simple.
  double normal();

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(bounded(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t s_[4];
};

}  // namespace sl
