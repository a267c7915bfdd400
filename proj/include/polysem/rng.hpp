#pragma once
#include <cstdint>

namespace polysem {

// Per-purpose substreams: drawing from one stream never shifts another,
// so e.g. enabling extra diagnostics cannot change a training trajectory.
enum class Stream : std::uint64_t {
  init = 0x11,
  noise = 0x22,
  perturb = 0x33,
  misc = 0x44,
};

// SplitMix64. Small state, splittable by seed mixing, and the output is
// identical on every platform with IEEE-754 doubles.
class Rng {
 public:
  Rng() = default;
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng for_stream(std::uint64_t seed, Stream stream);

  std::uint64_t next_u64();

  // Uniform in (0, 1]; never returns 0, safe under log().
  double next_unit();

  // Uniform in [-1, 1).
  double next_signed_unit();

  bool next_bit();

  // Standard normal via Box-Muller; the spare value is cached.
  double next_gaussian();

 private:
  std::uint64_t state_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace polysem
