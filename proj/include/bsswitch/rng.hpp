#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace bsswitch {

/// SplitMix64 finalizer. Used to derive independent seeds from a master
/// seed and a tuple of indices.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master) noexcept { return mix64(master); }

template <typename... Rest>
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t first, Rest... rest) noexcept {
  return derive_seed(mix64(master) ^ mix64(first + 0x632be59bd9b4e019ULL), static_cast<std::uint64_t>(rest)...);
}

/// Portable seeded random stream.
///
/// Backed by std::mt19937_64, whose output sequence for a given seed is fixed
/// by the C++ standard. Uniform doubles are built from the top 53 bits of one
/// 64-bit draw, so every implementation that follows this recipe produces the
/// same values (std::uniform_real_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream number `index` of the family rooted at `master`.
  static Rng stream(std::uint64_t master, std::uint64_t index) { return Rng(derive_seed(master, index)); }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Anything that hands out uniform doubles in [0, 1). Tests substitute a
/// scripted source to pin exact draws.
template <typename G>
concept UniformSource = requires(G& g) {
  { g.uniform() } -> std::convertible_to<double>;
};

}  // namespace bsswitch
