#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace meta_ea {

/// SplitMix64 step-and-finalize. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// SplitMix64 generator. One word of state, so a fresh stream per gene costs
/// nothing to set up; micro-level streams draw only a few numbers each.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept
  {
    const std::uint64_t out = mix64(state_);
    state_ += 0x9e3779b97f4a7c15ULL;
    return out;
  }

  friend bool operator==(const SplitMix64&, const SplitMix64&) = default;

private:
  std::uint64_t state_;
};

using Rng = SplitMix64;

/// Derives a child seed from a parent seed and a sequence of indices.
///
/// Each index is folded in order, so derive_seed(s, {a, b}) and
/// derive_seed(s, {b, a}) name different streams. Used everywhere a
/// random stream must depend only on its logical coordinates (run,
/// generation, slot, gene) and never on scheduling.
std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> path) noexcept;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

// Stream tags keep the different consumers of one run seed apart.
namespace stream {
inline constexpr std::uint64_t macro = 0x6d6163726fULL;      // selection / variation
inline constexpr std::uint64_t init_eval = 0x696e6974ULL;    // generation-0 evaluations
inline constexpr std::uint64_t offspring_eval = 0x6f6666ULL; // steady-state offspring
inline constexpr std::uint64_t macro_run = 0x72756eULL;      // harness: per macro run
} // namespace stream

} // namespace meta_ea
