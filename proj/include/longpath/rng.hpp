#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace longpath {

__extension__ typedef unsigned __int128 uint128;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Fixed stream identifiers for seed derivation. Every random choice in the
/// library is drawn from an engine seeded with
///   derive_seed(master, stream, index) = mix64(mix64(master ^ mix64(stream)) + index)
/// so that replays are reproducible from one 64-bit master seed and components
/// never share an engine.
enum class SeedStream : std::uint64_t {
  graph = 1,
  order = 2,
  sampler = 3,
  sketch = 4,
  extract = 5,
  coins = 6,
  matching = 7,
  index = 8,
  permutation = 9,
  bits = 10,
  trial = 11,
  decoys = 12,
};

constexpr std::uint64_t derive_seed(std::uint64_t master, SeedStream stream,
                                    std::uint64_t index = 0) noexcept {
  return mix64(mix64(master ^ mix64(static_cast<std::uint64_t>(stream))) + index);
}

/// Keyed 64-bit hash used wherever an item needs a reproducible pseudo-random
/// value (reservoir priorities, sketch level and bucket assignment).
struct KeyedHash {
  std::uint64_t k0 = 0;
  std::uint64_t k1 = 0;

  KeyedHash() = default;
  explicit KeyedHash(std::uint64_t seed) : k0(mix64(seed)), k1(mix64(seed ^ 0x5851f42d4c957f2dULL)) {}

  constexpr std::uint64_t operator()(std::uint64_t key) const noexcept {
    return mix64(mix64(key ^ k0) + k1);
  }
};

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine{seed}; }

// Portable bounded draw (Lemire); std distributions differ across stdlibs.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    const uint128 product = static_cast<uint128>(x) * bound;
    if (static_cast<std::uint64_t>(product) >= threshold)
      return static_cast<std::uint64_t>(product >> 64);
  }
}

inline double uniform_unit(Engine& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool fair_coin(Engine& rng) { return (rng() >> 63) != 0; }

template <typename T>
void shuffle(std::span<T> items, Engine& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = uniform_below(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

template <typename T>
void shuffle(std::vector<T>& items, Engine& rng) {
  shuffle(std::span<T>(items), rng);
}

}  // namespace longpath
