#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "longpath/rng.hpp"

namespace longpath {

/// Bijection of {0, ..., r-1}; `image[i]` is the image of i.
struct Permutation {
  std::vector<std::uint32_t> image;

  std::size_t size() const noexcept { return image.size(); }
  std::uint32_t operator()(std::size_t i) const { return image[i]; }
  bool valid() const;
  Permutation inverse() const;

  static Permutation identity(std::size_t r);
  /// From the one-line notation with values 1..r, e.g. {2, 3, 4, 1, 6, 5}.
  static Permutation from_one_based(std::initializer_list<std::uint32_t> values);
  static Permutation from_one_based(const std::vector<std::uint32_t>& values);

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation random_permutation(std::size_t r, Engine& rng);

/// Cycles, each starting at its smallest element, ordered by that element.
std::vector<std::vector<std::uint32_t>> cycles(const Permutation& p);

std::size_t longest_cycle(const Permutation& p);

/// Calls fn for every permutation of size r in lexicographic order.
template <typename Fn>
void for_each_permutation(std::size_t r, Fn&& fn);

}  // namespace longpath

#include <algorithm>

template <typename Fn>
void longpath::for_each_permutation(std::size_t r, Fn&& fn) {
  Permutation p = Permutation::identity(r);
  do {
    fn(static_cast<const Permutation&>(p));
  } while (std::next_permutation(p.image.begin(), p.image.end()));
}
