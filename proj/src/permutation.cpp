#include "longpath/permutation.hpp"

#include <stdexcept>

namespace longpath {

bool Permutation::valid() const {
  std::vector<char> hit(image.size(), 0);
  for (const std::uint32_t v : image) {
    if (v >= image.size() || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image.resize(image.size());
  for (std::uint32_t i = 0; i < image.size(); ++i) inv.image[image[i]] = i;
  return inv;
}

Permutation Permutation::identity(std::size_t r) {
  Permutation p;
  p.image.resize(r);
  for (std::uint32_t i = 0; i < r; ++i) p.image[i] = i;
  return p;
}

Permutation Permutation::from_one_based(std::initializer_list<std::uint32_t> values) {
  return from_one_based(std::vector<std::uint32_t>(values));
}

Permutation Permutation::from_one_based(const std::vector<std::uint32_t>& values) {
  Permutation p;
  for (const std::uint32_t v : values) {
    if (v == 0) throw std::invalid_argument("one-based permutation contains 0");
    p.image.push_back(v - 1);
  }
  if (!p.valid()) throw std::invalid_argument("not a permutation");
  return p;
}

Permutation random_permutation(std::size_t r, Engine& rng) {
  Permutation p = Permutation::identity(r);
  shuffle(p.image, rng);
  return p;
}

std::vector<std::vector<std::uint32_t>> cycles(const Permutation& p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    auto& c = out.emplace_back();
    for (std::uint32_t v = s; !seen[v]; v = p(v)) {
      seen[v] = 1;
      c.push_back(v);
    }
  }
  return out;
}

std::size_t longest_cycle(const Permutation& p) {
  std::size_t best = 0;
  std::vector<char> seen(p.size(), 0);
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    std::size_t len = 0;
    for (std::uint32_t v = s; !seen[v]; v = p(v)) {
      seen[v] = 1;
      ++len;
    }
    best = std::max(best, len);
  }
  return best;
}

}  // namespace longpath
