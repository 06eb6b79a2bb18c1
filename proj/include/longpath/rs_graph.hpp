#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "longpath/graph.hpp"

namespace longpath {

/// Bipartite graph with sides A = [0, n) and B = [n, 2n) whose edges are
/// partitioned into matchings. Matching edges are stored as (a, b)
/// with a in A and b in B, in the order that defines "the j-th edge".
struct RSGraph {
  std::size_t n = 0;
  std::vector<std::vector<Edge>> matchings;

  std::size_t t() const noexcept { return matchings.size(); }
  std::size_t r() const noexcept { return matchings.empty() ? 0 : matchings.front().size(); }
  Graph base() const;

  friend bool operator==(const RSGraph&, const RSGraph&) = default;
};

enum class RSViolationKind { not_bipartite, not_a_partition, not_a_matching, unequal_sizes, not_induced };

struct RSViolation {
  RSViolationKind kind;
  std::size_t matching = 0;  // 0-based index of the first failing matching
  std::string detail;
};

const char* to_string(RSViolationKind kind);

/// Checks that `matchings` partition E(g) into induced matchings of equal size.
std::optional<RSViolation> verify_rs_decomposition(const Graph& g, std::size_t n,
                                                   const std::vector<std::vector<Edge>>& matchings);

/// t = 1 family: the matching {a_i b_i : i < r} on sides of size n.
RSGraph trivial_rs(std::size_t n, std::size_t r);

/// Backtracking search for a decomposition of g (sides of size n, 2n <= 16)
/// into induced matchings of equal size, trying t = 1, 2, ... in turn.
std::optional<RSGraph> decompose_rs(const Graph& g, std::size_t n);

/// Random bipartite graphs on sides of size n with the given edge count,
/// redrawn until decompose_rs succeeds with t >= min_t.
RSGraph random_small_rs(std::size_t n, std::size_t edges, std::size_t min_t, std::uint64_t seed);

// Edge-list text with markers:
//   # graph directed=0 n=<2n>
//   # rs n=<n>
//   # matching 1
//   a b
//   ...
void write_rs(std::ostream& out, const RSGraph& rs);
RSGraph read_rs(std::istream& in);
void save_rs(const std::filesystem::path& file, const RSGraph& rs);
RSGraph load_rs(const std::filesystem::path& file);

}  // namespace longpath
