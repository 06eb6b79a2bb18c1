#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "longpath/graph.hpp"
#include "longpath/permutation.hpp"
#include "longpath/rs_graph.hpp"
#include "longpath/stream.hpp"

namespace longpath {

using Bits = std::vector<std::uint8_t>;

// ---------------------------------------------------------------- D_SLP(r)
//
// Directed tripartite graph: a_i = i, b^1_i = r + i, b^2_i = 2r + i.
// M: a_i -> b^1_i when coin i is 0, a_i -> b^2_i when it is 1.
// N^c: b^c_i -> a_sigma(i) for c = 1, 2.

struct SLPInstance {
  std::size_t r = 0;
  Bits coins;
  Permutation sigma;
  std::vector<Edge> m, n1, n2;
  Graph graph;
  PathWitness witness;  // along a longest cycle of sigma, 2 lc(sigma) edges
};

SLPInstance make_slp(const Permutation& sigma, const Bits& coins);
SLPInstance gen_slp(std::size_t r, std::uint64_t seed);

/// Twin pairs (b^1_i, b^2_i).
std::vector<std::pair<Vertex, Vertex>> slp_twins(const SLPInstance& inst);

/// lp(H) = 2 lc(sigma): start at the unmatched twin of the cycle's last B
/// vertex and walk the cycle.
std::size_t slp_exact_lp(const SLPInstance& inst);

/// lp of H with the twins contracted: 2 lc(sigma) - 1.
std::size_t slp_contracted_lp(const SLPInstance& inst);

// ---------------------------------------------------------------- D_LP(n)
//
// RS sides A^H = [0, n), B^H = [n, 2n) map to A = [0, n), B_1 = [n, 2n),
// B_2 = [2n, 3n). M edges run A -> B, N_J edges B -> A.

struct DLPInstance {
  RSGraph rs;
  std::vector<Bits> coins;                   // per matching, per edge
  std::size_t j = 1;                         // special matching, 1-based
  std::vector<std::vector<Edge>> m;          // M_1..M_t after the B_1/B_2 split
  Permutation n_matching;                    // A'-index -> B'-index, ascending order of A', B'
  std::vector<Edge> n1, n2;
  Graph graph;
  PathWitness witness;
};

DLPInstance gen_dlp(const RSGraph& rs, std::uint64_t seed);

/// Empty when the path with first and last edge removed only uses edges of
/// M_J, N_J^1, N_J^2; otherwise the first offending edge. Throws
/// std::invalid_argument for a path of length < 2 or one invalid in the graph.
std::optional<Edge> verify_trimmed_path(const DLPInstance& inst, const PathWitness& q);

// ---------------------------------------------------------------- undirected Index reduction
//
// A = [0, n), B_1 = [n, 2n), B_2 = [2n, 3n), subdivision vertices from 3n.

struct UndirReductionInstance {
  RSGraph rs;
  Bits x;
  std::size_t j = 1, ell = 4;      // J and the subdivision length
  std::size_t i_star = 1, j_star = 1;  // (i* - 1) r + j* = J, both 1-based
  Permutation pi;                  // pi(j) in 0-based form
  Bits y;
  std::vector<std::vector<Edge>> m;  // Alice's M_1..M_t
  Permutation n_matching;
  std::vector<Edge> n1, n2;
  std::vector<Vertex> gateway_base;  // P' vertices in visiting order
  std::vector<Vertex> gateway;       // P after subdivision
  std::vector<Edge> fan;             // F
  std::vector<char> in_v_prime;      // A' u B_1' u B_2'
  Edge special;                      // the copy of e_{i*, pi^-1(j*)} present in G
  std::size_t vertex_count = 0;
  std::size_t alice_events = 0;
  Graph graph;
  EventStream stream;
  PathWitness witness;
  std::vector<Vertex> r_path;  // longest path in M_{i*} u N^1 u N^2

  std::size_t n() const noexcept { return rs.n; }
  std::size_t r() const noexcept { return rs.r(); }
};

UndirReductionInstance gen_undirected_reduction(const RSGraph& rs, const Bits& x, std::size_t j, std::size_t ell,
                                                std::uint64_t seed);

/// (3(n - r) - 1) l + 1: the witness length before the R part.
std::size_t undir_witness_base(const UndirReductionInstance& inst);

/// 3(n - r) l + 2 |Q n M_{i*}| + 2 l.
std::size_t undir_length_bound(const UndirReductionInstance& inst, const PathWitness& q);

/// X[J] recovered from a path containing the special edge, nullopt otherwise.
std::optional<int> decode_undirected(const UndirReductionInstance& inst, const PathWitness& q);

// ---------------------------------------------------------------- insertion-deletion reduction
//
// a^x = x - 1, b_1^x = n + x - 1, b_2^x = 2n + x - 1 for x in [1, n].

struct InsDelReductionInstance {
  std::size_t n = 0, big_n = 0, side = 0;  // side = sqrt(N)
  std::size_t j = 1, i_star = 1, j_star = 1;
  Bits x;
  Permutation pi1, pi2;
  Bits y_prime, z, y;  // n x n, row-major, (i, j) 1-based at (i-1) n + (j-1)
  std::vector<std::pair<std::size_t, std::size_t>> deleted_index;  // I, 1-based
  std::vector<Edge> alice, deletions, bob_inserts;
  std::vector<Edge> m, n1, n2;
  Edge special_b1, special_b2;
  std::size_t alice_events = 0;
  Graph graph;
  EventStream stream;
  PathWitness witness;

  std::uint8_t y_at(std::size_t i, std::size_t jj) const { return y[(i - 1) * n + (jj - 1)]; }
  std::uint8_t z_at(std::size_t i, std::size_t jj) const { return z[(i - 1) * n + (jj - 1)]; }
  Vertex a(std::size_t i) const { return static_cast<Vertex>(pi1(i - 1)); }
  Vertex b(std::size_t copy, std::size_t jj) const { return static_cast<Vertex>(copy * n + pi2(jj - 1)); }
};

InsDelReductionInstance gen_insdel_reduction(const Bits& x, std::size_t n, std::size_t j, std::uint64_t seed);

/// Final graph computed from the edge sets (Alice - deletions + E_2), for
/// comparison with the replayed stream.
Graph insdel_intended_graph(const InsDelReductionInstance& inst);

/// Vertices of M u N_1 u N_2.
std::vector<Vertex> insdel_planted_vertices(const InsDelReductionInstance& inst);

/// 2 (n - sqrt N) - 1.
std::size_t insdel_witness_floor(const InsDelReductionInstance& inst);

/// 6 sqrt N + 4 + 2 |M n Q|.
std::size_t insdel_length_bound(const InsDelReductionInstance& inst, const PathWitness& q);

std::optional<int> decode_insdel(const InsDelReductionInstance& inst, const PathWitness& q);

/// Number of path edges that belong to `set` (undirected comparison).
std::size_t count_edges_in(const PathWitness& q, const std::vector<Edge>& set);

}  // namespace longpath
