#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <sstream>

#include "longpath/exact.hpp"
#include "longpath/hard_instances.hpp"
#include "longpath/rs_graph.hpp"
#include "oracles.hpp"

using namespace longpath;

namespace {

std::size_t lp(const Graph& g) { return exact_longest_path(g).path.length(); }

std::size_t contracted_lp(const SLPInstance& inst) {
  const auto twins = slp_twins(inst);
  return lp(contract_pairs(inst.graph, twins).graph);
}

Bits coins_from_mask(std::size_t r, std::size_t mask) {
  Bits b(r);
  for (std::size_t i = 0; i < r; ++i) b[i] = (mask >> i) & 1;
  return b;
}

RSGraph diagonal_rs(std::size_t t) {
  RSGraph rs{t, {}};
  for (std::size_t i = 0; i < t; ++i)
    rs.matchings.push_back({{static_cast<Vertex>(i), static_cast<Vertex>(t + i)}});
  return rs;
}

}  // namespace

TEST_CASE("RS decomposition checks") {
  // perfect matching on sides of 3
  const RSGraph pm = trivial_rs(3, 3);
  CHECK_FALSE(verify_rs_decomposition(pm.base(), 3, pm.matchings));

  // K_{2,2} as two matchings of size 2: each spans all four edges
  const std::vector<Edge> k22{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const Graph g = Graph::build(4, k22, false);
  const auto bad = verify_rs_decomposition(g, 2, {{{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}});
  REQUIRE(bad);
  CHECK(bad->kind == RSViolationKind::not_induced);

  const RSGraph two = trivial_rs(3, 2);
  CHECK_FALSE(verify_rs_decomposition(two.base(), 3, two.matchings));
  CHECK(two.r() == 2);
  CHECK(two.t() == 1);

  CHECK(verify_rs_decomposition(g, 2, {{{0, 2}, {1, 3}}})->kind == RSViolationKind::not_a_partition);
  CHECK(verify_rs_decomposition(g, 2, {{{0, 2}, {0, 3}}, {{1, 2}, {1, 3}}})->kind == RSViolationKind::not_a_matching);
}

TEST_CASE("RS search and file format") {
  const RSGraph rs = random_small_rs(4, 4, 2, 11);
  CHECK(rs.t() >= 2);
  CHECK_FALSE(verify_rs_decomposition(rs.base(), rs.n, rs.matchings));
  const auto again = decompose_rs(rs.base(), rs.n);
  REQUIRE(again);
  CHECK_FALSE(verify_rs_decomposition(rs.base(), rs.n, again->matchings));

  std::stringstream ss;
  write_rs(ss, rs);
  CHECK(read_rs(ss) == rs);
}

TEST_CASE("permutation cycles") {
  CHECK(longest_cycle(Permutation::identity(5)) == 1);
  const Permutation fig = Permutation::from_one_based({2, 3, 4, 1, 6, 5});
  CHECK(fig.valid());
  CHECK(longest_cycle(fig) == 4);
  CHECK(cycles(fig).size() == 2);
  CHECK(fig.inverse().inverse() == fig);

  std::size_t total = 0, count = 0;
  for_each_permutation(4, [&](const Permutation& p) {
    total += longest_cycle(p);
    ++count;
  });
  CHECK(count == 24);
  CHECK(total == 67);  // mean 67/24

  Engine rng = make_engine(4);
  for (int i = 0; i < 20; ++i) CHECK(random_permutation(30, rng).valid());
}

TEST_CASE("the six-vertex example permutation") {
  const Permutation fig = Permutation::from_one_based({2, 3, 4, 1, 6, 5});
  for (const std::size_t mask : {0u, 21u, 63u}) {
    const SLPInstance inst = make_slp(fig, coins_from_mask(6, mask));
    CHECK(contracted_lp(inst) == 7);
    CHECK(slp_contracted_lp(inst) == 7);
    // H itself: the free twin of the last B vertex extends the cycle walk by one edge
    CHECK(lp(inst.graph) == 8);
    CHECK(slp_exact_lp(inst) == 8);
    CHECK_FALSE(validate_path(inst.graph, inst.witness));
    CHECK(inst.witness.length() == 8);
  }
}

TEST_CASE("single-element and identity permutations") {
  for (const std::size_t c : {0u, 1u}) {
    const SLPInstance one = make_slp(Permutation::identity(1), coins_from_mask(1, c));
    CHECK(oracle::longest_path(one.graph) == 2);
    CHECK(slp_exact_lp(one) == 2);
    CHECK(contracted_lp(one) == 1);
  }
  const SLPInstance id = make_slp(Permutation::identity(3), coins_from_mask(3, 5));
  CHECK(contracted_lp(id) == 1);
  CHECK(slp_exact_lp(id) == 2);
}

TEST_CASE("slp lengths agree with the exact solver") {
  for (std::size_t r = 1; r <= 4; ++r) {
    for_each_permutation(r, [&](const Permutation& sigma) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        const SLPInstance inst = make_slp(sigma, coins_from_mask(r, mask));
        CHECK(lp(inst.graph) == slp_exact_lp(inst));
        CHECK(contracted_lp(inst) == slp_contracted_lp(inst));
        CHECK(slp_contracted_lp(inst) == 2 * longest_cycle(sigma) - 1);
      }
    });
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SLPInstance inst = gen_slp(5 + seed % 2, seed);
    CHECK(oracle::longest_path(inst.graph) == slp_exact_lp(inst));
  }
}

TEST_CASE("slp structure") {
  const SLPInstance inst = gen_slp(8, 3);
  CHECK(inst.graph.vertex_count() == 24);
  CHECK(inst.m.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const Edge e = inst.m[i];
    CHECK(e.u == i);
    CHECK(e.v == (inst.coins[i] ? 16 + i : 8 + i));
    CHECK(inst.n1[i].v == inst.sigma(inst.n1[i].u - 8));
    CHECK(inst.n2[i].u == inst.n1[i].u + 8);
    CHECK(inst.n2[i].v == inst.n1[i].v);
  }
}

TEST_CASE("dlp with a single matching") {
  const RSGraph rs = trivial_rs(4, 4);
  const DLPInstance inst = gen_dlp(rs, 5);
  CHECK(inst.j == 1);
  CHECK(inst.n1.size() == 4);
  CHECK_FALSE(validate_path(inst.graph, inst.witness));
  for (const Edge& e : inst.n1) CHECK(e.u >= 4);  // B -> A
}

TEST_CASE("dlp special index is uniform") {
  const RSGraph rs = diagonal_rs(3);
  REQUIRE_FALSE(verify_rs_decomposition(rs.base(), 3, rs.matchings));
  std::vector<double> hits(3, 0.0);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) hits[gen_dlp(rs, seed).j - 1] += 1;
  double chi = 0.0;
  for (const double h : hits) chi += (h - 1000.0 / 3) * (h - 1000.0 / 3) / (1000.0 / 3);
  const boost::math::chi_squared dist(2);
  CHECK(chi <= boost::math::quantile(boost::math::complement(dist, 1e-3)));
}

TEST_CASE("trimmed paths stay inside the special matching") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RSGraph rs = random_small_rs(3, 2 + seed % 4, 1, seed);
    const DLPInstance inst = gen_dlp(rs, seed);
    REQUIRE(for_each_simple_path(inst.graph, [&](std::span<const Vertex> p) {
      if (p.size() >= 3) CHECK_FALSE(verify_trimmed_path(inst, PathWitness{{p.begin(), p.end()}}));
      return true;
    }));
  }
  const DLPInstance inst = gen_dlp(trivial_rs(3, 3), 1);
  const Edge e = inst.graph.edges()[0];
  const Vertex w = inst.graph.neighbors(e.v).empty() ? e.v : inst.graph.neighbors(e.v)[0];
  if (w != e.v && w != e.u) CHECK_FALSE(verify_trimmed_path(inst, {{e.u, e.v, w}}));
  CHECK_THROWS_AS(verify_trimmed_path(inst, {{e.u, e.v}}), std::invalid_argument);
}

TEST_CASE("undirected reduction witness") {
  const RSGraph rs = trivial_rs(3, 2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (const std::size_t ell : {4u, 5u}) {
      const Bits x{static_cast<std::uint8_t>(seed & 1), static_cast<std::uint8_t>((seed >> 1) & 1)};
      const UndirReductionInstance inst = gen_undirected_reduction(rs, x, 1 + seed % 2, ell, seed);
      CHECK_FALSE(validate_path(inst.graph, inst.witness));
      CHECK(undir_witness_base(inst) == 2 * ell + 1);
      CHECK(inst.witness.length() == undir_witness_base(inst) + inst.r_path.size() - 1);
      CHECK(apply_stream(inst.stream) == inst.graph);

      // R is a longest path of M_{i*} u N^1 u N^2 (brute force on those edges alone)
      std::vector<Edge> local = inst.m[inst.i_star - 1];
      local.insert(local.end(), inst.n1.begin(), inst.n1.end());
      local.insert(local.end(), inst.n2.begin(), inst.n2.end());
      CHECK(inst.r_path.size() - 1 == oracle::longest_path(Graph::build(3 * 3, local, false)));
    }
  }
}

TEST_CASE("undirected reduction with N a transposition") {
  // N swaps the two M_{i*} edges, so M u N^1 u N^2 is connected on all six
  // vertices of V'; its longest path has 4 edges and the witness 2*4 + 1 + 4.
  const RSGraph rs = trivial_rs(3, 2);
  std::size_t seen = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const UndirReductionInstance inst = gen_undirected_reduction(rs, {0, 0}, 1, 4, seed);
    if (inst.n_matching(0) != 1) {
      CHECK(inst.r_path.size() - 1 == 2);
      continue;
    }
    ++seen;
    CHECK(inst.r_path.size() - 1 == 4);
    CHECK(inst.witness.length() == 13);
    CHECK_FALSE(validate_path(inst.graph, inst.witness));
  }
  CHECK(seen > 0);
}

TEST_CASE("undirected decoder") {
  const RSGraph rs = trivial_rs(4, 3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (const std::uint8_t bit : {0, 1}) {
      Bits x{1, 0, 1};
      const std::size_t j = 1 + seed % 3;
      x[j - 1] = bit;
      const UndirReductionInstance inst = gen_undirected_reduction(rs, x, j, 4, seed);
      const PathWitness special{{inst.special.u, inst.special.v}};
      CHECK_FALSE(validate_path(inst.graph, special));
      const auto out = decode_undirected(inst, special);
      const bool ambiguous = inst.graph.has_edge(inst.special.u, inst.special.v + (inst.special.v < 2 * 4 ? 4 : -4));
      if (ambiguous) {
        CHECK_FALSE(out);
      } else {
        REQUIRE(out);
        CHECK(*out == bit);
      }
      CHECK_FALSE(decode_undirected(inst, PathWitness{inst.gateway}));
    }
  }
}

TEST_CASE("undirected reduction rejects bad input") {
  const RSGraph rs = trivial_rs(3, 2);
  CHECK_THROWS_AS(gen_undirected_reduction(rs, {0}, 1, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_undirected_reduction(rs, {0, 1}, 3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_undirected_reduction(rs, {0, 1}, 1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_undirected_reduction(trivial_rs(2, 2), {0, 1}, 1, 4, 1), std::invalid_argument);
}

TEST_CASE("insertion-deletion reduction on n = 4, N = 4") {
  const Bits x{1, 0, 0, 1};
  const InsDelReductionInstance inst = gen_insdel_reduction(x, 4, 1, 7);
  CHECK(inst.side == 2);
  CHECK(inst.i_star == 1);
  CHECK(inst.j_star == 1);
  CHECK(inst.graph == insdel_intended_graph(inst));
  CHECK_FALSE(validate_path(inst.graph, inst.witness));
  CHECK(inst.witness.length() == 7);
  CHECK(insdel_witness_floor(inst) == 3);
  CHECK(inst.witness.length() >= insdel_witness_floor(inst));
  CHECK(count_edges_in(inst.witness, inst.m) == 4);
}

TEST_CASE("insertion-deletion reduction invariants") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& [n, big_n] : {std::pair<std::size_t, std::size_t>{4, 4}, {8, 4}, {9, 9}}) {
      Engine rng = make_engine(seed);
      Bits x(big_n);
      for (auto& b : x) b = fair_coin(rng);
      const std::size_t j = 1 + seed % big_n;
      const InsDelReductionInstance inst = gen_insdel_reduction(x, n, j, seed);
      CHECK(inst.graph == insdel_intended_graph(inst));
      CHECK_FALSE(validate_path(inst.graph, inst.witness));
      CHECK(inst.witness.length() >= insdel_witness_floor(inst));
      CHECK(inst.witness.length() <= insdel_length_bound(inst, inst.witness));
      const auto out = decode_insdel(inst, inst.witness);
      REQUIRE(out);
      CHECK(*out == x[j - 1]);

      const auto vs = insdel_planted_vertices(inst);
      CHECK(induced_subgraph(inst.graph, vs).graph.edge_count() == inst.m.size() + inst.n1.size() + inst.n2.size());
    }
  }
}

TEST_CASE("insertion-deletion decoder") {
  for (const std::uint8_t bit : {0, 1}) {
    Bits x{0, 1, 1, 0};
    x[2] = bit;
    const InsDelReductionInstance inst = gen_insdel_reduction(x, 4, 3, 2);
    CHECK(decode_insdel(inst, inst.witness) == std::optional<int>(bit));
    // a single M edge away from the special vertices carries no bit
    for (const Edge& e : inst.m) {
      if (e == inst.special_b1 || e == inst.special_b2) continue;
      const PathWitness q{{e.u, e.v}};
      if (e.u == inst.special_b1.u) continue;
      CHECK_FALSE(decode_insdel(inst, q));
    }
  }
  CHECK_THROWS_AS(gen_insdel_reduction({0, 1, 0}, 4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_insdel_reduction({0, 1, 0, 1}, 4, 5, 1), std::invalid_argument);
}
