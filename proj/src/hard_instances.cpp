#include "longpath/hard_instances.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "longpath/exact.hpp"
#include "longpath/rng.hpp"

namespace longpath {

namespace {

Bits random_bits(std::size_t count, Engine& rng) {
  Bits out(count);
  for (auto& b : out) b = fair_coin(rng) ? 1 : 0;
  return out;
}

// Walk the longest cycle (c_0, ..., c_{L-1}) of `next`:
//   twin(c_{L-1}), a(c_0), mate(c_0), a(c_1), ..., a(c_{L-1}), mate(c_{L-1}).
// The first step uses the N edge out of the twin, so the walk has 2L edges.
PathWitness cycle_witness(const Permutation& next, const std::function<Vertex(std::uint32_t)>& a,
                          const std::function<Vertex(std::uint32_t)>& mate,
                          const std::function<Vertex(std::uint32_t)>& twin) {
  const auto cs = cycles(next);
  if (cs.empty()) return {};
  const auto& c = *std::max_element(cs.begin(), cs.end(),
                                    [](const auto& x, const auto& y) { return x.size() < y.size(); });
  PathWitness p;
  p.vertices.push_back(twin(c.back()));
  for (const std::uint32_t i : c) {
    p.vertices.push_back(a(i));
    p.vertices.push_back(mate(i));
  }
  return p;
}

bool contains_undirected(const std::vector<Edge>& path_edges, Edge e) {
  const Edge x = normalized(e, false);
  return std::any_of(path_edges.begin(), path_edges.end(), [&](Edge f) { return normalized(f, false) == x; });
}

EventStream inserts(std::size_t n, bool directed, const std::vector<Edge>& edges) {
  EventStream s{n, directed, {}};
  for (const Edge& e : edges) s.events.push_back({EventKind::insert, e});
  return s;
}

}  // namespace

std::size_t count_edges_in(const PathWitness& q, const std::vector<Edge>& set) {
  std::set<Edge> keys;
  for (const Edge& e : set) keys.insert(normalized(e, false));
  std::size_t count = 0;
  for (const Edge& e : path_edges(q)) count += keys.contains(normalized(e, false));
  return count;
}

// ---------------------------------------------------------------- D_SLP

SLPInstance make_slp(const Permutation& sigma, const Bits& coins) {
  const std::size_t r = sigma.size();
  if (!sigma.valid() || coins.size() != r || r == 0) throw std::invalid_argument("need a permutation and r coins, r >= 1");
  SLPInstance inst{r, coins, sigma, {}, {}, {}, {}, {}};
  for (Vertex i = 0; i < r; ++i) {
    inst.m.push_back({i, static_cast<Vertex>((coins[i] ? 2 * r : r) + i)});
    inst.n1.push_back({static_cast<Vertex>(r + i), sigma(i)});
    inst.n2.push_back({static_cast<Vertex>(2 * r + i), sigma(i)});
  }
  std::vector<Edge> all = inst.m;
  all.insert(all.end(), inst.n1.begin(), inst.n1.end());
  all.insert(all.end(), inst.n2.begin(), inst.n2.end());
  inst.graph = Graph::build(3 * r, all, true);
  inst.witness = cycle_witness(
      sigma, [](std::uint32_t i) { return static_cast<Vertex>(i); },
      [&](std::uint32_t i) { return inst.m[i].v; },
      [&](std::uint32_t i) { return static_cast<Vertex>((coins[i] ? r : 2 * r) + i); });
  return inst;
}

SLPInstance gen_slp(std::size_t r, std::uint64_t seed) {
  Engine coin_rng = make_engine(derive_seed(seed, SeedStream::coins));
  Engine perm_rng = make_engine(derive_seed(seed, SeedStream::permutation));
  const Bits coins = random_bits(r, coin_rng);
  return make_slp(random_permutation(r, perm_rng), coins);
}

std::vector<std::pair<Vertex, Vertex>> slp_twins(const SLPInstance& inst) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex i = 0; i < inst.r; ++i)
    out.emplace_back(static_cast<Vertex>(inst.r + i), static_cast<Vertex>(2 * inst.r + i));
  return out;
}

std::size_t slp_exact_lp(const SLPInstance& inst) { return 2 * longest_cycle(inst.sigma); }

std::size_t slp_contracted_lp(const SLPInstance& inst) { return 2 * longest_cycle(inst.sigma) - 1; }

// ---------------------------------------------------------------- D_LP

DLPInstance gen_dlp(const RSGraph& rs, std::uint64_t seed) {
  if (const auto bad = verify_rs_decomposition(rs.base(), rs.n, rs.matchings))
    throw std::invalid_argument(std::string("invalid RS graph: ") + to_string(bad->kind));
  const std::size_t n = rs.n;
  DLPInstance inst;
  inst.rs = rs;

  Engine coin_rng = make_engine(derive_seed(seed, SeedStream::coins));
  std::vector<Edge> all;
  for (const auto& mh : rs.matchings) {
    inst.coins.push_back(random_bits(mh.size(), coin_rng));
    auto& mi = inst.m.emplace_back();
    for (std::size_t k = 0; k < mh.size(); ++k)
      mi.push_back({mh[k].u, static_cast<Vertex>(mh[k].v + (inst.coins.back()[k] ? n : 0))});
    all.insert(all.end(), mi.begin(), mi.end());
  }

  Engine index_rng = make_engine(derive_seed(seed, SeedStream::index));
  inst.j = 1 + uniform_below(index_rng, rs.t());
  const auto& mj = rs.matchings[inst.j - 1];
  std::vector<Vertex> a_prime, b_prime;
  for (const Edge& e : mj) {
    a_prime.push_back(e.u);
    b_prime.push_back(e.v);
  }
  std::sort(a_prime.begin(), a_prime.end());
  std::sort(b_prime.begin(), b_prime.end());

  Engine match_rng = make_engine(derive_seed(seed, SeedStream::matching));
  inst.n_matching = random_permutation(a_prime.size(), match_rng);
  for (std::size_t i = 0; i < a_prime.size(); ++i) {
    const Vertex b = b_prime[inst.n_matching(i)];
    inst.n1.push_back({b, a_prime[i]});
    inst.n2.push_back({static_cast<Vertex>(b + n), a_prime[i]});
  }
  all.insert(all.end(), inst.n1.begin(), inst.n1.end());
  all.insert(all.end(), inst.n2.begin(), inst.n2.end());
  inst.graph = Graph::build(3 * n, all, true);

  // next(i) = position of N-partner of M_J(a'_i)'s B-vertex.
  const auto& m_split = inst.m[inst.j - 1];
  std::vector<Vertex> mate(a_prime.size()), twin(a_prime.size());
  const Permutation inv = inst.n_matching.inverse();
  Permutation next = Permutation::identity(a_prime.size());
  for (std::size_t i = 0; i < a_prime.size(); ++i) {
    const auto it = std::find_if(m_split.begin(), m_split.end(), [&](Edge e) { return e.u == a_prime[i]; });
    mate[i] = it->v;
    const Vertex bh = it->v >= 2 * n ? it->v - static_cast<Vertex>(n) : it->v;
    twin[i] = it->v >= 2 * n ? bh : static_cast<Vertex>(bh + n);
    const std::size_t bpos = std::lower_bound(b_prime.begin(), b_prime.end(), bh) - b_prime.begin();
    next.image[i] = inv(bpos);
  }
  inst.witness = cycle_witness(
      next, [&](std::uint32_t i) { return a_prime[i]; }, [&](std::uint32_t i) { return mate[i]; },
      [&](std::uint32_t i) { return twin[i]; });
  return inst;
}

std::optional<Edge> verify_trimmed_path(const DLPInstance& inst, const PathWitness& q) {
  if (q.length() < 2) throw std::invalid_argument("trimmed-path check needs length >= 2");
  if (const auto bad = validate_path(inst.graph, q))
    throw std::invalid_argument(std::string("path invalid: ") + to_string(bad->kind));
  std::set<Edge> allowed(inst.m[inst.j - 1].begin(), inst.m[inst.j - 1].end());
  allowed.insert(inst.n1.begin(), inst.n1.end());
  allowed.insert(inst.n2.begin(), inst.n2.end());
  const auto edges = path_edges(q);
  for (std::size_t k = 1; k + 1 < edges.size(); ++k)
    if (!allowed.contains(edges[k])) return edges[k];
  return std::nullopt;
}

// ---------------------------------------------------------------- undirected reduction

UndirReductionInstance gen_undirected_reduction(const RSGraph& rs, const Bits& x, std::size_t j, std::size_t ell,
                                                std::uint64_t seed) {
  const std::size_t n = rs.n, r = rs.r(), t = rs.t();
  if (ell < 4) throw std::invalid_argument("subdivision length must be at least 4");
  if (x.size() != r * t) throw std::invalid_argument("|X| must equal r * t");
  if (j < 1 || j > r * t) throw std::invalid_argument("J out of range");
  if (n <= r) throw std::invalid_argument("need n > r so the gateway path is nonempty");
  if (const auto bad = verify_rs_decomposition(rs.base(), n, rs.matchings))
    throw std::invalid_argument(std::string("invalid RS graph: ") + to_string(bad->kind));

  UndirReductionInstance inst;
  inst.rs = rs;
  inst.x = x;
  inst.j = j;
  inst.ell = ell;
  inst.i_star = (j - 1) / r + 1;
  inst.j_star = (j - 1) % r + 1;

  Engine perm_rng = make_engine(derive_seed(seed, SeedStream::permutation));
  Engine bit_rng = make_engine(derive_seed(seed, SeedStream::bits));
  inst.pi = random_permutation(r, perm_rng);
  inst.y = random_bits(r * t, bit_rng);

  // Alice: e_ij goes to B_2 iff (X xor Y) at (i-1) r + pi(j) is 1.
  std::vector<Edge> alice;
  for (std::size_t i = 0; i < t; ++i) {
    auto& mi = inst.m.emplace_back();
    for (std::size_t jj = 0; jj < r; ++jj) {
      const std::size_t pos = i * r + inst.pi(jj);
      const Edge e = rs.matchings[i][jj];
      mi.push_back({e.u, static_cast<Vertex>(e.v + ((x[pos] ^ inst.y[pos]) ? n : 0))});
    }
    alice.insert(alice.end(), mi.begin(), mi.end());
  }
  inst.alice_events = alice.size();
  const std::size_t jj_special = inst.pi.inverse()(inst.j_star - 1);
  inst.special = inst.m[inst.i_star - 1][jj_special];

  // V' = A' u B_1' u B_2'.
  const auto& mh = rs.matchings[inst.i_star - 1];
  std::vector<Vertex> a_prime, b_prime;
  inst.in_v_prime.assign(3 * n, 0);
  for (const Edge& e : mh) {
    a_prime.push_back(e.u);
    b_prime.push_back(e.v);
    inst.in_v_prime[e.u] = inst.in_v_prime[e.v] = inst.in_v_prime[e.v + n] = 1;
  }
  std::sort(a_prime.begin(), a_prime.end());
  std::sort(b_prime.begin(), b_prime.end());

  // P' visits A \ A', then B_1 \ B_1', then B_2 \ B_2', ascending within each.
  for (Vertex v = 0; v < 3 * n; ++v)
    if (!inst.in_v_prime[v]) inst.gateway_base.push_back(v);
  Vertex next_id = static_cast<Vertex>(3 * n);
  std::vector<Edge> bob;
  inst.gateway.push_back(inst.gateway_base.front());
  for (std::size_t k = 0; k + 1 < inst.gateway_base.size(); ++k) {
    for (std::size_t s = 1; s < ell; ++s) inst.gateway.push_back(next_id++);
    inst.gateway.push_back(inst.gateway_base[k + 1]);
  }
  for (std::size_t k = 0; k + 1 < inst.gateway.size(); ++k)
    bob.push_back(normalized({inst.gateway[k], inst.gateway[k + 1]}, false));
  inst.vertex_count = next_id;

  const Vertex tail = inst.gateway.back();
  for (Vertex v = 0; v < 3 * n; ++v)
    if (inst.in_v_prime[v]) inst.fan.push_back(normalized({tail, v}, false));
  bob.insert(bob.end(), inst.fan.begin(), inst.fan.end());

  Engine match_rng = make_engine(derive_seed(seed, SeedStream::matching));
  inst.n_matching = random_permutation(r, match_rng);
  for (std::size_t i = 0; i < r; ++i) {
    const Vertex b = b_prime[inst.n_matching(i)];
    inst.n1.push_back({a_prime[i], b});
    inst.n2.push_back({a_prime[i], static_cast<Vertex>(b + n)});
  }
  bob.insert(bob.end(), inst.n1.begin(), inst.n1.end());
  bob.insert(bob.end(), inst.n2.begin(), inst.n2.end());

  std::vector<Edge> everything = alice;
  everything.insert(everything.end(), bob.begin(), bob.end());
  inst.stream = inserts(inst.vertex_count, false, everything);
  inst.graph = apply_stream(inst.stream);

  // R: exact longest path among M_{i*} u N^1 u N^2, on the vertices V'.
  std::vector<Vertex> vp;
  for (Vertex v = 0; v < 3 * n; ++v)
    if (inst.in_v_prime[v]) vp.push_back(v);
  std::vector<Edge> local;
  auto local_id = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(vp.begin(), vp.end(), v) - vp.begin());
  };
  for (const auto* set : {&inst.m[inst.i_star - 1], &inst.n1, &inst.n2})
    for (const Edge& e : *set) local.push_back(normalized({local_id(e.u), local_id(e.v)}, false));
  const ExactResult rp = exact_longest_path(Graph::build(vp.size(), local, false));
  for (const Vertex v : rp.path.vertices) inst.r_path.push_back(vp[v]);

  inst.witness.vertices = inst.gateway;
  inst.witness.vertices.insert(inst.witness.vertices.end(), inst.r_path.begin(), inst.r_path.end());
  return inst;
}

std::size_t undir_witness_base(const UndirReductionInstance& inst) {
  return (3 * (inst.n() - inst.r()) - 1) * inst.ell + 1;
}

std::size_t undir_length_bound(const UndirReductionInstance& inst, const PathWitness& q) {
  return 3 * (inst.n() - inst.r()) * inst.ell + 2 * count_edges_in(q, inst.m[inst.i_star - 1]) + 2 * inst.ell;
}

std::optional<int> decode_undirected(const UndirReductionInstance& inst, const PathWitness& q) {
  const auto edges = path_edges(q);
  const Vertex a = inst.special.u;
  const Vertex b = inst.special.v >= 2 * inst.n() ? inst.special.v - static_cast<Vertex>(inst.n()) : inst.special.v;
  // An edge Bob inserted himself carries no information: in a simple graph it
  // may coincide with Alice's edge, and then both copies are present.
  for (const std::size_t copy : {0, 1}) {
    const Edge e{a, static_cast<Vertex>(b + copy * inst.n())};
    const auto& own = copy ? inst.n2 : inst.n1;
    if (contains_undirected(own, e)) continue;
    if (contains_undirected(edges, e)) return static_cast<int>(copy) ^ inst.y[inst.j - 1];
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- insertion-deletion reduction

InsDelReductionInstance gen_insdel_reduction(const Bits& x, std::size_t n, std::size_t j, std::uint64_t seed) {
  const std::size_t big_n = x.size();
  std::size_t side = 0;
  while ((side + 1) * (side + 1) <= big_n) ++side;
  if (big_n == 0 || side * side != big_n) throw std::invalid_argument("N must be a positive perfect square");
  if (side > n) throw std::invalid_argument("sqrt(N) must not exceed n");
  if (j < 1 || j > big_n) throw std::invalid_argument("J out of range");

  InsDelReductionInstance inst;
  inst.n = n;
  inst.big_n = big_n;
  inst.side = side;
  inst.j = j;
  inst.x = x;
  inst.i_star = (j - 1) / side + 1;
  inst.j_star = (j - 1) % side + 1;

  Engine p1 = make_engine(derive_seed(seed, SeedStream::permutation, 1));
  Engine p2 = make_engine(derive_seed(seed, SeedStream::permutation, 2));
  Engine zr = make_engine(derive_seed(seed, SeedStream::bits, 1));
  Engine yr = make_engine(derive_seed(seed, SeedStream::bits, 2));
  inst.pi1 = random_permutation(n, p1);
  inst.pi2 = random_permutation(n, p2);
  inst.z = random_bits(n * n, zr);
  inst.y_prime = random_bits(n * n, yr);
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t jj = 0; jj < side; ++jj) inst.y_prime[i * n + jj] = x[i * side + jj];
  inst.y.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) inst.y[k] = inst.y_prime[k] ^ inst.z[k];

  auto alice_edge = [&](std::size_t i, std::size_t jj) {
    return normalized({inst.a(i), inst.b(1 + inst.y_at(i, jj), jj)}, false);
  };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t jj = 1; jj <= n; ++jj) inst.alice.push_back(alice_edge(i, jj));
  inst.alice_events = inst.alice.size();

  const std::size_t is = inst.i_star, js = inst.j_star;
  auto on_d0 = [&](std::size_t i, std::size_t jj) { return i - is == jj - js; };
  auto on_d1 = [&](std::size_t i, std::size_t jj) { return i - is == jj - js + 1; };
  for (std::size_t i = is; i <= n; ++i)
    for (std::size_t jj = js; jj <= n; ++jj) {
      if (on_d0(i, jj)) {
        inst.m.push_back(alice_edge(i, jj));
      } else if (on_d1(i, jj)) {
        inst.n1.push_back(normalized({inst.a(i), inst.b(1, jj)}, false));
        inst.n2.push_back(normalized({inst.a(i), inst.b(2, jj)}, false));
        inst.bob_inserts.push_back(normalized({inst.a(i), inst.b(2 - inst.y_at(i, jj), jj)}, false));
      } else {
        inst.deleted_index.emplace_back(i, jj);
        inst.deletions.push_back(alice_edge(i, jj));
      }
    }
  inst.special_b1 = normalized({inst.a(is), inst.b(1, js)}, false);
  inst.special_b2 = normalized({inst.a(is), inst.b(2, js)}, false);

  inst.stream = inserts(3 * n, false, inst.alice);
  for (const Edge& e : inst.deletions) inst.stream.events.push_back({EventKind::remove, e});
  for (const Edge& e : inst.bob_inserts) inst.stream.events.push_back({EventKind::insert, e});
  inst.graph = apply_stream(inst.stream);

  // a(i*), M, N, M, ... along the two diagonals.
  auto& w = inst.witness.vertices;
  w.push_back(inst.a(is));
  for (std::size_t k = 0;; ++k) {
    if (js + k > n) break;
    w.push_back(inst.b(1 + inst.y_at(is + k, js + k), js + k));
    if (is + k + 1 > n) break;
    w.push_back(inst.a(is + k + 1));
  }
  return inst;
}

Graph insdel_intended_graph(const InsDelReductionInstance& inst) {
  std::set<Edge> edges(inst.alice.begin(), inst.alice.end());
  for (const Edge& e : inst.deletions) edges.erase(e);
  edges.insert(inst.bob_inserts.begin(), inst.bob_inserts.end());
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::build(3 * inst.n, list, false);
}

std::vector<Vertex> insdel_planted_vertices(const InsDelReductionInstance& inst) {
  std::set<Vertex> vs;
  for (const auto* set : {&inst.m, &inst.n1, &inst.n2})
    for (const Edge& e : *set) {
      vs.insert(e.u);
      vs.insert(e.v);
    }
  return {vs.begin(), vs.end()};
}

std::size_t insdel_witness_floor(const InsDelReductionInstance& inst) {
  const std::size_t twice = 2 * (inst.n - inst.side);
  return twice == 0 ? 0 : twice - 1;
}

std::size_t insdel_length_bound(const InsDelReductionInstance& inst, const PathWitness& q) {
  return 6 * inst.side + 4 + 2 * count_edges_in(q, inst.m);
}

std::optional<int> decode_insdel(const InsDelReductionInstance& inst, const PathWitness& q) {
  const auto edges = path_edges(q);
  const int z = inst.z_at(inst.i_star, inst.j_star);
  if (contains_undirected(edges, inst.special_b1)) return z;
  if (contains_undirected(edges, inst.special_b2)) return 1 - z;
  return std::nullopt;
}

}  // namespace longpath
