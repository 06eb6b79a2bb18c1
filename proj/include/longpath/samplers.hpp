#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "longpath/graph.hpp"
#include "longpath/rng.hpp"
#include "longpath/stream.hpp"

namespace longpath {

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
namespace field {

inline constexpr std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;

constexpr std::uint64_t reduce(uint128 x) noexcept {
  std::uint64_t lo = static_cast<std::uint64_t>(x & modulus) + static_cast<std::uint64_t>(x >> 61);
  lo = (lo & modulus) + (lo >> 61);
  return lo >= modulus ? lo - modulus : lo;
}
constexpr std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t s = a + b;
  return s >= modulus ? s - modulus : s;
}
constexpr std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept { return a >= b ? a - b : a + modulus - b; }
constexpr std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept {
  return reduce(static_cast<uint128>(a) * b);
}
constexpr std::uint64_t pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t result = 1;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}
constexpr std::uint64_t from_signed(std::int64_t v) noexcept {
  return v >= 0 ? static_cast<std::uint64_t>(v) % modulus
                : sub(0, static_cast<std::uint64_t>(-(v + 1)) % modulus + 1);
}
constexpr std::uint64_t inverse(std::uint64_t a) noexcept { return pow(a, modulus - 2); }

}  // namespace field

/// Uniform sample F of distinct edges drawn from a stream's final support.
struct SampleF {
  std::vector<Edge> edges;
  std::size_t target = 0;

  std::size_t achieved() const noexcept { return edges.size(); }
};

/// ceil(constant * n * ln n); 0 when n <= 1.
std::size_t default_sample_size(std::size_t n, double constant = 10.0);

/// Reservoir over distinct keys. Each key gets a reproducible pseudo-random
/// priority and the k smallest priorities are retained, so repeated
/// insertions of the same edge cannot bias the sample and the reservoir is a
/// uniform k-subset of the distinct keys seen so far.
class ReservoirSampler {
 public:
  ReservoirSampler(std::size_t k, std::uint64_t seed);

  void offer(std::uint64_t key);
  std::size_t seen() const noexcept { return seen_; }
  std::size_t size() const noexcept { return heap_.size(); }
  std::vector<std::uint64_t> keys() const;

 private:
  std::size_t k_;
  KeyedHash priority_;
  std::size_t seen_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> heap_;  // max-heap on (priority, key)
  std::unordered_set<std::uint64_t> members_;
};

/// Throws StreamError if the stream contains a deletion.
SampleF reservoir_sample(const EventStream& s, std::size_t k, std::uint64_t seed);

struct L0Cell {
  std::int64_t count = 0;
  std::uint64_t key_sum = 0;      // sum of c_e * key(e) mod p
  std::uint64_t fingerprint = 0;  // sum of c_e * r^key(e) mod p

  friend bool operator==(const L0Cell&, const L0Cell&) = default;
};

enum class L0Status { item, empty, fail };

struct L0Result {
  L0Status status = L0Status::empty;
  std::uint64_t key = 0;
};

/// Linear l0-sampling sketch. A key lives on levels 0..level(key), where
/// level(key) is the number of trailing zeros of a keyed hash (so level j
/// holds each key with probability 2^-j). Every level has `buckets()` cells;
/// a cell is 1-sparse when its count, id-sum and polynomial fingerprint are
/// consistent with a single key. A query scans from the deepest level up and,
/// at the first level holding a recoverable cell, returns the recovered key
/// with the smallest selection hash. The procedure is symmetric in the keys,
/// so every support element is equally likely.
class L0Sketch {
 public:
  /// `universe` bounds the keys; `delta` sets the bucket count per level.
  L0Sketch(std::uint64_t universe, double delta, std::uint64_t seed);

  void update(std::uint64_t key, std::int64_t change);
  L0Result query() const;

  /// Cell-wise sum; both sketches must come from the same (universe, delta, seed).
  L0Sketch& operator+=(const L0Sketch& other);
  friend bool operator==(const L0Sketch& a, const L0Sketch& b) { return a.cells_ == b.cells_; }

  std::size_t levels() const noexcept { return levels_; }
  std::size_t buckets() const noexcept { return buckets_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  std::size_t level_of(std::uint64_t key) const noexcept;
  std::size_t bucket_of(std::uint64_t key, std::size_t level) const noexcept;
  const L0Cell& cell(std::size_t level, std::size_t bucket) const { return cells_[level * buckets_ + bucket]; }
  /// The key stored alone in the cell, if the cell is 1-sparse.
  std::optional<std::uint64_t> recover(const L0Cell& c) const;

 private:
  std::uint64_t universe_;
  std::size_t levels_;
  std::size_t buckets_;
  KeyedHash level_hash_;
  KeyedHash bucket_hash_;
  KeyedHash select_hash_;
  std::uint64_t base_;  // fingerprint evaluation point r
  std::vector<L0Cell> cells_;
};

/// K independent l0 sketches fed from one pass. The sketches share no state,
/// so ingestion is parallel over sketches; `ingest_serial` is the reference
/// event-major loop and must produce identical cells.
class L0SketchBank {
 public:
  L0SketchBank(std::size_t count, std::uint64_t universe, double delta, std::uint64_t seed);

  void ingest(const EventStream& s);
  void ingest_serial(const EventStream& s);
  std::vector<L0Result> query_all() const;

  std::size_t size() const noexcept { return sketches_.size(); }
  const L0Sketch& sketch(std::size_t i) const { return sketches_[i]; }
  std::size_t cell_count() const noexcept;
  friend bool operator==(const L0SketchBank& a, const L0SketchBank& b) { return a.sketches_ == b.sketches_; }

 private:
  std::vector<L0Sketch> sketches_;
};

/// Invertible Bloom lookup table: a linear sketch from which the whole
/// support can be listed once it holds at most about capacity/1.3 keys.
class SparseRecovery {
 public:
  /// `base` = 0 derives the fingerprint base from the seed.
  SparseRecovery(std::size_t capacity, std::uint64_t universe, std::uint64_t seed, std::uint64_t base = 0);

  void update(std::uint64_t key, std::int64_t change);
  /// `power` must be base()^key mod p.
  void update(std::uint64_t key, std::int64_t change, std::uint64_t power);

  /// (key, multiplicity) pairs, or nullopt when peeling gets stuck.
  std::optional<std::vector<std::pair<std::uint64_t, std::int64_t>>> decode() const;

  std::uint64_t base() const noexcept { return base_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }

 private:
  static constexpr std::size_t hashes = 3;
  std::size_t position(std::uint64_t key, std::size_t which) const noexcept;

  std::uint64_t universe_;
  std::size_t table_size_;
  KeyedHash position_hash_[hashes];
  std::uint64_t base_;
  std::vector<L0Cell> cells_;
};

/// Samples up to k distinct keys of the final support in one pass: keys are
/// subsampled geometrically onto levels (as in L0Sketch), each level keeps a
/// SparseRecovery of capacity ~4k, and the query lists the sparsest level that
/// decodes with at least k keys and keeps a uniform k-subset of it (rejection
/// of the surplus). A support smaller than k is returned whole.
class SubsampledRecoverySampler {
 public:
  SubsampledRecoverySampler(std::size_t k, std::uint64_t universe, std::uint64_t seed);

  void update(std::uint64_t key, std::int64_t change);
  std::vector<std::uint64_t> sample() const;

  std::size_t level_count() const noexcept { return levels_.size(); }
  std::size_t cell_count() const noexcept;

 private:
  std::size_t k_;
  std::uint64_t seed_;
  KeyedHash level_hash_;
  std::vector<SparseRecovery> levels_;
};

enum class TurnstileMethod {
  subsampled_recovery,  // default
  sketch_bank,          // K = 4k independent L0Sketches, duplicates rejected
};

struct TurnstileSample {
  SampleF sample;
  std::size_t sketch_cells = 0;
};

TurnstileSample sample_support_turnstile(const EventStream& s, std::size_t k, std::uint64_t seed,
                                         double delta = 0.01,
                                         TurnstileMethod method = TurnstileMethod::subsampled_recovery);

}  // namespace longpath
