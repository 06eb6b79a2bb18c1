#include "longpath/samplers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace longpath {

std::size_t default_sample_size(std::size_t n, double constant) {
  if (n <= 1) return 0;
  const double nd = static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(constant * nd * std::log(nd)));
}

// ---------------------------------------------------------------- reservoir

ReservoirSampler::ReservoirSampler(std::size_t k, std::uint64_t seed) : k_(k), priority_(seed) {
  heap_.reserve(k);
  members_.reserve(k);
}

void ReservoirSampler::offer(std::uint64_t key) {
  ++seen_;
  if (k_ == 0 || members_.contains(key)) return;
  const std::pair<std::uint64_t, std::uint64_t> item{priority_(key), key};
  if (heap_.size() < k_) {
    heap_.push_back(item);
    std::push_heap(heap_.begin(), heap_.end());
    members_.insert(key);
    return;
  }
  if (!(item < heap_.front())) return;
  std::pop_heap(heap_.begin(), heap_.end());
  members_.erase(heap_.back().second);
  heap_.back() = item;
  std::push_heap(heap_.begin(), heap_.end());
  members_.insert(key);
}

std::vector<std::uint64_t> ReservoirSampler::keys() const {
  std::vector<std::uint64_t> out;
  out.reserve(heap_.size());
  for (const auto& [priority, key] : heap_) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

SampleF reservoir_sample(const EventStream& s, std::size_t k, std::uint64_t seed) {
  ReservoirSampler sampler(k, derive_seed(seed, SeedStream::sampler));
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    if (s.events[i].kind == EventKind::remove)
      throw StreamError("reservoir sampling needs an insertion-only stream", i);
    sampler.offer(edge_key(s.events[i].edge, s.n, s.directed));
  }
  SampleF out;
  out.target = k;
  for (const std::uint64_t key : sampler.keys()) out.edges.push_back(edge_from_key(key, s.n));
  return out;
}

// ---------------------------------------------------------------- 1-sparse cells

namespace {

void add_to_cell(L0Cell& c, std::uint64_t key, std::int64_t change, std::uint64_t power) {
  const std::uint64_t f = field::from_signed(change);
  c.count += change;
  c.key_sum = field::add(c.key_sum, field::mul(f, key % field::modulus));
  c.fingerprint = field::add(c.fingerprint, field::mul(f, power));
}

bool is_zero(const L0Cell& c) { return c.count == 0 && c.key_sum == 0 && c.fingerprint == 0; }

// Key of a cell holding a single key with nonzero multiplicity, if consistent.
std::optional<std::uint64_t> pure_key(const L0Cell& c, std::uint64_t universe, std::uint64_t base) {
  if (c.count == 0) return std::nullopt;
  const std::uint64_t f = field::from_signed(c.count);
  if (f == 0) return std::nullopt;
  const std::uint64_t key = c.count == 1 ? c.key_sum : field::mul(c.key_sum, field::inverse(f));
  if (key >= universe) return std::nullopt;
  if (field::mul(f, field::pow(base, key)) != c.fingerprint) return std::nullopt;
  return key;
}

std::uint64_t nonzero_base(std::uint64_t seed) {
  return 2 + mix64(seed) % (field::modulus - 3);
}

std::size_t ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

}  // namespace

// ---------------------------------------------------------------- L0Sketch

L0Sketch::L0Sketch(std::uint64_t universe, double delta, std::uint64_t seed)
    : universe_(std::max<std::uint64_t>(universe, 1)),
      levels_(ceil_log2(universe_) + 1),
      buckets_(std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(std::log2(1.0 / delta))))),
      level_hash_(mix64(seed ^ 0x11)),
      bucket_hash_(mix64(seed ^ 0x22)),
      select_hash_(mix64(seed ^ 0x33)),
      base_(nonzero_base(seed ^ 0x44)),
      cells_(levels_ * buckets_) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
}

std::size_t L0Sketch::level_of(std::uint64_t key) const noexcept {
  const std::uint64_t h = level_hash_(key);
  const std::size_t z = h == 0 ? levels_ - 1 : static_cast<std::size_t>(std::countr_zero(h));
  return std::min(z, levels_ - 1);
}

std::size_t L0Sketch::bucket_of(std::uint64_t key, std::size_t level) const noexcept {
  return static_cast<std::size_t>(bucket_hash_(key + (static_cast<std::uint64_t>(level) << 58)) % buckets_);
}

void L0Sketch::update(std::uint64_t key, std::int64_t change) {
  const std::uint64_t power = field::pow(base_, key);
  const std::size_t top = level_of(key);
  for (std::size_t level = 0; level <= top; ++level)
    add_to_cell(cells_[level * buckets_ + bucket_of(key, level)], key, change, power);
}

std::optional<std::uint64_t> L0Sketch::recover(const L0Cell& c) const { return pure_key(c, universe_, base_); }

L0Result L0Sketch::query() const {
  for (std::size_t level = levels_; level-- > 0;) {
    bool found = false;
    std::uint64_t best_key = 0;
    std::uint64_t best_rank = 0;
    for (std::size_t b = 0; b < buckets_; ++b) {
      const auto key = recover(cells_[level * buckets_ + b]);
      if (!key || level_of(*key) < level || bucket_of(*key, level) != b) continue;
      const std::uint64_t rank = select_hash_(*key);
      if (!found || rank < best_rank) {
        found = true;
        best_key = *key;
        best_rank = rank;
      }
    }
    if (found) return {L0Status::item, best_key};
  }
  for (std::size_t b = 0; b < buckets_; ++b)
    if (!is_zero(cells_[b])) return {L0Status::fail, 0};
  return {L0Status::empty, 0};
}

L0Sketch& L0Sketch::operator+=(const L0Sketch& other) {
  if (cells_.size() != other.cells_.size() || base_ != other.base_)
    throw std::invalid_argument("sketches with different parameters");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    cells_[i].count += other.cells_[i].count;
    cells_[i].key_sum = field::add(cells_[i].key_sum, other.cells_[i].key_sum);
    cells_[i].fingerprint = field::add(cells_[i].fingerprint, other.cells_[i].fingerprint);
  }
  return *this;
}

// ---------------------------------------------------------------- bank

L0SketchBank::L0SketchBank(std::size_t count, std::uint64_t universe, double delta, std::uint64_t seed) {
  sketches_.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    sketches_.emplace_back(universe, delta, derive_seed(seed, SeedStream::sketch, i));
}

void L0SketchBank::ingest(const EventStream& s) {
  std::vector<std::pair<std::uint64_t, std::int64_t>> updates;
  updates.reserve(s.events.size());
  for (const StreamEvent& ev : s.events)
    updates.emplace_back(edge_key(ev.edge, s.n, s.directed), ev.kind == EventKind::insert ? 1 : -1);
  // threads own blocks of sketches; within a block the stream is replayed
  // event by event, which keeps the per-event work hot in cache
  constexpr std::size_t block = 16;
  const auto blocks = static_cast<std::int64_t>((sketches_.size() + block - 1) / block);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const auto first = sketches_.begin() + b * static_cast<std::int64_t>(block);
    const auto last = sketches_.begin() + std::min<std::int64_t>((b + 1) * std::int64_t{block}, std::ssize(sketches_));
    for (const auto& [key, change] : updates)
      for (auto it = first; it != last; ++it) it->update(key, change);
  }
}

void L0SketchBank::ingest_serial(const EventStream& s) {
  for (const StreamEvent& ev : s.events) {
    const std::uint64_t key = edge_key(ev.edge, s.n, s.directed);
    const std::int64_t change = ev.kind == EventKind::insert ? 1 : -1;
    for (L0Sketch& sk : sketches_) sk.update(key, change);
  }
}

std::vector<L0Result> L0SketchBank::query_all() const {
  std::vector<L0Result> out(sketches_.size());
  const auto count = static_cast<std::int64_t>(sketches_.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = sketches_[static_cast<std::size_t>(i)].query();
  return out;
}

std::size_t L0SketchBank::cell_count() const noexcept {
  std::size_t total = 0;
  for (const L0Sketch& sk : sketches_) total += sk.cell_count();
  return total;
}

// ---------------------------------------------------------------- IBLT

SparseRecovery::SparseRecovery(std::size_t capacity, std::uint64_t universe, std::uint64_t seed,
                               std::uint64_t base)
    : universe_(std::max<std::uint64_t>(universe, 1)),
      table_size_(std::max<std::size_t>(1, (capacity + hashes - 1) / hashes)),
      base_(base ? base : nonzero_base(seed ^ 0x55)),
      cells_(table_size_ * hashes) {
  for (std::size_t w = 0; w < hashes; ++w) position_hash_[w] = KeyedHash(mix64(seed + 0x66 + w));
}

std::size_t SparseRecovery::position(std::uint64_t key, std::size_t which) const noexcept {
  return which * table_size_ + static_cast<std::size_t>(position_hash_[which](key) % table_size_);
}

void SparseRecovery::update(std::uint64_t key, std::int64_t change) { update(key, change, field::pow(base_, key)); }

void SparseRecovery::update(std::uint64_t key, std::int64_t change, std::uint64_t power) {
  for (std::size_t w = 0; w < hashes; ++w) add_to_cell(cells_[position(key, w)], key, change, power);
}

std::optional<std::vector<std::pair<std::uint64_t, std::int64_t>>> SparseRecovery::decode() const {
  std::vector<L0Cell> cells = cells_;
  std::vector<std::pair<std::uint64_t, std::int64_t>> out;
  std::vector<std::size_t> queue(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) queue[i] = cells.size() - 1 - i;

  while (!queue.empty()) {
    const std::size_t idx = queue.back();
    queue.pop_back();
    const L0Cell c = cells[idx];
    const auto key = pure_key(c, universe_, base_);
    if (!key || position(*key, idx / table_size_) != idx) continue;
    out.emplace_back(*key, c.count);
    const std::uint64_t power = field::pow(base_, *key);
    for (std::size_t w = 0; w < hashes; ++w) {
      const std::size_t p = position(*key, w);
      add_to_cell(cells[p], *key, -c.count, power);
      if (p != idx) queue.push_back(p);
    }
  }
  if (!std::all_of(cells.begin(), cells.end(), is_zero)) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- subsampled recovery

SubsampledRecoverySampler::SubsampledRecoverySampler(std::size_t k, std::uint64_t universe, std::uint64_t seed)
    : k_(k), seed_(seed), level_hash_(mix64(seed ^ 0x77)) {
  const std::uint64_t u = std::max<std::uint64_t>(universe, 1);
  const std::uint64_t ratio = std::max<std::uint64_t>(1, u / std::max<std::size_t>(k, 1));
  const std::size_t level_count = ceil_log2(ratio) + 2;
  const std::size_t capacity = std::max<std::size_t>(4 * k, 192);
  levels_.reserve(level_count);
  // One fingerprint base for all levels: r^key is then computed once per update.
  const std::uint64_t base = nonzero_base(seed ^ 0x88);
  for (std::size_t j = 0; j < level_count; ++j) levels_.emplace_back(capacity, u, mix64(seed + j), base);
}

void SubsampledRecoverySampler::update(std::uint64_t key, std::int64_t change) {
  const std::uint64_t h = level_hash_(key);
  const std::size_t z = h == 0 ? levels_.size() - 1 : static_cast<std::size_t>(std::countr_zero(h));
  const std::size_t top = std::min(z, levels_.size() - 1);
  const std::uint64_t power = field::pow(levels_[0].base(), key);
  for (std::size_t j = 0; j <= top; ++j) levels_[j].update(key, change, power);
}

std::vector<std::uint64_t> SubsampledRecoverySampler::sample() const {
  // The sparsest level that decodes and still holds k keys keeps the load
  // low. Without one (support below k) take the densest level that decodes.
  // Either choice depends only on per-key hashes, so it is symmetric in keys.
  std::vector<std::uint64_t> best;
  for (std::size_t j = levels_.size(); j-- > 0;) {
    auto decoded = levels_[j].decode();
    if (!decoded) continue;
    std::vector<std::uint64_t> keys;
    keys.reserve(decoded->size());
    for (const auto& [key, count] : *decoded)
      if (count > 0) keys.push_back(key);
    if (keys.size() >= k_) {
      Engine rng = make_engine(derive_seed(seed_, SeedStream::sampler, 1));
      shuffle(keys, rng);
      keys.resize(k_);
      std::sort(keys.begin(), keys.end());
      return keys;
    }
    if (keys.size() > best.size()) best = std::move(keys);
  }
  return best;
}

std::size_t SubsampledRecoverySampler::cell_count() const noexcept {
  std::size_t total = 0;
  for (const SparseRecovery& level : levels_) total += level.cell_count();
  return total;
}

// ---------------------------------------------------------------- turnstile entry point

TurnstileSample sample_support_turnstile(const EventStream& s, std::size_t k, std::uint64_t seed, double delta,
                                         TurnstileMethod method) {
  const std::uint64_t universe = static_cast<std::uint64_t>(s.n) * s.n;
  TurnstileSample out;
  out.sample.target = k;
  if (k == 0) return out;

  if (method == TurnstileMethod::subsampled_recovery) {
    SubsampledRecoverySampler sampler(k, universe, derive_seed(seed, SeedStream::sketch));
    for (const StreamEvent& ev : s.events)
      sampler.update(edge_key(ev.edge, s.n, s.directed), ev.kind == EventKind::insert ? 1 : -1);
    for (const std::uint64_t key : sampler.sample()) out.sample.edges.push_back(edge_from_key(key, s.n));
    out.sketch_cells = sampler.cell_count();
    return out;
  }

  L0SketchBank bank(4 * k, universe, delta, derive_seed(seed, SeedStream::sketch));
  bank.ingest(s);
  std::unordered_set<std::uint64_t> taken;
  std::vector<std::uint64_t> keys;
  for (const L0Result& r : bank.query_all()) {
    if (r.status != L0Status::item || !taken.insert(r.key).second) continue;
    keys.push_back(r.key);
    if (keys.size() == k) break;
  }
  std::sort(keys.begin(), keys.end());
  for (const std::uint64_t key : keys) out.sample.edges.push_back(edge_from_key(key, s.n));
  out.sketch_cells = bank.cell_count();
  return out;
}

}  // namespace longpath
