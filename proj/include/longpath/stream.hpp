#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "longpath/graph.hpp"

namespace longpath {

enum class EventKind : std::uint8_t { insert, remove };

struct StreamEvent {
  EventKind kind = EventKind::insert;
  Edge edge;

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

/// Ordered edge insertions and deletions over vertices 0..n-1.
struct EventStream {
  std::size_t n = 0;
  bool directed = false;
  std::vector<StreamEvent> events;

  bool has_deletions() const noexcept;
  friend bool operator==(const EventStream&, const EventStream&) = default;
};

class StreamError : public std::runtime_error {
 public:
  StreamError(const std::string& what, std::size_t index)
      : std::runtime_error("event " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

enum class StreamOrder { natural, random };

EventStream graph_to_stream(const Graph& g, StreamOrder order = StreamOrder::natural, std::uint64_t seed = 0);

/// Final graph: every edge whose multiplicity ends >= 1. Throws StreamError
/// at the first event that drives a multiplicity negative or is malformed.
Graph apply_stream(const EventStream& s);

enum class StreamViolationKind { bad_endpoint, negative_multiplicity, multiplicity_bound };

struct StreamViolation {
  StreamViolationKind kind;
  std::size_t index;
};

const char* to_string(StreamViolationKind kind);

inline constexpr double default_multiplicity_exponent = 2.0;

/// Checks every prefix: multiplicities never negative and never above n^c.
std::optional<StreamViolation> validate_stream(const EventStream& s,
                                               double exponent = default_multiplicity_exponent);

/// Adds `count` decoy edges (non-edges of g) that are inserted and later
/// deleted, interleaved at random positions behind their insertion. The final
/// graph of the result equals g.
EventStream add_decoys(const EventStream& s, const Graph& g, std::size_t count, std::uint64_t seed);

}  // namespace longpath
