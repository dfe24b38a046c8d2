#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qic {

/// Index of a memory region. A system with n regions uses indices 0..n-1.
using region_id = std::uint32_t;

/// Logical time: the number of events executed so far. Time 0 is the state
/// before any event; the k-th event happens at time k.
using logical_time = std::uint64_t;

/// Value stored in a memory region. The event at time t writes t into the
/// region it touches, so values and last-event times coincide throughout.
using region_value = std::uint64_t;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Out-of-range argument or malformed input.
struct domain_error : error {
  using error::error;
};

/// A counter array's configured hard cap was exceeded.
struct capacity_error : error {
  using error::error;
};

/// The counter array ends before the snapshot's associated time, i.e. it was
/// captured before the last region copy finished.
struct coverage_error : error {
  using error::error;
};

struct event {
  logical_time time = 0;  // >= 1 inside a trace
  region_id region = 0;
};

/// Ground-truth event sequence of one execution. events()[k-1] is the region
/// mutated by the event at time k, and the value that event writes is k.
/// Identical in content to the one-dimensional counter array.
class execution_trace {
public:
  execution_trace(std::size_t region_count, std::vector<region_id> events);

  std::size_t region_count() const noexcept { return region_count_; }
  const std::vector<region_id>& events() const noexcept { return events_; }

  /// Final logical time; equals the number of events.
  logical_time t_max() const noexcept { return events_.size(); }

  /// Memory contents of `region` at time `t`: the value written by the last
  /// event on the region at or before t, or 0 if there is none.
  region_value value_at(region_id region, logical_time t) const;

  /// Time of the last event on `region` at or before `t` (0 if none).
  /// Monotone non-decreasing in t.
  logical_time last_event_time(region_id region, logical_time t) const;

private:
  std::size_t region_count_;
  std::vector<region_id> events_;
};

/// Per-region acquired values plus, when the acquirer could observe them,
/// per-region acquisition times. Real dumps carry values only; nothing in
/// the consistency check reads acq_times.
struct snapshot {
  std::vector<region_value> values;
  std::optional<std::vector<logical_time>> acq_times;

  std::size_t region_count() const noexcept { return values.size(); }
};

/// True when acquisition times are present and all equal.
bool is_instantaneous(const snapshot& s);

}  // namespace qic
