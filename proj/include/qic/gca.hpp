#pragma once

#include <optional>
#include <vector>

#include "qic/model.hpp"

namespace qic {

/// Per-region times of the last event at or before some logical time t; the
/// signature of the instantaneous snapshot at t. Whenever t >= 1 the maximum
/// entry equals t.
using current_time_vector = std::vector<logical_time>;

/// List variant of the global counter array: the entry at index t (1-based)
/// is the region of the event at time t. One cell per event, nothing else.
class one_dim_gca {
public:
  explicit one_dim_gca(std::size_t region_count,
                       std::optional<logical_time> capacity = std::nullopt);

  /// Adopts a pre-recorded entry list (e.g. loaded from disk).
  one_dim_gca(std::size_t region_count, std::vector<region_id> entries);

  std::size_t region_count() const noexcept { return region_count_; }
  logical_time time() const noexcept { return entries_.size(); }
  const std::vector<region_id>& entries() const noexcept { return entries_; }

  /// Advances global time and records the region; returns the new time,
  /// which the caller stores into the region it owns.
  logical_time record_event(region_id region);

  /// Backward scan: walk entries from t down, keeping the first (latest)
  /// occurrence per region; regions never seen resolve to 0.
  current_time_vector current_time(logical_time t) const;

  execution_trace to_trace() const;
  static one_dim_gca from_trace(const execution_trace& trace);

private:
  std::size_t region_count_;
  std::optional<logical_time> capacity_;
  std::vector<region_id> entries_;
};

/// Two-dimensional counter array that writes the new time into the touched
/// region's row and copies every other row's previous entry forward, so
/// column t is the current time of t verbatim.
class carry_along_gca {
public:
  explicit carry_along_gca(std::size_t region_count,
                           std::optional<logical_time> capacity = std::nullopt);

  std::size_t region_count() const noexcept { return region_count_; }
  logical_time time() const noexcept { return time_; }

  logical_time record_event(region_id region);

  /// Column t, verbatim.
  current_time_vector current_time(logical_time t) const;

  one_dim_gca to_one_dim() const;

private:
  std::size_t region_count_;
  std::optional<logical_time> capacity_;
  logical_time time_ = 0;
  std::vector<logical_time> cells_;  // column-major, time()+1 columns
};

/// Bit-matrix variant: column t holds a single 1 in the row of the region
/// the event at time t touched; column 0 is empty.
class simplified_gca {
public:
  explicit simplified_gca(std::size_t region_count,
                          std::optional<logical_time> capacity = std::nullopt);

  std::size_t region_count() const noexcept { return region_count_; }
  logical_time time() const noexcept { return time_; }

  logical_time record_event(region_id region);

  bool bit(region_id region, logical_time t) const;

  /// Backward scan over columns: at each step the column's single set bit
  /// names a region; the first (latest) hit per region wins, already-filled
  /// rows are skipped, and exhausting the columns zero-fills the rest.
  current_time_vector current_time(logical_time t) const;

  one_dim_gca to_one_dim() const;

private:
  std::size_t region_count_;
  std::optional<logical_time> capacity_;
  logical_time time_ = 0;
  std::vector<std::vector<bool>> rows_;  // rows_[r][t]
};

/// Sorted per-region event times built once from a one-dimensional array.
/// Answers the same queries as the backward scan in O(log t) via binary
/// search; the scan remains the reference path and the two must agree.
class region_time_index {
public:
  explicit region_time_index(const one_dim_gca& gca);

  logical_time time() const noexcept { return time_; }

  logical_time last_event_time(region_id region, logical_time t) const;
  current_time_vector current_time(logical_time t) const;

  /// Number of events on `region` in the interval (after, up_to].
  std::uint64_t events_on(region_id region, logical_time after,
                          logical_time up_to) const;

private:
  logical_time time_;
  std::vector<std::vector<logical_time>> times_;  // ascending, per region
};

}  // namespace qic
