#include "qic/gca.hpp"

#include <algorithm>
#include <string>

namespace qic {

namespace {

void check_region_count(std::size_t region_count, const char* who) {
  if (region_count == 0) {
    throw domain_error(std::string(who) + ": region_count must be at least 1");
  }
}

void check_region(region_id region, std::size_t region_count, const char* who) {
  if (region >= region_count) {
    throw domain_error(std::string(who) + ": region " + std::to_string(region) +
                       " out of range [0, " + std::to_string(region_count) + ")");
  }
}

void check_capacity(logical_time time, const std::optional<logical_time>& cap,
                    const char* who) {
  if (cap && time + 1 > *cap) {
    throw capacity_error(std::string(who) + ": capacity of " +
                         std::to_string(*cap) + " events exhausted");
  }
}

void check_query_time(logical_time t, logical_time recorded, const char* who) {
  if (t > recorded) {
    throw domain_error(std::string(who) + ": time " + std::to_string(t) +
                       " not recorded yet (latest is " +
                       std::to_string(recorded) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------- one_dim

one_dim_gca::one_dim_gca(std::size_t region_count,
                         std::optional<logical_time> capacity)
    : region_count_(region_count), capacity_(capacity) {
  check_region_count(region_count_, "one_dim_gca");
}

one_dim_gca::one_dim_gca(std::size_t region_count, std::vector<region_id> entries)
    : region_count_(region_count), entries_(std::move(entries)) {
  check_region_count(region_count_, "one_dim_gca");
  for (region_id r : entries_) {
    check_region(r, region_count_, "one_dim_gca");
  }
}

logical_time one_dim_gca::record_event(region_id region) {
  check_region(region, region_count_, "one_dim_gca");
  check_capacity(time(), capacity_, "one_dim_gca");
  entries_.push_back(region);
  return entries_.size();
}

current_time_vector one_dim_gca::current_time(logical_time t) const {
  check_query_time(t, time(), "one_dim_gca");
  current_time_vector result(region_count_, 0);
  std::vector<bool> filled(region_count_, false);
  std::size_t unfilled = region_count_;
  for (logical_time ti = t; ti >= 1 && unfilled > 0; --ti) {
    const region_id r = entries_[ti - 1];
    if (!filled[r]) {
      filled[r] = true;
      result[r] = ti;
      --unfilled;
    }
  }
  return result;  // regions with no entry at or before t stay 0
}

execution_trace one_dim_gca::to_trace() const {
  return execution_trace(region_count_, entries_);
}

one_dim_gca one_dim_gca::from_trace(const execution_trace& trace) {
  return one_dim_gca(trace.region_count(), trace.events());
}

// ------------------------------------------------------------ carry_along

carry_along_gca::carry_along_gca(std::size_t region_count,
                                 std::optional<logical_time> capacity)
    : region_count_(region_count),
      capacity_(capacity),
      cells_(region_count, 0) {
  check_region_count(region_count_, "carry_along_gca");
}

logical_time carry_along_gca::record_event(region_id region) {
  check_region(region, region_count_, "carry_along_gca");
  check_capacity(time_, capacity_, "carry_along_gca");
  const std::size_t base = cells_.size();
  cells_.resize(base + region_count_);
  // carry the previous column along, then stamp the touched row
  for (std::size_t i = 0; i < region_count_; ++i) {
    cells_[base + i] = cells_[base - region_count_ + i];
  }
  ++time_;
  cells_[base + region] = time_;
  return time_;
}

current_time_vector carry_along_gca::current_time(logical_time t) const {
  check_query_time(t, time_, "carry_along_gca");
  const auto first = cells_.begin() + static_cast<std::ptrdiff_t>(t * region_count_);
  return current_time_vector(first, first + static_cast<std::ptrdiff_t>(region_count_));
}

one_dim_gca carry_along_gca::to_one_dim() const {
  std::vector<region_id> entries;
  entries.reserve(time_);
  for (logical_time t = 1; t <= time_; ++t) {
    const std::size_t base = t * region_count_;
    for (region_id r = 0; r < region_count_; ++r) {
      if (cells_[base + r] == t) {
        entries.push_back(r);
        break;
      }
    }
  }
  return one_dim_gca(region_count_, std::move(entries));
}

// ------------------------------------------------------------- simplified

simplified_gca::simplified_gca(std::size_t region_count,
                               std::optional<logical_time> capacity)
    : region_count_(region_count),
      capacity_(capacity),
      rows_(region_count, std::vector<bool>(1, false)) {
  check_region_count(region_count_, "simplified_gca");
}

logical_time simplified_gca::record_event(region_id region) {
  check_region(region, region_count_, "simplified_gca");
  check_capacity(time_, capacity_, "simplified_gca");
  ++time_;
  for (std::size_t r = 0; r < region_count_; ++r) {
    rows_[r].push_back(r == region);
  }
  return time_;
}

bool simplified_gca::bit(region_id region, logical_time t) const {
  check_region(region, region_count_, "simplified_gca");
  check_query_time(t, time_, "simplified_gca");
  return rows_[region][t];
}

current_time_vector simplified_gca::current_time(logical_time t) const {
  check_query_time(t, time_, "simplified_gca");
  current_time_vector result(region_count_, 0);
  std::vector<bool> filled(region_count_, false);
  std::size_t unfilled = region_count_;
  for (logical_time ti = t; ti >= 1 && unfilled > 0; --ti) {
    // each column ti >= 1 has exactly one set bit
    for (region_id r = 0; r < region_count_; ++r) {
      if (rows_[r][ti]) {
        if (!filled[r]) {
          filled[r] = true;
          result[r] = ti;
          --unfilled;
        }
        break;
      }
    }
  }
  return result;
}

one_dim_gca simplified_gca::to_one_dim() const {
  std::vector<region_id> entries;
  entries.reserve(time_);
  for (logical_time t = 1; t <= time_; ++t) {
    for (region_id r = 0; r < region_count_; ++r) {
      if (rows_[r][t]) {
        entries.push_back(r);
        break;
      }
    }
  }
  return one_dim_gca(region_count_, std::move(entries));
}

// ------------------------------------------------------------------ index

region_time_index::region_time_index(const one_dim_gca& gca)
    : time_(gca.time()), times_(gca.region_count()) {
  const auto& entries = gca.entries();
  for (logical_time t = 1; t <= entries.size(); ++t) {
    times_[entries[t - 1]].push_back(t);
  }
}

logical_time region_time_index::last_event_time(region_id region,
                                                logical_time t) const {
  check_region(region, times_.size(), "region_time_index");
  check_query_time(t, time_, "region_time_index");
  const auto& ts = times_[region];
  auto it = std::upper_bound(ts.begin(), ts.end(), t);
  return it == ts.begin() ? 0 : *(it - 1);
}

current_time_vector region_time_index::current_time(logical_time t) const {
  check_query_time(t, time_, "region_time_index");
  current_time_vector result(times_.size(), 0);
  for (region_id r = 0; r < times_.size(); ++r) {
    result[r] = last_event_time(r, t);
  }
  return result;
}

std::uint64_t region_time_index::events_on(region_id region, logical_time after,
                                           logical_time up_to) const {
  check_region(region, times_.size(), "region_time_index");
  check_query_time(up_to, time_, "region_time_index");
  if (after >= up_to) {
    return 0;
  }
  const auto& ts = times_[region];
  const auto lo = std::upper_bound(ts.begin(), ts.end(), after);
  const auto hi = std::upper_bound(ts.begin(), ts.end(), up_to);
  return static_cast<std::uint64_t>(hi - lo);
}

}  // namespace qic
