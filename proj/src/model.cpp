#include "qic/model.hpp"

#include <algorithm>

namespace qic {

execution_trace::execution_trace(std::size_t region_count,
                                 std::vector<region_id> events)
    : region_count_(region_count), events_(std::move(events)) {
  if (region_count_ == 0) {
    throw domain_error("execution_trace: region_count must be at least 1");
  }
  for (std::size_t k = 0; k < events_.size(); ++k) {
    if (events_[k] >= region_count_) {
      throw domain_error("execution_trace: event " + std::to_string(k + 1) +
                         " names region " + std::to_string(events_[k]) +
                         ", but only " + std::to_string(region_count_) +
                         " regions exist");
    }
  }
}

logical_time execution_trace::last_event_time(region_id region,
                                              logical_time t) const {
  if (region >= region_count_) {
    throw domain_error("execution_trace: region " + std::to_string(region) +
                       " out of range");
  }
  if (t > t_max()) {
    throw domain_error("execution_trace: time " + std::to_string(t) +
                       " exceeds t_max " + std::to_string(t_max()));
  }
  for (logical_time k = t; k >= 1; --k) {
    if (events_[k - 1] == region) {
      return k;
    }
  }
  return 0;
}

region_value execution_trace::value_at(region_id region, logical_time t) const {
  // the event at time k writes k, so the content is the last event time
  return last_event_time(region, t);
}

bool is_instantaneous(const snapshot& s) {
  if (!s.acq_times.has_value()) {
    return false;
  }
  const auto& times = *s.acq_times;
  return std::adjacent_find(times.begin(), times.end(),
                            std::not_equal_to<>()) == times.end();
}

}  // namespace qic
