#include "qic/oracle.hpp"

#include <string>

namespace qic {

snapshot instantaneous_snapshot(const execution_trace& trace, logical_time t) {
  if (t > trace.t_max()) {
    throw domain_error("instantaneous_snapshot: time " + std::to_string(t) +
                       " exceeds t_max " + std::to_string(trace.t_max()));
  }
  snapshot s;
  s.values.resize(trace.region_count());
  for (region_id r = 0; r < trace.region_count(); ++r) {
    s.values[r] = trace.value_at(r, t);
  }
  s.acq_times = std::vector<logical_time>(trace.region_count(), t);
  return s;
}

oracle_verdict oracle_check(const execution_trace& trace, const snapshot& s) {
  if (s.region_count() != trace.region_count()) {
    throw domain_error("oracle_check: snapshot has " +
                       std::to_string(s.region_count()) +
                       " regions but the trace has " +
                       std::to_string(trace.region_count()));
  }
  // replay forward, comparing against every instantaneous state
  std::vector<region_value> current(trace.region_count(), 0);
  const auto& events = trace.events();
  for (logical_time t = 0; t <= trace.t_max(); ++t) {
    if (t > 0) {
      current[events[t - 1]] = t;
    }
    if (current == s.values) {
      return oracle_verdict{true, t};
    }
  }
  return oracle_verdict{false, std::nullopt};
}

}  // namespace qic
