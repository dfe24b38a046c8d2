#pragma once

#include <optional>

#include "qic/model.hpp"

namespace qic {

struct oracle_verdict {
  bool consistent = false;
  std::optional<logical_time> witness_time;  // smallest matching time
};

/// The snapshot a frozen system would produce at time t: every region holds
/// its value at t and every acquisition time is t.
snapshot instantaneous_snapshot(const execution_trace& trace, logical_time t);

/// Brute-force ground truth: enumerates the instantaneous snapshot at every
/// t in [0, t_max] and reports the smallest one whose values equal the
/// snapshot's. Deliberately independent of the counter-array reconstruction;
/// O(n * t_max), meant for validation, not production checking.
oracle_verdict oracle_check(const execution_trace& trace, const snapshot& s);

}  // namespace qic
