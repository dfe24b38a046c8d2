#pragma once

#include <vector>

#include "qic/gca.hpp"
#include "qic/model.hpp"

namespace qic {

/// T_N(s): per-region time of the last event visible in the snapshot. Since
/// the event at time t writes t, this is the value vector reread as times —
/// no acquisition times needed, which is what makes real dumps checkable.
using normalized_time_vector = std::vector<logical_time>;

normalized_time_vector normalize(const snapshot& s);

/// t^: the highest time in the normalized snapshot. The associated
/// instantaneous snapshot of s is the one taken at t^.
logical_time associated_time(const normalized_time_vector& ntv);

struct region_mismatch {
  region_id region = 0;
  logical_time snapshot_time = 0;    // last event visible in the snapshot
  logical_time expected_time = 0;    // last event per the counter array at t^
  std::uint64_t missed_updates = 0;  // events on the region in (snapshot_time, expected_time]
  std::uint64_t raw_time_delta = 0;  // expected_time - snapshot_time
};

struct consistency_report {
  bool consistent = true;
  logical_time t_hat = 0;
  std::vector<region_mismatch> mismatches;  // ascending region index
};

/// Decides quasi-instantaneous consistency: the snapshot's values were
/// coexistent in memory iff its normalized time vector equals the current
/// time of its associated time t^. Each disagreeing region is reported with
/// the number of updates the snapshot missed on it.
///
/// Requires the array to cover t^ (it must have been captured no earlier
/// than the last region copy); otherwise a coverage_error is thrown.
consistency_report check(const snapshot& s, const one_dim_gca& gca);

/// Two-dimensional variants are accepted via conversion to the list form.
consistency_report check(const snapshot& s, const carry_along_gca& gca);
consistency_report check(const snapshot& s, const simplified_gca& gca);

}  // namespace qic
