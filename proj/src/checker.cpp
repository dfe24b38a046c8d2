#include "qic/checker.hpp"

#include <algorithm>
#include <string>

namespace qic {

normalized_time_vector normalize(const snapshot& s) {
  // values are the times of the last events that wrote them
  return normalized_time_vector(s.values.begin(), s.values.end());
}

logical_time associated_time(const normalized_time_vector& ntv) {
  if (ntv.empty()) {
    throw domain_error("associated_time: empty normalized snapshot");
  }
  return *std::max_element(ntv.begin(), ntv.end());
}

consistency_report check(const snapshot& s, const one_dim_gca& gca) {
  if (s.region_count() == 0) {
    throw domain_error("check: snapshot has no regions");
  }
  if (s.region_count() != gca.region_count()) {
    throw domain_error("check: snapshot has " + std::to_string(s.region_count()) +
                       " regions but the counter array has " +
                       std::to_string(gca.region_count()));
  }

  const normalized_time_vector ntv = normalize(s);
  const logical_time t_hat = associated_time(ntv);
  if (t_hat > gca.time()) {
    throw coverage_error(
        "check: counter array ends at time " + std::to_string(gca.time()) +
        ", before the snapshot's associated time " + std::to_string(t_hat) +
        "; the array must be captured no earlier than the last region copy");
  }

  const current_time_vector expected = gca.current_time(t_hat);
  const auto& entries = gca.entries();

  consistency_report report;
  report.t_hat = t_hat;
  for (region_id r = 0; r < s.region_count(); ++r) {
    if (ntv[r] == expected[r]) {
      continue;
    }
    if (ntv[r] > expected[r]) {
      // t_hat is the maximum over the snapshot, so a genuine snapshot of
      // this execution can never be ahead of the array here
      throw domain_error("check: region " + std::to_string(r) + " holds time " +
                         std::to_string(ntv[r]) +
                         ", but per the counter array its last event at or "
                         "before t^ is " +
                         std::to_string(expected[r]) +
                         "; the snapshot does not belong to this array");
    }
    region_mismatch mm;
    mm.region = r;
    mm.snapshot_time = ntv[r];
    mm.expected_time = expected[r];
    mm.raw_time_delta = expected[r] - ntv[r];
    for (logical_time k = ntv[r] + 1; k <= expected[r]; ++k) {
      if (entries[k - 1] == r) {
        ++mm.missed_updates;
      }
    }
    report.mismatches.push_back(mm);
  }
  report.consistent = report.mismatches.empty();
  return report;
}

consistency_report check(const snapshot& s, const carry_along_gca& gca) {
  return check(s, gca.to_one_dim());
}

consistency_report check(const snapshot& s, const simplified_gca& gca) {
  return check(s, gca.to_one_dim());
}

}  // namespace qic
