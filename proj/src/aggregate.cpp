#include "qic/aggregate.hpp"

#include <algorithm>
#include <cstdio>

#include "qic/model.hpp"

namespace qic {

double aggregate_stats::average() const {
  return total_runs == 0 ? 0.0
                         : static_cast<double>(sum) / static_cast<double>(total_runs);
}

std::string aggregate_stats::average_text() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", average());
  return buf;
}

aggregate_stats aggregate_counts(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) {
    throw domain_error("aggregate_counts: no reports");
  }
  aggregate_stats stats;
  stats.total_runs = counts.size();
  stats.min = *std::min_element(counts.begin(), counts.end());
  stats.max = *std::max_element(counts.begin(), counts.end());
  for (std::uint64_t count : counts) {
    stats.sum += count;
    if (count > 0) {
      ++stats.affected;
    }
  }
  return stats;
}

}  // namespace qic
