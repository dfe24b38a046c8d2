#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qic {

/// Summary over per-run inconsistency counts. The average stays exact as
/// sum/total_runs; average_text() renders it with one decimal place.
struct aggregate_stats {
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t sum = 0;
  std::uint64_t affected = 0;  // runs with at least one inconsistency
  std::uint64_t total_runs = 0;

  double average() const;
  std::string average_text() const;
};

aggregate_stats aggregate_counts(const std::vector<std::uint64_t>& counts);

}  // namespace qic
