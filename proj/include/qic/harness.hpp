#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qic/gca.hpp"
#include "qic/model.hpp"

namespace qic {

/// Interleaving of one simulated acquisition: the k-th copy targets
/// order[k] and is preceded by events_between[k] fresh mutation events.
struct acquisition_plan {
  std::vector<region_id> order;
  std::vector<std::uint64_t> events_between;

  std::uint64_t total_events() const;
  void validate(std::size_t region_count) const;

  /// Copies region 0..n-1 in index order with no intervening events.
  static acquisition_plan sequential(std::size_t region_count);

  /// Random permutation order; total_events spread over the copy slots by
  /// independent uniform draws.
  static acquisition_plan random_plan(std::size_t region_count,
                                      std::uint64_t total_events,
                                      std::uint64_t seed);
};

struct sim_config {
  std::size_t region_count = 0;
  /// Fixed event sequence to replay; empty means regions are drawn from a
  /// generator seeded by the simulate() seed. When present, its length must
  /// equal the plan's total_events().
  std::vector<region_id> script;
};

struct sim_result {
  execution_trace trace;
  snapshot snap;
  one_dim_gca gca;
};

/// Single-threaded deterministic interpreter: replays mutation events and
/// region copies in exactly the interleaving the plan prescribes. The
/// returned snapshot carries true acquisition times and the counter array
/// equals the trace. Identical (config, plan, seed) give identical results.
sim_result simulate(const sim_config& cfg, const acquisition_plan& plan,
                    std::uint64_t seed);

/// Uniform delay in microseconds; max_us == 0 disables the pause.
struct pause_range {
  std::uint32_t min_us = 0;
  std::uint32_t max_us = 0;
};

struct pivot_config {
  std::size_t region_count = 100;
  unsigned worker_threads = 1;        // 1 = low activity, 8 = high
  std::uint64_t mutation_ops = 1'000'000;  // event budget across all workers
  std::uint64_t acquire_after = 500;  // events elapsed before acquisition starts
  pause_range copy_pause{500, 1500};  // between region copies
  pause_range worker_pause{0, 1000};  // the workers' short wait
  std::uint64_t seed = 0;
  std::optional<logical_time> gca_capacity;
  std::vector<region_id> copy_order;  // empty = ascending region index

  void validate() const;
};

/// Concurrent workload: worker threads pick a region, remove and reinsert it
/// (two counted events) with the configured short wait after each operation.
/// The acquirer waits until acquire_after events have elapsed, then copies
/// one region at a time; every mutation and every single-region copy runs in
/// the same critical section, nothing else is ordered. The counter array is
/// captured after the last region copy. With frozen == true all workers are
/// quiesced before the first copy and resumed after the capture.
///
/// Threaded runs are not reproducible from the seed; scheduling is real.
sim_result run_pivot(const pivot_config& cfg, bool frozen);

/// Page number per region, plus one trailing entry for the counter array.
struct region_layout {
  std::vector<std::uint64_t> page_addresses;
};

struct spread_metrics {
  std::uint64_t range_pages = 0;
  std::uint64_t near_distances = 0;      // neighbor gaps <= 10 pages
  std::uint64_t adjacent_distances = 0;  // neighbor gaps == 1 page
  std::uint64_t max_distance = 0;
};

/// Neighbor statistics over the sorted page addresses: range is highest
/// minus lowest, distances are between consecutive addresses.
spread_metrics compute_spread(const region_layout& layout);

enum class clustering_kind {
  packed,       // consecutive pages
  uniform_gap,  // constant gap between neighbors
  bimodal,      // two packed clusters separated by one large gap
};

struct layout_config {
  std::size_t region_count = 100;
  clustering_kind kind = clustering_kind::packed;
  std::uint64_t gap = 1;  // uniform_gap: every gap; bimodal: the large gap
};

/// Deterministic synthetic placement of the regions and the counter array
/// onto page addresses. The seed picks the base page and which region lands
/// where; the clustering shape fixes the sorted address pattern.
region_layout layout_for_simulation(const layout_config& cfg, std::uint64_t seed);

}  // namespace qic
