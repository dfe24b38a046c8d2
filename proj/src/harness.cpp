#include "qic/harness.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>

namespace qic {

// ------------------------------------------------------------------- plan

std::uint64_t acquisition_plan::total_events() const {
  return std::accumulate(events_between.begin(), events_between.end(),
                         std::uint64_t{0});
}

void acquisition_plan::validate(std::size_t region_count) const {
  if (region_count == 0) {
    throw domain_error("acquisition_plan: region_count must be at least 1");
  }
  if (order.size() != region_count || events_between.size() != region_count) {
    throw domain_error(
        "acquisition_plan: order and events_between must each have one entry "
        "per region");
  }
  std::vector<bool> seen(region_count, false);
  for (region_id r : order) {
    if (r >= region_count || seen[r]) {
      throw domain_error("acquisition_plan: order is not a permutation of the regions");
    }
    seen[r] = true;
  }
}

acquisition_plan acquisition_plan::sequential(std::size_t region_count) {
  acquisition_plan plan;
  plan.order.resize(region_count);
  std::iota(plan.order.begin(), plan.order.end(), region_id{0});
  plan.events_between.assign(region_count, 0);
  return plan;
}

acquisition_plan acquisition_plan::random_plan(std::size_t region_count,
                                               std::uint64_t total_events,
                                               std::uint64_t seed) {
  if (region_count == 0) {
    throw domain_error("acquisition_plan: region_count must be at least 1");
  }
  std::mt19937_64 rng(seed);
  acquisition_plan plan = sequential(region_count);
  std::shuffle(plan.order.begin(), plan.order.end(), rng);
  std::uniform_int_distribution<std::size_t> slot(0, region_count - 1);
  for (std::uint64_t j = 0; j < total_events; ++j) {
    ++plan.events_between[slot(rng)];
  }
  return plan;
}

// -------------------------------------------------------------- simulator

sim_result simulate(const sim_config& cfg, const acquisition_plan& plan,
                    std::uint64_t seed) {
  if (cfg.region_count == 0) {
    throw domain_error("simulate: region_count must be at least 1");
  }
  plan.validate(cfg.region_count);
  if (!cfg.script.empty()) {
    if (cfg.script.size() != plan.total_events()) {
      throw domain_error("simulate: script has " +
                         std::to_string(cfg.script.size()) +
                         " events but the plan injects " +
                         std::to_string(plan.total_events()));
    }
    for (region_id r : cfg.script) {
      if (r >= cfg.region_count) {
        throw domain_error("simulate: script region " + std::to_string(r) +
                           " out of range");
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<region_id> pick(
      0, static_cast<region_id>(cfg.region_count - 1));

  one_dim_gca gca(cfg.region_count);
  std::vector<region_value> storage(cfg.region_count, 0);
  snapshot snap;
  snap.values.assign(cfg.region_count, 0);
  snap.acq_times = std::vector<logical_time>(cfg.region_count, 0);

  std::size_t scripted = 0;
  for (std::size_t k = 0; k < plan.order.size(); ++k) {
    for (std::uint64_t j = 0; j < plan.events_between[k]; ++j) {
      const region_id r =
          cfg.script.empty() ? pick(rng) : cfg.script[scripted++];
      const logical_time t = gca.record_event(r);
      storage[r] = t;
    }
    const region_id target = plan.order[k];
    snap.values[target] = storage[target];
    (*snap.acq_times)[target] = gca.time();
  }

  return sim_result{gca.to_trace(), std::move(snap), std::move(gca)};
}

// ------------------------------------------------------------------ pivot

void pivot_config::validate() const {
  if (region_count == 0) {
    throw domain_error("pivot_config: region_count must be at least 1");
  }
  if (worker_threads == 0) {
    throw domain_error("pivot_config: worker_threads must be at least 1");
  }
  if (mutation_ops == 0) {
    throw domain_error("pivot_config: mutation_ops must be at least 1");
  }
  if (copy_pause.min_us > copy_pause.max_us ||
      worker_pause.min_us > worker_pause.max_us) {
    throw domain_error("pivot_config: pause ranges must have min <= max");
  }
  if (!copy_order.empty()) {
    if (copy_order.size() != region_count) {
      throw domain_error("pivot_config: copy_order must cover every region");
    }
    std::vector<bool> seen(region_count, false);
    for (region_id r : copy_order) {
      if (r >= region_count || seen[r]) {
        throw domain_error("pivot_config: copy_order is not a permutation");
      }
      seen[r] = true;
    }
  }
}

namespace {

void pause_for(const pause_range& range, std::mt19937_64& rng) {
  if (range.max_us == 0) {
    return;
  }
  std::uniform_int_distribution<std::uint32_t> dist(range.min_us, range.max_us);
  std::this_thread::sleep_for(std::chrono::microseconds(dist(rng)));
}

}  // namespace

sim_result run_pivot(const pivot_config& cfg, bool frozen) {
  cfg.validate();
  const std::size_t n = cfg.region_count;

  std::vector<region_id> order = cfg.copy_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), region_id{0});
  }

  // shared state; every access below runs under `mutex`
  std::mutex mutex;
  std::condition_variable cv;
  one_dim_gca gca(n, cfg.gca_capacity);
  std::vector<region_value> storage(n, 0);
  std::uint64_t ops_left = cfg.mutation_ops;
  bool freeze = false;
  bool stop = false;
  unsigned running = cfg.worker_threads;
  std::exception_ptr failure;

  auto worker = [&](unsigned index) {
    std::seed_seq sseq{cfg.seed, static_cast<std::uint64_t>(index) + 1};
    std::mt19937_64 rng(sseq);
    std::uniform_int_distribution<region_id> pick(0, static_cast<region_id>(n - 1));
    try {
      region_id element = 0;
      bool reinsert = false;  // second half of a remove/reinsert cycle
      for (;;) {
        if (!reinsert) {
          element = pick(rng);
        }
        {
          std::unique_lock<std::mutex> lock(mutex);
          cv.wait(lock, [&] { return !freeze || stop; });
          if (stop || failure || ops_left == 0) {
            break;
          }
          --ops_left;
          const logical_time t = gca.record_event(element);
          storage[element] = t;
          cv.notify_all();
        }
        reinsert = !reinsert;
        pause_for(cfg.worker_pause, rng);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex);
      if (!failure) {
        failure = std::current_exception();
      }
    }
    std::lock_guard<std::mutex> lock(mutex);
    --running;
    cv.notify_all();
  };

  std::vector<std::thread> threads;
  threads.reserve(cfg.worker_threads);
  for (unsigned i = 0; i < cfg.worker_threads; ++i) {
    threads.emplace_back(worker, i);
  }

  snapshot snap;
  snap.values.assign(n, 0);
  snap.acq_times = std::vector<logical_time>(n, 0);
  one_dim_gca captured(n);
  {
    std::seed_seq sseq{cfg.seed, std::uint64_t{0}};
    std::mt19937_64 rng(sseq);

    std::unique_lock<std::mutex> lock(mutex);
    cv.wait(lock, [&] {
      return gca.time() >= cfg.acquire_after || running == 0 || failure;
    });
    if (frozen) {
      freeze = true;  // no mutation can start until resumed
    }
    lock.unlock();

    for (std::size_t k = 0; k < order.size(); ++k) {
      {
        std::lock_guard<std::mutex> guard(mutex);
        const region_id r = order[k];
        snap.values[r] = storage[r];
        (*snap.acq_times)[r] = gca.time();
      }
      if (k + 1 < order.size()) {
        pause_for(cfg.copy_pause, rng);
      }
    }

    {
      std::lock_guard<std::mutex> guard(mutex);
      captured = gca;  // the array is acquired after the last region copy
      stop = true;
      freeze = false;
    }
    cv.notify_all();
  }

  for (auto& thread : threads) {
    thread.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return sim_result{captured.to_trace(), std::move(snap), std::move(captured)};
}

// ----------------------------------------------------------------- layout

spread_metrics compute_spread(const region_layout& layout) {
  if (layout.page_addresses.empty()) {
    throw domain_error("compute_spread: empty layout");
  }
  std::vector<std::uint64_t> pages = layout.page_addresses;
  std::sort(pages.begin(), pages.end());
  if (std::adjacent_find(pages.begin(), pages.end()) != pages.end()) {
    throw domain_error("compute_spread: duplicate page address");
  }
  spread_metrics metrics;
  metrics.range_pages = pages.back() - pages.front();
  for (std::size_t i = 1; i < pages.size(); ++i) {
    const std::uint64_t gap = pages[i] - pages[i - 1];
    if (gap <= 10) {
      ++metrics.near_distances;
    }
    if (gap == 1) {
      ++metrics.adjacent_distances;
    }
    metrics.max_distance = std::max(metrics.max_distance, gap);
  }
  return metrics;
}

region_layout layout_for_simulation(const layout_config& cfg, std::uint64_t seed) {
  if (cfg.region_count == 0) {
    throw domain_error("layout_for_simulation: region_count must be at least 1");
  }
  const std::size_t count = cfg.region_count + 1;  // + the counter array
  std::mt19937_64 rng(seed);
  const std::uint64_t base =
      std::uniform_int_distribution<std::uint64_t>(0x100, 0x100000)(rng);

  std::vector<std::uint64_t> pages(count);
  switch (cfg.kind) {
    case clustering_kind::packed:
      for (std::size_t i = 0; i < count; ++i) {
        pages[i] = base + i;
      }
      break;
    case clustering_kind::uniform_gap:
      if (cfg.gap == 0) {
        throw domain_error("layout_for_simulation: uniform gap must be >= 1");
      }
      for (std::size_t i = 0; i < count; ++i) {
        pages[i] = base + i * cfg.gap;
      }
      break;
    case clustering_kind::bimodal: {
      if (cfg.gap < 2) {
        throw domain_error("layout_for_simulation: bimodal gap must be >= 2");
      }
      const std::size_t split = count / 2;
      for (std::size_t i = 0; i < count; ++i) {
        pages[i] = base + i + (i >= split && split > 0 ? cfg.gap - 1 : 0);
      }
      break;
    }
  }
  // which region lands on which page is part of the placement
  std::shuffle(pages.begin(), pages.end(), rng);
  return region_layout{std::move(pages)};
}

}  // namespace qic
