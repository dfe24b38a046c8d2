#include <doctest.h>

#include <random>

#include "qic/model.hpp"

using namespace qic;

namespace {

execution_trace random_trace(std::mt19937_64& rng, std::size_t max_regions,
                             std::size_t max_events) {
  std::uniform_int_distribution<std::size_t> nr(1, max_regions);
  std::uniform_int_distribution<std::size_t> ne(0, max_events);
  const std::size_t n = nr(rng);
  std::uniform_int_distribution<region_id> pick(0, static_cast<region_id>(n - 1));
  std::vector<region_id> events(ne(rng));
  for (auto& e : events) {
    e = pick(rng);
  }
  return execution_trace(n, std::move(events));
}

}  // namespace

TEST_CASE("trace construction validates inputs") {
  CHECK_THROWS_AS(execution_trace(0, {}), domain_error);
  CHECK_THROWS_AS(execution_trace(2, {0, 2}), domain_error);
  const execution_trace trace(3, {0, 1, 2, 2, 1});
  CHECK(trace.region_count() == 3);
  CHECK(trace.t_max() == 5);
}

TEST_CASE("value_at returns the last write at or before t") {
  const execution_trace trace(3, {0, 1, 2, 2, 1});
  CHECK(trace.value_at(1, 5) == 5);
  CHECK(trace.value_at(0, 5) == 1);
  CHECK(trace.value_at(2, 5) == 4);
  CHECK(trace.value_at(2, 2) == 0);

  SUBCASE("time 0 is the untouched state") {
    for (region_id r = 0; r < 3; ++r) {
      CHECK(trace.value_at(r, 0) == 0);
    }
  }
  SUBCASE("out of range arguments") {
    CHECK_THROWS_AS(trace.value_at(3, 1), domain_error);
    CHECK_THROWS_AS(trace.value_at(0, 6), domain_error);
  }
}

TEST_CASE("last_event_time examples") {
  const execution_trace trace(3, {0, 1, 2, 2, 1});
  CHECK(trace.last_event_time(2, 5) == 4);
  CHECK(trace.last_event_time(1, 3) == 2);

  const execution_trace untouched(4, {1, 1, 1});
  CHECK(untouched.last_event_time(0, 3) == 0);
  CHECK(untouched.last_event_time(2, 0) == 0);
}

TEST_CASE("stability: values change exactly when an event hits the region") {
  std::mt19937_64 rng(20250810);
  for (int iter = 0; iter < 50; ++iter) {
    const execution_trace trace = random_trace(rng, 5, 40);
    for (region_id r = 0; r < trace.region_count(); ++r) {
      for (logical_time t = 0; t <= trace.t_max(); ++t) {
        for (logical_time step = 0; t + step <= trace.t_max(); ++step) {
          bool touched = false;
          for (logical_time k = t + 1; k <= t + step; ++k) {
            touched |= trace.events()[k - 1] == r;
          }
          const bool same = trace.value_at(r, t) == trace.value_at(r, t + step);
          CHECK(same == !touched);
        }
      }
    }
  }
}

TEST_CASE("agreement and the value-equals-timestamp convention") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const execution_trace trace = random_trace(rng, 6, 60);
    for (region_id r = 0; r < trace.region_count(); ++r) {
      for (logical_time t = 0; t <= trace.t_max(); ++t) {
        const logical_time last = trace.last_event_time(r, t);
        CHECK(trace.value_at(r, t) == trace.value_at(r, last));
        CHECK(trace.value_at(r, t) == last);
      }
    }
  }
}

TEST_CASE("last_event_time is monotone in t") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const execution_trace trace = random_trace(rng, 4, 50);
    for (region_id r = 0; r < trace.region_count(); ++r) {
      logical_time previous = 0;
      for (logical_time t = 0; t <= trace.t_max(); ++t) {
        const logical_time last = trace.last_event_time(r, t);
        CHECK(last >= previous);
        previous = last;
      }
    }
  }
}

TEST_CASE("is_instantaneous") {
  snapshot s;
  s.values = {1, 2, 3};
  CHECK_FALSE(is_instantaneous(s));
  s.acq_times = std::vector<logical_time>{4, 4, 4};
  CHECK(is_instantaneous(s));
  (*s.acq_times)[1] = 5;
  CHECK_FALSE(is_instantaneous(s));
}
