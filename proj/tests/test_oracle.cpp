#include <doctest.h>

#include <random>

#include "qic/harness.hpp"
#include "qic/oracle.hpp"

using namespace qic;

TEST_CASE("instantaneous_snapshot freezes the state at t") {
  const execution_trace trace(3, {1, 0, 2, 1, 0});

  const auto at4 = instantaneous_snapshot(trace, 4);
  CHECK(at4.values == std::vector<region_value>{2, 4, 3});
  REQUIRE(at4.acq_times.has_value());
  CHECK(*at4.acq_times == std::vector<logical_time>{4, 4, 4});
  CHECK(is_instantaneous(at4));

  const auto at0 = instantaneous_snapshot(trace, 0);
  CHECK(at0.values == std::vector<region_value>{0, 0, 0});

  CHECK_THROWS_AS(instantaneous_snapshot(trace, 6), domain_error);
}

TEST_CASE("oracle_check scans every instantaneous snapshot") {
  const execution_trace trace(3, {1, 0, 2, 1, 0});

  snapshot smeared;
  smeared.values = {5, 1, 3};
  const auto bad = oracle_check(trace, smeared);
  CHECK_FALSE(bad.consistent);
  CHECK_FALSE(bad.witness_time.has_value());

  snapshot coexistent;
  coexistent.values = {2, 4, 3};
  const auto good = oracle_check(trace, coexistent);
  CHECK(good.consistent);
  CHECK(good.witness_time == 4);

  const auto final_state = instantaneous_snapshot(trace, trace.t_max());
  const auto self = oracle_check(trace, final_state);
  CHECK(self.consistent);
  CHECK(self.witness_time == trace.t_max());
}

TEST_CASE("oracle_check rejects mismatched region counts") {
  const execution_trace trace(3, {0, 1});
  snapshot s;
  s.values = {0, 0};
  CHECK_THROWS_AS(oracle_check(trace, s), domain_error);
}

TEST_CASE("witnesses are valid and minimal") {
  std::mt19937_64 rng(20250810);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng() % 6;
    const auto plan = acquisition_plan::random_plan(n, rng() % 60, rng());
    const auto result = simulate(sim_config{n, {}}, plan, rng());
    const auto verdict = oracle_check(result.trace, result.snap);
    if (!verdict.consistent) {
      continue;
    }
    const logical_time witness = *verdict.witness_time;
    CHECK(instantaneous_snapshot(result.trace, witness).values == result.snap.values);
    for (logical_time earlier = 0; earlier < witness; ++earlier) {
      CHECK(instantaneous_snapshot(result.trace, earlier).values != result.snap.values);
    }
  }
}
