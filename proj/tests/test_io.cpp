#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "qic/aggregate.hpp"
#include "qic/checker.hpp"
#include "qic/harness.hpp"
#include "qic/io.hpp"

using namespace qic;
namespace fs = std::filesystem;

namespace {

struct temp_dir {
  fs::path path;
  temp_dir() {
    path = fs::temp_directory_path() /
           ("qic_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~temp_dir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("aggregate_counts reproduces the summary table row") {
  const std::vector<std::uint64_t> counts{0, 0, 0, 2, 15, 16, 17, 21, 30, 37};
  const auto stats = aggregate_counts(counts);
  CHECK(stats.min == 0);
  CHECK(stats.max == 37);
  CHECK(stats.sum == 138);
  CHECK(stats.total_runs == 10);
  CHECK(stats.affected == 7);
  CHECK(stats.average_text() == "13.8");
  CHECK(stats.average() == doctest::Approx(13.8));
}

TEST_CASE("aggregate_counts trivial and error cases") {
  const auto zeros = aggregate_counts({0, 0, 0});
  CHECK(zeros.min == 0);
  CHECK(zeros.max == 0);
  CHECK(zeros.affected == 0);
  CHECK(zeros.average_text() == "0.0");

  const auto single = aggregate_counts({5});
  CHECK(single.min == 5);
  CHECK(single.max == 5);
  CHECK(single.affected == 1);
  CHECK(single.total_runs == 1);
  CHECK(single.average_text() == "5.0");

  CHECK_THROWS_AS(aggregate_counts({}), domain_error);
}

TEST_CASE("aggregation is order independent") {
  std::mt19937_64 rng(21);
  std::vector<std::uint64_t> counts(25);
  for (auto& c : counts) {
    c = rng() % 40;
  }
  const auto a = aggregate_counts(counts);
  std::shuffle(counts.begin(), counts.end(), rng);
  const auto b = aggregate_counts(counts);
  CHECK(a.min == b.min);
  CHECK(a.max == b.max);
  CHECK(a.sum == b.sum);
  CHECK(a.affected == b.affected);
}

TEST_CASE("trace and gca files round-trip") {
  temp_dir tmp;
  const execution_trace trace(3, {1, 0, 2, 1, 0});
  io::write_trace(tmp.path / "trace", trace);
  const auto back = io::read_trace(tmp.path / "trace");
  CHECK(back.region_count() == 3);
  CHECK(back.events() == trace.events());

  const auto gca = one_dim_gca::from_trace(trace);
  io::write_gca(tmp.path / "gca", gca);
  CHECK(io::read_gca(tmp.path / "gca").entries() == gca.entries());
  // the one-dimensional array and the trace share one format
  CHECK(io::read_trace(tmp.path / "gca").events() == trace.events());
}

TEST_CASE("snapshot files round-trip with and without acq_times") {
  temp_dir tmp;
  snapshot s;
  s.values = {5, 1, 3};
  io::write_snapshot(tmp.path / "bare", s);
  const auto bare = io::read_snapshot(tmp.path / "bare");
  CHECK(bare.values == s.values);
  CHECK_FALSE(bare.acq_times.has_value());

  s.acq_times = std::vector<logical_time>{5, 1, 4};
  io::write_snapshot(tmp.path / "timed", s);
  const auto timed = io::read_snapshot(tmp.path / "timed");
  REQUIRE(timed.acq_times.has_value());
  CHECK(*timed.acq_times == *s.acq_times);
}

TEST_CASE("report files round-trip") {
  temp_dir tmp;
  consistency_report report;
  report.consistent = false;
  report.t_hat = 5;
  report.mismatches.push_back({1, 1, 4, 1, 3});
  io::write_report(tmp.path / "report", report);
  const auto back = io::read_report(tmp.path / "report");
  CHECK(back.consistent == false);
  CHECK(back.t_hat == 5);
  REQUIRE(back.mismatches.size() == 1);
  CHECK(back.mismatches[0].region == 1);
  CHECK(back.mismatches[0].snapshot_time == 1);
  CHECK(back.mismatches[0].expected_time == 4);
  CHECK(back.mismatches[0].missed_updates == 1);
  CHECK(back.mismatches[0].raw_time_delta == 3);
}

TEST_CASE("layout and plan files round-trip") {
  temp_dir tmp;
  const region_layout layout{{0, 1, 2, 5000}};
  io::write_layout(tmp.path / "layout", layout);
  CHECK(io::read_layout(tmp.path / "layout").page_addresses == layout.page_addresses);

  const auto plan = acquisition_plan::random_plan(4, 11, 3);
  io::write_plan(tmp.path / "plan", plan);
  const auto back = io::read_plan(tmp.path / "plan");
  CHECK(back.order == plan.order);
  CHECK(back.events_between == plan.events_between);
}

TEST_CASE("malformed files raise io_error") {
  temp_dir tmp;
  std::ofstream(tmp.path / "broken") << "{not json";
  CHECK_THROWS_AS(io::read_trace(tmp.path / "broken"), io::io_error);
  CHECK_THROWS_AS(io::read_trace(tmp.path / "missing"), io::io_error);

  std::ofstream(tmp.path / "wrong") << R"({"region_count": 2})";
  CHECK_THROWS_AS(io::read_trace(tmp.path / "wrong"), io::io_error);

  std::ofstream(tmp.path / "types") << R"({"values": "nope"})";
  CHECK_THROWS_AS(io::read_snapshot(tmp.path / "types"), io::io_error);

  std::ofstream(tmp.path / "layout") << R"({"pages": []})";
  CHECK_THROWS_AS(io::read_layout(tmp.path / "layout"), io::io_error);
}

TEST_CASE("bundles contain the five run files") {
  temp_dir tmp;
  const auto plan = acquisition_plan::random_plan(4, 30, 1);
  const auto result = simulate(sim_config{4, {}}, plan, 1);
  const auto report = check(result.snap, result.gca);
  const auto layout = layout_for_simulation({4, clustering_kind::packed, 1}, 1);

  const fs::path dir = tmp.path / "run_000";
  io::write_bundle(dir, result, layout, report, R"({"kind":"simulate","seed":1})");

  for (const char* name : {"trace", "snapshot", "layout", "report", "meta"}) {
    CHECK(fs::exists(dir / name));
  }
  CHECK(io::read_trace(dir / "trace").events() == result.trace.events());
  CHECK(io::read_snapshot(dir / "snapshot").values == result.snap.values);
  CHECK(io::read_report(dir / "report").consistent == report.consistent);
  CHECK(io::read_layout(dir / "layout").page_addresses == layout.page_addresses);
}
