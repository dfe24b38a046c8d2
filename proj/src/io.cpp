#include "qic/io.hpp"

#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

namespace qic::io {

namespace {

using nlohmann::json;

json load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw io_error("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw io_error(path.string() + ": " + e.what());
  }
}

void save(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw io_error("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw io_error("write failed for " + path.string());
  }
}

const json& field(const json& j, const char* name,
                  const std::filesystem::path& path) {
  if (!j.is_object() || !j.contains(name)) {
    throw io_error(path.string() + ": missing field \"" + name + "\"");
  }
  return j.at(name);
}

template <typename T>
T as(const json& j, const char* name, const std::filesystem::path& path) {
  try {
    return field(j, name, path).get<T>();
  } catch (const json::exception& e) {
    throw io_error(path.string() + ": field \"" + name + "\": " + e.what());
  }
}

std::string timestamp_now() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

execution_trace read_trace(const std::filesystem::path& path) {
  const json j = load(path);
  return execution_trace(as<std::size_t>(j, "region_count", path),
                         as<std::vector<region_id>>(j, "events", path));
}

void write_trace(const std::filesystem::path& path, const execution_trace& trace) {
  save(path, json{{"region_count", trace.region_count()},
                  {"events", trace.events()}});
}

one_dim_gca read_gca(const std::filesystem::path& path) {
  const json j = load(path);
  return one_dim_gca(as<std::size_t>(j, "region_count", path),
                     as<std::vector<region_id>>(j, "events", path));
}

void write_gca(const std::filesystem::path& path, const one_dim_gca& gca) {
  save(path, json{{"region_count", gca.region_count()},
                  {"events", gca.entries()}});
}

snapshot read_snapshot(const std::filesystem::path& path) {
  const json j = load(path);
  snapshot s;
  s.values = as<std::vector<region_value>>(j, "values", path);
  if (j.is_object() && j.contains("acq_times")) {
    s.acq_times = as<std::vector<logical_time>>(j, "acq_times", path);
    if (s.acq_times->size() != s.values.size()) {
      throw io_error(path.string() + ": acq_times and values lengths differ");
    }
  }
  return s;
}

void write_snapshot(const std::filesystem::path& path, const snapshot& s) {
  json j{{"values", s.values}};
  if (s.acq_times) {
    j["acq_times"] = *s.acq_times;
  }
  save(path, j);
}

namespace {

json report_to_json(const consistency_report& report) {
  json mismatches = json::array();
  for (const region_mismatch& mm : report.mismatches) {
    mismatches.push_back({{"region", mm.region},
                          {"snapshot_time", mm.snapshot_time},
                          {"expected_time", mm.expected_time},
                          {"missed_updates", mm.missed_updates},
                          {"raw_time_delta", mm.raw_time_delta}});
  }
  return json{{"consistent", report.consistent},
              {"t_hat", report.t_hat},
              {"mismatches", std::move(mismatches)}};
}

}  // namespace

consistency_report read_report(const std::filesystem::path& path) {
  const json j = load(path);
  consistency_report report;
  report.consistent = as<bool>(j, "consistent", path);
  report.t_hat = as<logical_time>(j, "t_hat", path);
  for (const json& m : field(j, "mismatches", path)) {
    region_mismatch mm;
    mm.region = as<region_id>(m, "region", path);
    mm.snapshot_time = as<logical_time>(m, "snapshot_time", path);
    mm.expected_time = as<logical_time>(m, "expected_time", path);
    mm.missed_updates = as<std::uint64_t>(m, "missed_updates", path);
    mm.raw_time_delta = as<std::uint64_t>(m, "raw_time_delta", path);
    report.mismatches.push_back(mm);
  }
  return report;
}

void write_report(const std::filesystem::path& path,
                  const consistency_report& report) {
  save(path, report_to_json(report));
}

std::string report_to_string(const consistency_report& report) {
  return report_to_json(report).dump(2);
}

region_layout read_layout(const std::filesystem::path& path) {
  const json j = load(path);
  if (!j.is_array()) {
    throw io_error(path.string() + ": layout must be an array of page numbers");
  }
  try {
    return region_layout{j.get<std::vector<std::uint64_t>>()};
  } catch (const json::exception& e) {
    throw io_error(path.string() + ": " + e.what());
  }
}

void write_layout(const std::filesystem::path& path, const region_layout& layout) {
  save(path, json(layout.page_addresses));
}

acquisition_plan read_plan(const std::filesystem::path& path) {
  const json j = load(path);
  acquisition_plan plan;
  plan.order = as<std::vector<region_id>>(j, "order", path);
  plan.events_between = as<std::vector<std::uint64_t>>(j, "events_between", path);
  return plan;
}

void write_plan(const std::filesystem::path& path, const acquisition_plan& plan) {
  save(path, json{{"order", plan.order},
                  {"events_between", plan.events_between}});
}

namespace {

json aggregate_to_json(const aggregate_stats& stats) {
  return json{{"min", stats.min},
              {"max", stats.max},
              {"average", stats.average()},
              {"affected", stats.affected},
              {"total_runs", stats.total_runs}};
}

}  // namespace

std::string aggregate_to_string(const aggregate_stats& stats) {
  return aggregate_to_json(stats).dump(2);
}

void write_aggregate(const std::filesystem::path& path, const aggregate_stats& stats) {
  save(path, aggregate_to_json(stats));
}

void write_bundle(const std::filesystem::path& dir, const sim_result& result,
                  const region_layout& layout, const consistency_report& report,
                  const std::string& meta_json) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw io_error("cannot create " + dir.string() + ": " + ec.message());
  }
  json meta;
  try {
    meta = json::parse(meta_json);
  } catch (const json::parse_error& e) {
    throw io_error(std::string("meta is not valid JSON: ") + e.what());
  }
  if (!meta.contains("timestamp")) {
    meta["timestamp"] = timestamp_now();
  }
  write_trace(dir / "trace", result.trace);
  write_snapshot(dir / "snapshot", result.snap);
  write_layout(dir / "layout", layout);
  write_report(dir / "report", report);
  save(dir / "meta", meta);
}

}  // namespace qic::io
