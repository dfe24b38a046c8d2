#pragma once

#include <filesystem>
#include <string>

#include "qic/aggregate.hpp"
#include "qic/checker.hpp"
#include "qic/harness.hpp"
#include "qic/model.hpp"

namespace qic::io {

/// Unreadable, unwritable, or unparsable file.
struct io_error : error {
  using error::error;
};

// Trace file: {"region_count": n, "events": [r, ...]}; position k-1 holds
// the region of the event at time k. The one-dimensional counter array uses
// the same format.
execution_trace read_trace(const std::filesystem::path& path);
void write_trace(const std::filesystem::path& path, const execution_trace& trace);
one_dim_gca read_gca(const std::filesystem::path& path);
void write_gca(const std::filesystem::path& path, const one_dim_gca& gca);

// Snapshot file: {"values": [...]} plus optional "acq_times".
snapshot read_snapshot(const std::filesystem::path& path);
void write_snapshot(const std::filesystem::path& path, const snapshot& s);

// Report file: {"consistent": b, "t_hat": t, "mismatches": [{"region", ...}]}.
consistency_report read_report(const std::filesystem::path& path);
void write_report(const std::filesystem::path& path, const consistency_report& report);
std::string report_to_string(const consistency_report& report);

// Layout file: a bare array of page numbers.
region_layout read_layout(const std::filesystem::path& path);
void write_layout(const std::filesystem::path& path, const region_layout& layout);

// Plan file: {"order": [...], "events_between": [...]}.
acquisition_plan read_plan(const std::filesystem::path& path);
void write_plan(const std::filesystem::path& path, const acquisition_plan& plan);

std::string aggregate_to_string(const aggregate_stats& stats);
void write_aggregate(const std::filesystem::path& path, const aggregate_stats& stats);

/// One experiment bundle: a directory holding trace, snapshot, layout,
/// report and meta. `meta_json` must be a serialized JSON object; a
/// "timestamp" field is added if absent.
void write_bundle(const std::filesystem::path& dir, const sim_result& result,
                  const region_layout& layout, const consistency_report& report,
                  const std::string& meta_json);

}  // namespace qic::io
