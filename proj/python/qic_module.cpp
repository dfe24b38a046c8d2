#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qic/aggregate.hpp"
#include "qic/checker.hpp"
#include "qic/gca.hpp"
#include "qic/harness.hpp"
#include "qic/model.hpp"
#include "qic/oracle.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_qic, m) {
  m.doc() = "Quasi-instantaneous consistency checking for memory snapshots";

  py::register_exception<qic::error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<qic::domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<qic::capacity_error>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<qic::coverage_error>(m, "CoverageError", PyExc_RuntimeError);

  py::class_<qic::execution_trace>(m, "ExecutionTrace")
      .def(py::init<std::size_t, std::vector<qic::region_id>>(),
           "region_count"_a, "events"_a)
      .def_property_readonly("region_count", &qic::execution_trace::region_count)
      .def_property_readonly("events", &qic::execution_trace::events)
      .def_property_readonly("t_max", &qic::execution_trace::t_max)
      .def("value_at", &qic::execution_trace::value_at, "region"_a, "t"_a)
      .def("last_event_time", &qic::execution_trace::last_event_time,
           "region"_a, "t"_a);

  py::class_<qic::snapshot>(m, "Snapshot")
      .def(py::init([](std::vector<qic::region_value> values,
                       std::optional<std::vector<qic::logical_time>> acq_times) {
             return qic::snapshot{std::move(values), std::move(acq_times)};
           }),
           "values"_a, "acq_times"_a = py::none())
      .def_readwrite("values", &qic::snapshot::values)
      .def_readwrite("acq_times", &qic::snapshot::acq_times)
      .def_property_readonly("region_count", &qic::snapshot::region_count);

  m.def("is_instantaneous", &qic::is_instantaneous, "snapshot"_a);

  py::class_<qic::one_dim_gca>(m, "OneDimGca")
      .def(py::init<std::size_t, std::optional<qic::logical_time>>(),
           "region_count"_a, "capacity"_a = py::none())
      .def(py::init<std::size_t, std::vector<qic::region_id>>(),
           "region_count"_a, "entries"_a)
      .def_property_readonly("region_count", &qic::one_dim_gca::region_count)
      .def_property_readonly("entries", &qic::one_dim_gca::entries)
      .def("time", &qic::one_dim_gca::time)
      .def("record_event", &qic::one_dim_gca::record_event, "region"_a)
      .def("current_time", &qic::one_dim_gca::current_time, "t"_a)
      .def("to_trace", &qic::one_dim_gca::to_trace)
      .def_static("from_trace", &qic::one_dim_gca::from_trace, "trace"_a);

  py::class_<qic::carry_along_gca>(m, "CarryAlongGca")
      .def(py::init<std::size_t, std::optional<qic::logical_time>>(),
           "region_count"_a, "capacity"_a = py::none())
      .def_property_readonly("region_count", &qic::carry_along_gca::region_count)
      .def("time", &qic::carry_along_gca::time)
      .def("record_event", &qic::carry_along_gca::record_event, "region"_a)
      .def("current_time", &qic::carry_along_gca::current_time, "t"_a)
      .def("to_one_dim", &qic::carry_along_gca::to_one_dim);

  py::class_<qic::simplified_gca>(m, "SimplifiedGca")
      .def(py::init<std::size_t, std::optional<qic::logical_time>>(),
           "region_count"_a, "capacity"_a = py::none())
      .def_property_readonly("region_count", &qic::simplified_gca::region_count)
      .def("time", &qic::simplified_gca::time)
      .def("record_event", &qic::simplified_gca::record_event, "region"_a)
      .def("bit", &qic::simplified_gca::bit, "region"_a, "t"_a)
      .def("current_time", &qic::simplified_gca::current_time, "t"_a)
      .def("to_one_dim", &qic::simplified_gca::to_one_dim);

  py::class_<qic::region_mismatch>(m, "RegionMismatch")
      .def_readonly("region", &qic::region_mismatch::region)
      .def_readonly("snapshot_time", &qic::region_mismatch::snapshot_time)
      .def_readonly("expected_time", &qic::region_mismatch::expected_time)
      .def_readonly("missed_updates", &qic::region_mismatch::missed_updates)
      .def_readonly("raw_time_delta", &qic::region_mismatch::raw_time_delta)
      .def("__repr__", [](const qic::region_mismatch& mm) {
        return "RegionMismatch(region=" + std::to_string(mm.region) +
               ", snapshot_time=" + std::to_string(mm.snapshot_time) +
               ", expected_time=" + std::to_string(mm.expected_time) +
               ", missed_updates=" + std::to_string(mm.missed_updates) + ")";
      });

  py::class_<qic::consistency_report>(m, "ConsistencyReport")
      .def_readonly("consistent", &qic::consistency_report::consistent)
      .def_readonly("t_hat", &qic::consistency_report::t_hat)
      .def_readonly("mismatches", &qic::consistency_report::mismatches)
      .def("__repr__", [](const qic::consistency_report& r) {
        return std::string("ConsistencyReport(consistent=") +
               (r.consistent ? "True" : "False") +
               ", t_hat=" + std::to_string(r.t_hat) + ", mismatches=" +
               std::to_string(r.mismatches.size()) + ")";
      });

  m.def("normalize", &qic::normalize, "snapshot"_a);
  m.def("associated_time", &qic::associated_time, "normalized_times"_a);
  m.def("check",
        py::overload_cast<const qic::snapshot&, const qic::one_dim_gca&>(&qic::check),
        "snapshot"_a, "gca"_a);
  m.def("check",
        py::overload_cast<const qic::snapshot&, const qic::carry_along_gca&>(&qic::check),
        "snapshot"_a, "gca"_a);
  m.def("check",
        py::overload_cast<const qic::snapshot&, const qic::simplified_gca&>(&qic::check),
        "snapshot"_a, "gca"_a);

  py::class_<qic::oracle_verdict>(m, "OracleVerdict")
      .def_readonly("consistent", &qic::oracle_verdict::consistent)
      .def_readonly("witness_time", &qic::oracle_verdict::witness_time);

  m.def("instantaneous_snapshot", &qic::instantaneous_snapshot, "trace"_a, "t"_a);
  m.def("oracle_check", &qic::oracle_check, "trace"_a, "snapshot"_a);

  py::class_<qic::acquisition_plan>(m, "AcquisitionPlan")
      .def(py::init([](std::vector<qic::region_id> order,
                       std::vector<std::uint64_t> events_between) {
             return qic::acquisition_plan{std::move(order), std::move(events_between)};
           }),
           "order"_a, "events_between"_a)
      .def_readwrite("order", &qic::acquisition_plan::order)
      .def_readwrite("events_between", &qic::acquisition_plan::events_between)
      .def("total_events", &qic::acquisition_plan::total_events)
      .def("validate", &qic::acquisition_plan::validate, "region_count"_a)
      .def_static("sequential", &qic::acquisition_plan::sequential, "region_count"_a)
      .def_static("random_plan", &qic::acquisition_plan::random_plan,
                  "region_count"_a, "total_events"_a, "seed"_a);

  py::class_<qic::sim_result>(m, "SimResult")
      .def_readonly("trace", &qic::sim_result::trace)
      .def_readonly("snapshot", &qic::sim_result::snap)
      .def_readonly("gca", &qic::sim_result::gca);

  m.def(
      "simulate",
      [](std::size_t region_count, const qic::acquisition_plan& plan,
         std::uint64_t seed, std::vector<qic::region_id> script) {
        return qic::simulate(qic::sim_config{region_count, std::move(script)},
                             plan, seed);
      },
      "region_count"_a, "plan"_a, "seed"_a = 0,
      "script"_a = std::vector<qic::region_id>{});

  py::class_<qic::pause_range>(m, "PauseRange")
      .def(py::init([](std::uint32_t min_us, std::uint32_t max_us) {
             return qic::pause_range{min_us, max_us};
           }),
           "min_us"_a, "max_us"_a)
      .def_readwrite("min_us", &qic::pause_range::min_us)
      .def_readwrite("max_us", &qic::pause_range::max_us);

  py::class_<qic::pivot_config>(m, "PivotConfig")
      .def(py::init<>())
      .def_readwrite("region_count", &qic::pivot_config::region_count)
      .def_readwrite("worker_threads", &qic::pivot_config::worker_threads)
      .def_readwrite("mutation_ops", &qic::pivot_config::mutation_ops)
      .def_readwrite("acquire_after", &qic::pivot_config::acquire_after)
      .def_readwrite("copy_pause", &qic::pivot_config::copy_pause)
      .def_readwrite("worker_pause", &qic::pivot_config::worker_pause)
      .def_readwrite("seed", &qic::pivot_config::seed)
      .def_readwrite("gca_capacity", &qic::pivot_config::gca_capacity)
      .def_readwrite("copy_order", &qic::pivot_config::copy_order);

  m.def("run_pivot", &qic::run_pivot, "config"_a, "frozen"_a = false,
        py::call_guard<py::gil_scoped_release>());

  py::class_<qic::region_layout>(m, "RegionLayout")
      .def(py::init([](std::vector<std::uint64_t> pages) {
             return qic::region_layout{std::move(pages)};
           }),
           "page_addresses"_a)
      .def_readwrite("page_addresses", &qic::region_layout::page_addresses);

  py::class_<qic::spread_metrics>(m, "SpreadMetrics")
      .def_readonly("range_pages", &qic::spread_metrics::range_pages)
      .def_readonly("near_distances", &qic::spread_metrics::near_distances)
      .def_readonly("adjacent_distances", &qic::spread_metrics::adjacent_distances)
      .def_readonly("max_distance", &qic::spread_metrics::max_distance);

  m.def("compute_spread", &qic::compute_spread, "layout"_a);

  py::enum_<qic::clustering_kind>(m, "ClusteringKind")
      .value("PACKED", qic::clustering_kind::packed)
      .value("UNIFORM_GAP", qic::clustering_kind::uniform_gap)
      .value("BIMODAL", qic::clustering_kind::bimodal);

  m.def(
      "layout_for_simulation",
      [](std::size_t region_count, qic::clustering_kind kind, std::uint64_t gap,
         std::uint64_t seed) {
        return qic::layout_for_simulation({region_count, kind, gap}, seed);
      },
      "region_count"_a, "kind"_a = qic::clustering_kind::packed, "gap"_a = 1,
      "seed"_a = 0);

  py::class_<qic::aggregate_stats>(m, "AggregateStats")
      .def_readonly("min", &qic::aggregate_stats::min)
      .def_readonly("max", &qic::aggregate_stats::max)
      .def_readonly("sum", &qic::aggregate_stats::sum)
      .def_readonly("affected", &qic::aggregate_stats::affected)
      .def_readonly("total_runs", &qic::aggregate_stats::total_runs)
      .def("average", &qic::aggregate_stats::average)
      .def("average_text", &qic::aggregate_stats::average_text);

  m.def("aggregate_counts", &qic::aggregate_counts, "counts"_a);

  m.attr("__version__") = "0.1.0";
}
