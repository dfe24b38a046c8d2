// qicheck: run acquisition experiments, check snapshots for
// quasi-instantaneous consistency, and summarize results.
//
// Exit codes: 0 success (and: snapshot consistent), 1 I/O or data error,
// 2 bad usage, 3 snapshot inconsistent, 4 checker/oracle disagreement.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qic/aggregate.hpp"
#include "qic/checker.hpp"
#include "qic/harness.hpp"
#include "qic/io.hpp"
#include "qic/oracle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitDisagreement = 4;

struct clustering_opt {
  qic::clustering_kind kind = qic::clustering_kind::packed;
  std::uint64_t gap = 1;
};

// accepts "packed", "uniform:GAP" or "bimodal:GAP"
clustering_opt parse_clustering(const std::string& text) {
  clustering_opt opt;
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  if (colon != std::string::npos) {
    opt.gap = std::stoull(text.substr(colon + 1));
  }
  if (name == "packed") {
    opt.kind = qic::clustering_kind::packed;
  } else if (name == "uniform") {
    opt.kind = qic::clustering_kind::uniform_gap;
    if (colon == std::string::npos) {
      opt.gap = 10;
    }
  } else if (name == "bimodal") {
    opt.kind = qic::clustering_kind::bimodal;
    if (colon == std::string::npos) {
      opt.gap = 1000;
    }
  } else {
    throw CLI::ValidationError("--clustering",
                               "expected packed, uniform:GAP or bimodal:GAP");
  }
  return opt;
}

std::string verdict_line(const qic::consistency_report& report) {
  if (report.consistent) {
    return "consistent (t^ = " + std::to_string(report.t_hat) + ")";
  }
  return "inconsistent (t^ = " + std::to_string(report.t_hat) + ", " +
         std::to_string(report.mismatches.size()) + " region(s) affected)";
}

void print_aggregate_table(const qic::aggregate_stats& stats) {
  std::printf("%-6s %-6s %-8s %s\n", "Min", "Max", "Average", "Affected dumps");
  std::printf("%-6llu %-6llu %-8s %llu/%llu\n",
              static_cast<unsigned long long>(stats.min),
              static_cast<unsigned long long>(stats.max),
              stats.average_text().c_str(),
              static_cast<unsigned long long>(stats.affected),
              static_cast<unsigned long long>(stats.total_runs));
}

void print_spread_row(const qic::spread_metrics& m) {
  std::printf("%-18s %-22s %-19s %s\n", "Range (in pages)", "Distances <=10 pages",
              "Distances =1 page", "Max distance");
  std::printf("%-18llu %-22llu %-19llu %llu\n",
              static_cast<unsigned long long>(m.range_pages),
              static_cast<unsigned long long>(m.near_distances),
              static_cast<unsigned long long>(m.adjacent_distances),
              static_cast<unsigned long long>(m.max_distance));
}

// ------------------------------------------------------------- simulate

struct simulate_options {
  std::size_t regions = 0;
  std::uint64_t events = 100;
  std::uint64_t seed = 0;
  std::string plan_file;
  std::string out_dir;
  std::string clustering = "packed";
};

int run_simulate(const simulate_options& opt) {
  qic::acquisition_plan plan;
  if (!opt.plan_file.empty()) {
    plan = qic::io::read_plan(opt.plan_file);
    plan.validate(opt.regions);
  } else {
    plan = qic::acquisition_plan::random_plan(opt.regions, opt.events,
                                              opt.seed ^ 0x9e3779b97f4a7c15ULL);
  }

  const auto result = qic::simulate(qic::sim_config{opt.regions, {}}, plan, opt.seed);
  const auto report = qic::check(result.snap, result.gca);
  const auto cluster = parse_clustering(opt.clustering);
  const auto layout = qic::layout_for_simulation(
      {opt.regions, cluster.kind, cluster.gap}, opt.seed);

  json meta{{"kind", "simulate"},
            {"seed", opt.seed},
            {"region_count", opt.regions},
            {"clustering", opt.clustering},
            {"plan", {{"order", plan.order}, {"events_between", plan.events_between}}}};
  qic::io::write_bundle(opt.out_dir, result, layout, report, meta.dump());

  std::cout << "bundle written to " << opt.out_dir << ": " << verdict_line(report)
            << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- pivot

struct pivot_options {
  unsigned threads = 1;
  bool frozen = false;
  unsigned runs = 1;
  std::size_t regions = 100;
  std::uint64_t ops = 1'000'000;
  std::uint64_t acquire_after = 500;
  std::vector<std::uint32_t> copy_pause{500, 1500};
  std::vector<std::uint32_t> worker_pause{0, 1000};
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string clustering = "packed";
};

int run_pivot_cmd(const pivot_options& opt) {
  if (opt.copy_pause.size() != 2 || opt.worker_pause.size() != 2) {
    throw CLI::ValidationError("--copy-pause/--worker-pause",
                               "expected MIN and MAX microseconds");
  }
  const auto cluster = parse_clustering(opt.clustering);

  std::vector<std::uint64_t> counts;
  counts.reserve(opt.runs);
  for (unsigned run = 0; run < opt.runs; ++run) {
    const std::uint64_t run_seed = opt.seed + run;
    const auto layout = qic::layout_for_simulation(
        {opt.regions, cluster.kind, cluster.gap}, run_seed);

    qic::pivot_config cfg;
    cfg.region_count = opt.regions;
    cfg.worker_threads = opt.threads;
    cfg.mutation_ops = opt.ops;
    cfg.acquire_after = opt.acquire_after;
    cfg.copy_pause = {opt.copy_pause[0], opt.copy_pause[1]};
    cfg.worker_pause = {opt.worker_pause[0], opt.worker_pause[1]};
    cfg.seed = run_seed;

    // sweep the regions in ascending synthetic address order
    cfg.copy_order.resize(opt.regions);
    std::iota(cfg.copy_order.begin(), cfg.copy_order.end(), qic::region_id{0});
    std::sort(cfg.copy_order.begin(), cfg.copy_order.end(),
              [&](qic::region_id a, qic::region_id b) {
                return layout.page_addresses[a] < layout.page_addresses[b];
              });

    const auto result = qic::run_pivot(cfg, opt.frozen);
    const auto report = qic::check(result.snap, result.gca);
    counts.push_back(report.mismatches.size());

    std::cout << "run " << run << ": " << verdict_line(report) << "\n";

    if (!opt.out_dir.empty()) {
      json meta{{"kind", "pivot"},
                {"run", run},
                {"seed", run_seed},
                {"frozen", opt.frozen},
                {"region_count", opt.regions},
                {"worker_threads", opt.threads},
                {"mutation_ops", opt.ops},
                {"acquire_after", opt.acquire_after},
                {"copy_pause", opt.copy_pause},
                {"worker_pause", opt.worker_pause},
                {"clustering", opt.clustering}};
      char name[32];
      std::snprintf(name, sizeof(name), "run_%03u", run);
      qic::io::write_bundle(fs::path(opt.out_dir) / name, result, layout, report,
                            meta.dump());
    }
  }

  const auto stats = qic::aggregate_counts(counts);
  print_aggregate_table(stats);
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct check_options {
  std::string snapshot_file;
  std::string gca_file;
  std::string trace_file;
  std::string out_file;
  bool oracle = false;
};

int run_check(const check_options& opt) {
  const auto snap = qic::io::read_snapshot(opt.snapshot_file);
  const auto gca = qic::io::read_gca(opt.gca_file);

  const auto report = qic::check(snap, gca);
  std::cout << qic::io::report_to_string(report) << "\n";
  if (!opt.out_file.empty()) {
    qic::io::write_report(opt.out_file, report);
  }

  if (opt.oracle) {
    const auto trace = opt.trace_file.empty() ? gca.to_trace()
                                              : qic::io::read_trace(opt.trace_file);
    const auto verdict = qic::oracle_check(trace, snap);
    if (verdict.consistent != report.consistent) {
      std::cerr << "checker/oracle disagreement: checker says "
                << (report.consistent ? "consistent" : "inconsistent")
                << ", oracle says "
                << (verdict.consistent ? "consistent" : "inconsistent") << "\n";
      return kExitDisagreement;
    }
    std::cerr << "oracle agrees: " << verdict_line(report) << "\n";
  } else {
    std::cerr << verdict_line(report) << "\n";
  }
  return report.consistent ? kExitOk : kExitInconsistent;
}

// ------------------------------------------------------------ aggregate

struct aggregate_options {
  std::string dir;
  std::string out_file;
};

int run_aggregate(const aggregate_options& opt) {
  // accept bundle members named "report" and loose "*.json" report files
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(opt.dir)) {
    if (!entry.is_regular_file()) {
      continue;
    }
    const auto& path = entry.path();
    if (path.filename() == "report" || path.extension() == ".json") {
      files.push_back(path);
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<std::uint64_t> counts;
  for (const auto& path : files) {
    try {
      counts.push_back(qic::io::read_report(path).mismatches.size());
    } catch (const qic::error&) {
      // not a report; other bundle members land here
    }
  }
  if (counts.empty()) {
    std::cerr << "no reports found under " << opt.dir << "\n";
    return kExitUsage;
  }

  const auto stats = qic::aggregate_counts(counts);
  print_aggregate_table(stats);
  if (!opt.out_file.empty()) {
    qic::io::write_aggregate(opt.out_file, stats);
  } else {
    std::cout << qic::io::aggregate_to_string(stats) << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- spread

struct spread_options {
  std::string layout_file;
  std::string bundle_dir;
  std::string out_file;
};

int run_spread(const spread_options& opt) {
  const fs::path path = opt.layout_file.empty()
                            ? fs::path(opt.bundle_dir) / "layout"
                            : fs::path(opt.layout_file);
  const auto layout = qic::io::read_layout(path);
  const auto metrics = qic::compute_spread(layout);
  print_spread_row(metrics);
  if (!opt.out_file.empty()) {
    json j{{"range_pages", metrics.range_pages},
           {"near_distances", metrics.near_distances},
           {"adjacent_distances", metrics.adjacent_distances},
           {"max_distance", metrics.max_distance}};
    std::ofstream out(opt.out_file);
    if (!out) {
      throw qic::io::io_error("cannot write " + opt.out_file);
    }
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-instantaneous consistency checking for memory snapshots"};
  app.require_subcommand(1);

  simulate_options sim_opt;
  auto* sim = app.add_subcommand(
      "simulate", "run the deterministic acquisition simulator, write a bundle");
  sim->add_option("--regions", sim_opt.regions, "number of memory regions")
      ->required()
      ->check(CLI::PositiveNumber);
  sim->add_option("--events", sim_opt.events,
                  "mutation events to inject (ignored with --plan)");
  sim->add_option("--plan", sim_opt.plan_file, "acquisition plan file")
      ->check(CLI::ExistingFile);
  sim->add_option("--seed", sim_opt.seed, "seed for plan and event generation");
  sim->add_option("--out", sim_opt.out_dir, "bundle output directory")->required();
  sim->add_option("--clustering", sim_opt.clustering,
                  "layout shape: packed, uniform:GAP or bimodal:GAP");

  pivot_options piv_opt;
  auto* piv = app.add_subcommand(
      "pivot", "run the concurrent pivot workload and check each snapshot");
  piv->add_option("--threads", piv_opt.threads, "worker threads (1 low, 8 high)")
      ->check(CLI::PositiveNumber);
  piv->add_flag("--frozen", piv_opt.frozen, "quiesce workers during acquisition");
  piv->add_option("--runs", piv_opt.runs, "number of repetitions")
      ->check(CLI::PositiveNumber);
  piv->add_option("--regions", piv_opt.regions, "number of memory regions")
      ->check(CLI::PositiveNumber);
  piv->add_option("--ops", piv_opt.ops, "total mutation event budget")
      ->check(CLI::PositiveNumber);
  piv->add_option("--acquire-after", piv_opt.acquire_after,
                  "events to wait for before acquisition starts");
  piv->add_option("--copy-pause", piv_opt.copy_pause,
                  "pause between region copies: MIN MAX microseconds")
      ->expected(2);
  piv->add_option("--worker-pause", piv_opt.worker_pause,
                  "workers' short wait: MIN MAX microseconds")
      ->expected(2);
  piv->add_option("--seed", piv_opt.seed, "base seed (run k uses seed+k)");
  piv->add_option("--out", piv_opt.out_dir, "directory for per-run bundles");
  piv->add_option("--clustering", piv_opt.clustering,
                  "layout shape: packed, uniform:GAP or bimodal:GAP");

  check_options chk_opt;
  auto* chk = app.add_subcommand(
      "check", "decide quasi-instantaneous consistency of a snapshot");
  chk->add_option("--snapshot", chk_opt.snapshot_file, "snapshot file")
      ->required()
      ->check(CLI::ExistingFile);
  chk->add_option("--gca", chk_opt.gca_file, "one-dimensional counter array file")
      ->required()
      ->check(CLI::ExistingFile);
  chk->add_flag("--oracle", chk_opt.oracle,
                "cross-check the verdict against the brute-force oracle");
  chk->add_option("--trace", chk_opt.trace_file,
                  "trace file for the oracle (defaults to the gca)")
      ->check(CLI::ExistingFile);
  chk->add_option("--out", chk_opt.out_file, "also write the report here");

  aggregate_options agg_opt;
  auto* agg = app.add_subcommand(
      "aggregate", "summarize the reports found under a directory");
  agg->add_option("--dir", agg_opt.dir, "directory holding reports or bundles")
      ->required()
      ->check(CLI::ExistingDirectory);
  agg->add_option("--out", agg_opt.out_file, "write the summary record here");

  spread_options spr_opt;
  auto* spr = app.add_subcommand("spread", "physical layout spread metrics");
  auto* layout_opt =
      spr->add_option("--layout", spr_opt.layout_file, "layout file")
          ->check(CLI::ExistingFile);
  spr->add_option("--bundle", spr_opt.bundle_dir, "bundle directory")
      ->check(CLI::ExistingDirectory)
      ->excludes(layout_opt);
  spr->add_option("--out", spr_opt.out_file, "write the metrics record here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sim) {
      return run_simulate(sim_opt);
    }
    if (*piv) {
      return run_pivot_cmd(piv_opt);
    }
    if (*chk) {
      return run_check(chk_opt);
    }
    if (*agg) {
      return run_aggregate(agg_opt);
    }
    if (*spr) {
      if (spr_opt.layout_file.empty() && spr_opt.bundle_dir.empty()) {
        std::cerr << "spread: one of --layout or --bundle is required\n";
        return kExitUsage;
      }
      return run_spread(spr_opt);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const qic::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
