#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sbaplace/instances.hpp"
#include "sbaplace/metaheuristics.hpp"
#include "sbaplace/model.hpp"

namespace sbaplace {

/// One solver entry of a sweep. `kind` selects the algorithm
/// (exact | exact-bnb | bpso | ga | greedy); `label` is the name written to
/// the CSV (defaults to kind) so several configurations of one algorithm can
/// coexist in a sweep.
struct SolverSpec {
  std::string kind;
  std::string label;
  BpsoConfig bpso;
  GaConfig ga;

  bool stochastic() const { return kind == "bpso" || kind == "ga"; }
};

struct SweepConfig {
  std::vector<std::string> presets;             // named bundled instances
  std::vector<std::filesystem::path> files;     // graph files to load
  std::vector<InstanceSpec> generated;          // extra generator recipes
  std::vector<double> hq_fractions;             // default 0.1 .. 0.9
  double alpha = 40.0;
  double beta1 = 20.0;
  double beta2 = 10.0;
  std::vector<SolverSpec> solvers;
  int repetitions = 10;                         // per stochastic solver
  std::uint64_t seed_base = 42;                 // rep r uses seed_base + r
  std::filesystem::path output;                 // CSV path; empty = in-memory only
};

/// The configuration the `bench` CLI runs when asked for "default":
/// all ten presets, nine hq fractions, alpha/beta defaults, and the
/// exact + bpso + ga + greedy solver set (1980 rows).
SweepConfig default_sweep_config();

/// Reads a JSON sweep configuration (schema documented in the README).
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// One sweep cell outcome. Field order here is the CSV column order.
struct BenchmarkRow {
  std::string instance;
  int n = 0;
  int edges = 0;
  double density = 0.0;
  double hq_fraction = 0.0;
  double hq_absolute = 0.0;
  std::string solver;
  std::uint64_t seed = 0;
  double total = 0.0;
  double hosting = 0.0;
  double public_comm = 0.0;
  double hybrid_comm = 0.0;
  double gap_to_optimal = 0.0;  // total/optimal - 1; NaN when optimal unknown
  double wall_time = 0.0;
  std::uint64_t evaluations = 0;
  bool feasible = false;
  std::string status = "ok";  // "ok" | "failed"
  std::string error;
};

/// Runs every (instance x hq_fraction x solver x repetition) cell in
/// deterministic order. When config.output is set, rows are appended and
/// flushed as they complete so an interrupted sweep keeps finished work.
/// Load or solver failures become status="failed" rows; the sweep continues.
std::vector<BenchmarkRow> run_sweep(const SweepConfig& config);

struct CellSummary {
  std::string instance;
  double hq_fraction = 0.0;
  std::string solver;
  int runs = 0;
  double total_median = 0.0;
  double total_min = 0.0;
  double total_max = 0.0;
  double wall_time_median = 0.0;
  double gap_median = 0.0;  // NaN when no optimal reference
};

struct SolverAggregate {
  std::string solver;
  int cells = 0;
  double mean_gap = 0.0;            // NaN when no optimal reference
  double time_ratio_vs_exact = 0.0; // mean of (cell median time / exact time)
};

struct Summary {
  std::vector<CellSummary> cells;
  std::vector<SolverAggregate> solvers;
};

/// Per-cell medians plus per-solver aggregates. Throws InvalidInput on
/// empty input. Failed rows are ignored.
Summary summarize(const std::vector<BenchmarkRow>& rows);

/// CSV with a fixed header (BenchmarkRow fields in declaration order).
/// Numbers are written with round-trip precision.
void emit_csv(const std::vector<BenchmarkRow>& rows,
              const std::filesystem::path& path);
void emit_csv(const std::vector<BenchmarkRow>& rows, std::ostream& out);

std::vector<BenchmarkRow> parse_csv(const std::filesystem::path& path);
std::vector<BenchmarkRow> parse_csv(std::istream& in);

/// Plot-ready series: per instance one <name>_cost.dat and one
/// <name>_time.dat under dir, blank-line-separated two-column
/// (hq_fraction, median) blocks per solver.
void emit_plot_data(const Summary& summary, const std::filesystem::path& dir);

void print_summary(const Summary& summary, std::ostream& out);

}  // namespace sbaplace
