#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbaplace/bench.hpp"
#include "sbaplace/exact.hpp"
#include "sbaplace/instances.hpp"
#include "sbaplace/metaheuristics.hpp"
#include "sbaplace/model.hpp"

namespace {

using namespace sbaplace;

std::string fmt(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

CostParams parse_params(const std::string& triple) {
  std::vector<double> values;
  std::stringstream ss(triple);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) {
      std::size_t used = 0;
      values.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    }
  } catch (const std::exception&) {
    throw InvalidInput("--params expects three numbers 'alpha,beta1,beta2', got '" +
                       triple + "'");
  }
  if (values.size() != 3) {
    throw InvalidInput("--params expects 'alpha,beta1,beta2', got '" + triple + "'");
  }
  return CostParams{values[0], values[1], values[2], 0.0};
}

struct HqOption {
  std::optional<double> absolute;
  std::optional<double> fraction;

  double resolve(const SbaGraph& graph) const {
    if (absolute && fraction) {
      throw InvalidInput("use either --hq or --hq-frac, not both");
    }
    if (fraction) return hq_from_fraction(graph, *fraction);
    return absolute.value_or(0.0);
  }
};

void add_shared_flags(CLI::App* cmd, std::string& params, HqOption& hq,
                      std::uint64_t& seed) {
  cmd->add_option("--params", params,
                  "Cost coefficients as 'alpha,beta1,beta2'")
      ->capture_default_str();
  cmd->add_option("--hq", hq.absolute, "Offload threshold in hosting units");
  cmd->add_option("--hq-frac", hq.fraction,
                  "Offload threshold as a fraction of total hosting")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
}

void print_result(const SbaGraph& graph, const CostParams& params,
                  const SolveResult& r) {
  std::cout << "solver:       " << r.solver_name << '\n'
            << "n/edges:      " << graph.node_count() << " / "
            << graph.edge_count() << '\n'
            << "hq:           " << fmt(params.hq) << '\n'
            << "placement:    " << r.placement.to_string() << '\n'
            << "feasible:     " << (r.feasible ? "true" : "false") << '\n'
            << "hosting:      " << fmt(r.breakdown.hosting) << '\n'
            << "public_comm:  " << fmt(r.breakdown.public_comm) << '\n'
            << "hybrid_comm:  " << fmt(r.breakdown.hybrid_comm) << '\n'
            << "total:        " << fmt(r.breakdown.total) << '\n'
            << "iterations:   " << r.iterations << '\n'
            << "evaluations:  " << r.evaluations << '\n'
            << "wall_time_s:  " << fmt(r.wall_time) << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Hybrid-cloud service placement toolkit: cost model, exact and "
               "heuristic solvers, instance generator, benchmark harness"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate instances and write graph files");
  std::string gen_preset;
  InstanceSpec gen_spec;
  gen_spec.name = "custom";
  std::optional<std::uint64_t> gen_seed;
  std::string gen_output;
  std::string gen_format = "canonical";
  bool gen_list = false;
  gen->add_option("--preset", gen_preset, "Preset name G1..G10, or 'all'");
  gen->add_option("--nodes", gen_spec.nodes, "Node count for a custom instance");
  gen->add_option("--edges", gen_spec.edges, "Edge count for a custom instance");
  gen->add_option("--total-hosting", gen_spec.total_hosting,
                  "Total hosting units for a custom instance");
  gen->add_option("--rate-min", gen_spec.rate_min, "Minimum edge rate")
      ->capture_default_str();
  gen->add_option("--rate-max", gen_spec.rate_max, "Maximum edge rate")
      ->capture_default_str();
  gen->add_option("--name", gen_spec.name, "Instance name for a custom instance");
  gen->add_option("--seed", gen_seed, "RNG seed (overrides the preset default)");
  gen->add_option("-o,--output", gen_output,
                  "Output file (directory when --preset all)");
  gen->add_option("--format", gen_format, "Graph file format")
      ->check(CLI::IsMember({"canonical", "edgelist"}))
      ->capture_default_str();
  gen->add_flag("--list", gen_list, "Print the preset table and exit");

  // --- solve -------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "Run one heuristic solver on a graph");
  std::string solve_file;
  std::string solve_solver = "bpso";
  std::string solve_params = "40,20,10";
  HqOption solve_hq;
  std::uint64_t solve_seed = 0;
  BpsoConfig bpso_cfg;
  GaConfig ga_cfg;
  bool solve_penalty = false;
  std::optional<double> solve_penalty_factor;
  solve->add_option("graph", solve_file, "Graph file")->required();
  solve->add_option("--solver", solve_solver, "Solver to run")
      ->check(CLI::IsMember({"bpso", "ga", "greedy"}))
      ->capture_default_str();
  add_shared_flags(solve, solve_params, solve_hq, solve_seed);
  solve->add_option("--swarm-size", bpso_cfg.swarm_size)->capture_default_str();
  solve->add_option("--iters", bpso_cfg.max_iters)->capture_default_str();
  solve->add_option("--w-start", bpso_cfg.w_start)->capture_default_str();
  solve->add_option("--w-end", bpso_cfg.w_end)->capture_default_str();
  solve->add_option("--c1", bpso_cfg.c1)->capture_default_str();
  solve->add_option("--c2", bpso_cfg.c2)->capture_default_str();
  solve->add_option("--v-max", bpso_cfg.v_max)->capture_default_str();
  solve->add_option("--stagnation", bpso_cfg.stagnation_limit)
      ->capture_default_str();
  solve->add_option("--population", ga_cfg.population)->capture_default_str();
  solve->add_option("--generations", ga_cfg.generations)->capture_default_str();
  solve->add_option("--crossover-rate", ga_cfg.crossover_rate)
      ->capture_default_str();
  std::optional<double> ga_mutation;
  solve->add_option("--mutation-rate", ga_mutation,
                    "Per-bit mutation probability (default 1/n)");
  solve->add_option("--tournament", ga_cfg.tournament_size)
      ->capture_default_str();
  solve->add_option("--elitism", ga_cfg.elitism)->capture_default_str();
  solve->add_flag("--penalty", solve_penalty,
                  "Penalize infeasible candidates instead of repairing them");
  solve->add_option("--penalty-factor", solve_penalty_factor,
                    "Penalty per missing hosting unit (default 10*alpha)");

  // --- exact -------------------------------------------------------------
  auto* exact = app.add_subcommand("exact", "Compute the optimal placement");
  std::string exact_file;
  std::string exact_params = "40,20,10";
  HqOption exact_hq;
  std::uint64_t exact_seed = 0;
  bool exact_bnb = false;
  int exact_max_n = kDefaultExactNodeLimit;
  exact->add_option("graph", exact_file, "Graph file")->required();
  add_shared_flags(exact, exact_params, exact_hq, exact_seed);
  exact->add_flag("--bnb", exact_bnb, "Use the branch-and-bound search");
  exact->add_option("--max-n", exact_max_n,
                    "Node-count guard for the exhaustive search")
      ->capture_default_str();

  // --- bench -------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "Run a benchmark sweep");
  std::string bench_config = "default";
  std::string bench_output;
  std::string bench_plot_dir;
  bench->add_option("--config", bench_config,
                    "Sweep configuration file, or 'default'")
      ->capture_default_str();
  bench->add_option("-o,--output", bench_output,
                    "CSV output path (overrides the config's output)");
  bench->add_option("--plot-dir", bench_plot_dir,
                    "Also write plot-ready series under this directory");

  // --- report ------------------------------------------------------------
  auto* report = app.add_subcommand("report", "Summarize a sweep CSV");
  std::string report_file;
  std::string report_plot_dir;
  bool report_cells = false;
  report->add_option("csv", report_file, "Sweep CSV file")->required();
  report->add_option("--plot-dir", report_plot_dir,
                     "Write plot-ready series under this directory");
  report->add_flag("--cells", report_cells, "Also print per-cell medians");

  // --- validate ----------------------------------------------------------
  auto* validate = app.add_subcommand("validate", "Check a graph file");
  std::string validate_file;
  validate->add_option("graph", validate_file, "Graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << '\n';
    return 2;
  }

  if (gen->parsed()) {
    const GraphFormat format =
        gen_format == "canonical" ? GraphFormat::canonical : GraphFormat::edge_list;
    const std::string ext = gen_format == "canonical" ? ".json" : ".txt";
    if (gen_list) {
      std::cout << "name nodes edges total_hosting density\n";
      for (const InstanceSpec& s : preset_specs()) {
        const SbaGraph g = generate_instance(s);
        std::cout << s.name << ' ' << s.nodes << ' ' << s.edges << ' '
                  << fmt(s.total_hosting) << ' ' << fmt(density_percent(g))
                  << '\n';
      }
      return 0;
    }
    if (gen_preset == "all") {
      if (gen_output.empty()) throw InvalidInput("--preset all needs -o <dir>");
      std::filesystem::create_directories(gen_output);
      for (InstanceSpec s : preset_specs()) {
        if (gen_seed) s.seed = *gen_seed;
        const auto path = std::filesystem::path(gen_output) / (s.name + ext);
        write_graph(generate_instance(s), path, format);
        std::cout << path.string() << '\n';
      }
      return 0;
    }
    InstanceSpec spec;
    if (!gen_preset.empty()) {
      spec = preset(gen_preset);
    } else {
      if (gen_spec.nodes == 0 && gen_spec.edges == 0) {
        throw InvalidInput("gen needs --preset or --nodes/--edges/--total-hosting");
      }
      spec = gen_spec;
    }
    if (gen_seed) spec.seed = *gen_seed;
    if (gen_output.empty()) throw InvalidInput("gen needs -o <file>");
    write_graph(generate_instance(spec), gen_output, format);
    std::cout << gen_output << '\n';
    return 0;
  }

  if (solve->parsed()) {
    const SbaGraph graph = read_graph(solve_file);
    CostParams params = parse_params(solve_params);
    params.hq = solve_hq.resolve(graph);
    const ConstraintMode mode =
        solve_penalty ? ConstraintMode::penalty : ConstraintMode::repair;
    SolveResult result;
    if (solve_solver == "bpso") {
      bpso_cfg.seed = solve_seed;
      bpso_cfg.constraint = mode;
      bpso_cfg.penalty_factor = solve_penalty_factor;
      result = bpso_solve(graph, params, bpso_cfg);
    } else if (solve_solver == "ga") {
      ga_cfg.seed = solve_seed;
      ga_cfg.constraint = mode;
      ga_cfg.mutation_rate = ga_mutation;
      ga_cfg.penalty_factor = solve_penalty_factor;
      result = ga_solve(graph, params, ga_cfg);
    } else {
      result = greedy_solve(graph, params);
    }
    print_result(graph, params, result);
    return 0;
  }

  if (exact->parsed()) {
    const SbaGraph graph = read_graph(exact_file);
    CostParams params = parse_params(exact_params);
    params.hq = exact_hq.resolve(graph);
    const SolveResult result = exact_bnb
                                   ? exact_solve_bnb(graph, params, exact_max_n)
                                   : exact_solve(graph, params, exact_max_n);
    print_result(graph, params, result);
    return 0;
  }

  if (bench->parsed()) {
    SweepConfig cfg = bench_config == "default" ? default_sweep_config()
                                                : load_sweep_config(bench_config);
    if (!bench_output.empty()) cfg.output = bench_output;
    if (cfg.output.empty()) cfg.output = "bench.csv";
    const std::vector<BenchmarkRow> rows = run_sweep(cfg);
    std::cout << "wrote " << rows.size() << " rows to " << cfg.output.string()
              << '\n';
    if (!bench_plot_dir.empty()) {
      emit_plot_data(summarize(rows), bench_plot_dir);
      std::cout << "wrote plot data to " << bench_plot_dir << '\n';
    }
    return 0;
  }

  if (report->parsed()) {
    const std::vector<BenchmarkRow> rows = parse_csv(report_file);
    const Summary summary = summarize(rows);
    if (report_cells) {
      std::cout << "instance hq_fraction solver runs total_median "
                   "total_min total_max wall_median gap_median\n";
      for (const CellSummary& cs : summary.cells) {
        std::cout << cs.instance << ' ' << fmt(cs.hq_fraction) << ' '
                  << cs.solver << ' ' << cs.runs << ' ' << fmt(cs.total_median)
                  << ' ' << fmt(cs.total_min) << ' ' << fmt(cs.total_max) << ' '
                  << fmt(cs.wall_time_median) << ' ' << fmt(cs.gap_median)
                  << '\n';
      }
    }
    print_summary(summary, std::cout);
    if (!report_plot_dir.empty()) {
      emit_plot_data(summary, report_plot_dir);
      std::cout << "wrote plot data to " << report_plot_dir << '\n';
    }
    return 0;
  }

  if (validate->parsed()) {
    const SbaGraph graph = read_graph(validate_file);
    std::cout << "ok: " << graph.node_count() << " nodes, "
              << graph.edge_count() << " edges, total hosting "
              << fmt(total_hosting(graph));
    if (graph.node_count() >= 2) {
      std::cout << ", density " << fmt(density_percent(graph)) << "%";
    }
    std::cout << '\n';
    return 0;
  }

  return 2;  // unreachable: require_subcommand
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
