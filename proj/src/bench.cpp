#include "sbaplace/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sbaplace/exact.hpp"
#include "text_util.hpp"

namespace sbaplace {

namespace {

using detail::double_to_string;
using detail::parse_double;
using detail::parse_int;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

SweepConfig default_sweep_config() {
  SweepConfig cfg;
  for (const InstanceSpec& s : preset_specs()) cfg.presets.push_back(s.name);
  for (int i = 1; i <= 9; ++i) cfg.hq_fractions.push_back(i / 10.0);
  cfg.solvers.push_back({.kind = "exact", .label = "exact"});
  cfg.solvers.push_back({.kind = "bpso", .label = "bpso"});
  cfg.solvers.push_back({.kind = "ga", .label = "ga"});
  cfg.solvers.push_back({.kind = "greedy", .label = "greedy"});
  return cfg;
}

namespace {

void require_keys(const nlohmann::json& obj, const std::string& where,
                  std::initializer_list<const char*> known) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return key == k;
        }) == known.end()) {
      throw ParseError(where + ": unknown key '" + key + "'");
    }
  }
}

BpsoConfig bpso_from_json(const nlohmann::json& j, const std::string& where) {
  require_keys(j, where,
               {"swarm_size", "max_iters", "w_start", "w_end", "c1", "c2",
                "v_max", "stagnation_limit", "seed", "constraint",
                "penalty_factor"});
  BpsoConfig cfg;
  cfg.swarm_size = j.value("swarm_size", cfg.swarm_size);
  cfg.max_iters = j.value("max_iters", cfg.max_iters);
  cfg.w_start = j.value("w_start", cfg.w_start);
  cfg.w_end = j.value("w_end", cfg.w_end);
  cfg.c1 = j.value("c1", cfg.c1);
  cfg.c2 = j.value("c2", cfg.c2);
  cfg.v_max = j.value("v_max", cfg.v_max);
  cfg.stagnation_limit = j.value("stagnation_limit", cfg.stagnation_limit);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("penalty_factor")) {
    cfg.penalty_factor = j["penalty_factor"].get<double>();
  }
  if (j.contains("constraint")) {
    const std::string mode = j["constraint"].get<std::string>();
    if (mode == "repair") {
      cfg.constraint = ConstraintMode::repair;
    } else if (mode == "penalty") {
      cfg.constraint = ConstraintMode::penalty;
    } else {
      throw ParseError(where + ": constraint must be 'repair' or 'penalty'");
    }
  }
  return cfg;
}

GaConfig ga_from_json(const nlohmann::json& j, const std::string& where) {
  require_keys(j, where,
               {"population", "generations", "crossover_rate", "mutation_rate",
                "tournament_size", "elitism", "seed", "constraint",
                "penalty_factor"});
  GaConfig cfg;
  cfg.population = j.value("population", cfg.population);
  cfg.generations = j.value("generations", cfg.generations);
  cfg.crossover_rate = j.value("crossover_rate", cfg.crossover_rate);
  if (j.contains("mutation_rate")) {
    cfg.mutation_rate = j["mutation_rate"].get<double>();
  }
  cfg.tournament_size = j.value("tournament_size", cfg.tournament_size);
  cfg.elitism = j.value("elitism", cfg.elitism);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("penalty_factor")) {
    cfg.penalty_factor = j["penalty_factor"].get<double>();
  }
  if (j.contains("constraint")) {
    const std::string mode = j["constraint"].get<std::string>();
    if (mode == "repair") {
      cfg.constraint = ConstraintMode::repair;
    } else if (mode == "penalty") {
      cfg.constraint = ConstraintMode::penalty;
    } else {
      throw ParseError(where + ": constraint must be 'repair' or 'penalty'");
    }
  }
  return cfg;
}

InstanceSpec spec_from_json(const nlohmann::json& j, const std::string& where) {
  require_keys(j, where,
               {"name", "nodes", "edges", "total_hosting", "rate_min",
                "rate_max", "seed"});
  InstanceSpec spec;
  if (!j.contains("name") || !j.contains("nodes") || !j.contains("edges") ||
      !j.contains("total_hosting")) {
    throw ParseError(where +
                     ": generated instance needs name, nodes, edges, "
                     "total_hosting");
  }
  spec.name = j["name"].get<std::string>();
  spec.nodes = j["nodes"].get<int>();
  spec.edges = j["edges"].get<int>();
  spec.total_hosting = j["total_hosting"].get<double>();
  spec.rate_min = j.value("rate_min", spec.rate_min);
  spec.rate_max = j.value("rate_max", spec.rate_max);
  spec.seed = j.value("seed", spec.seed);
  return spec;
}

}  // namespace

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  const std::string origin = path.string();
  require_keys(doc, origin,
               {"params", "hq_fractions", "repetitions", "seed_base", "output",
                "instances", "solvers"});

  SweepConfig cfg;
  if (doc.contains("params")) {
    const auto& p = doc["params"];
    require_keys(p, origin + ": params", {"alpha", "beta1", "beta2"});
    cfg.alpha = p.value("alpha", cfg.alpha);
    cfg.beta1 = p.value("beta1", cfg.beta1);
    cfg.beta2 = p.value("beta2", cfg.beta2);
  }
  if (doc.contains("hq_fractions")) {
    cfg.hq_fractions = doc["hq_fractions"].get<std::vector<double>>();
  } else {
    for (int i = 1; i <= 9; ++i) cfg.hq_fractions.push_back(i / 10.0);
  }
  for (double f : cfg.hq_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw ParseError(origin + ": hq_fractions entries must lie in [0, 1]");
    }
  }
  cfg.repetitions = doc.value("repetitions", cfg.repetitions);
  if (cfg.repetitions < 1) throw ParseError(origin + ": repetitions must be >= 1");
  cfg.seed_base = doc.value("seed_base", cfg.seed_base);
  if (doc.contains("output")) {
    cfg.output = doc["output"].get<std::string>();
  }

  if (doc.contains("instances")) {
    const auto& inst = doc["instances"];
    require_keys(inst, origin + ": instances", {"presets", "files", "generated"});
    if (inst.contains("presets")) {
      cfg.presets = inst["presets"].get<std::vector<std::string>>();
    }
    if (inst.contains("files")) {
      for (const auto& f : inst["files"]) {
        cfg.files.emplace_back(f.get<std::string>());
      }
    }
    if (inst.contains("generated")) {
      for (std::size_t i = 0; i < inst["generated"].size(); ++i) {
        cfg.generated.push_back(spec_from_json(
            inst["generated"][i],
            origin + ": instances.generated[" + std::to_string(i) + "]"));
      }
    }
  } else {
    for (const InstanceSpec& s : preset_specs()) cfg.presets.push_back(s.name);
  }

  if (doc.contains("solvers")) {
    for (std::size_t i = 0; i < doc["solvers"].size(); ++i) {
      const auto& js = doc["solvers"][i];
      const std::string where = origin + ": solvers[" + std::to_string(i) + "]";
      require_keys(js, where, {"name", "label", "config"});
      if (!js.contains("name")) throw ParseError(where + ": missing 'name'");
      SolverSpec solver;
      solver.kind = js["name"].get<std::string>();
      solver.label = js.value("label", solver.kind);
      const nlohmann::json config =
          js.contains("config") ? js["config"] : nlohmann::json::object();
      if (solver.kind == "bpso") {
        solver.bpso = bpso_from_json(config, where + ".config");
      } else if (solver.kind == "ga") {
        solver.ga = ga_from_json(config, where + ".config");
      } else if (solver.kind == "exact" || solver.kind == "exact-bnb" ||
                 solver.kind == "greedy") {
        if (!config.empty()) {
          throw ParseError(where + ": solver '" + solver.kind +
                           "' takes no config");
        }
      } else {
        throw ParseError(where + ": unknown solver '" + solver.kind + "'");
      }
      cfg.solvers.push_back(std::move(solver));
    }
  } else {
    cfg.solvers = default_sweep_config().solvers;
  }
  return cfg;
}

namespace {

struct NamedInstance {
  std::string name;
  SbaGraph graph;
  bool loaded = false;
  std::string load_error;
};

std::vector<NamedInstance> collect_instances(const SweepConfig& config) {
  std::vector<NamedInstance> out;
  for (const std::string& name : config.presets) {
    NamedInstance ni;
    ni.name = name;
    try {
      ni.graph = generate_instance(preset(name));
      ni.loaded = true;
    } catch (const std::exception& e) {
      ni.load_error = e.what();
    }
    out.push_back(std::move(ni));
  }
  for (const std::filesystem::path& path : config.files) {
    NamedInstance ni;
    ni.name = path.stem().string();
    try {
      ni.graph = read_graph(path);
      ni.loaded = true;
    } catch (const std::exception& e) {
      ni.load_error = e.what();
    }
    out.push_back(std::move(ni));
  }
  for (const InstanceSpec& spec : config.generated) {
    NamedInstance ni;
    ni.name = spec.name;
    try {
      ni.graph = generate_instance(spec);
      ni.loaded = true;
    } catch (const std::exception& e) {
      ni.load_error = e.what();
    }
    out.push_back(std::move(ni));
  }
  return out;
}

SolveResult dispatch_solver(const SolverSpec& solver, const SbaGraph& graph,
                            const CostParams& params, std::uint64_t seed) {
  if (solver.kind == "exact") return exact_solve(graph, params);
  if (solver.kind == "exact-bnb") return exact_solve_bnb(graph, params);
  if (solver.kind == "greedy") return greedy_solve(graph, params);
  if (solver.kind == "bpso") {
    BpsoConfig cfg = solver.bpso;
    cfg.seed = seed;
    return bpso_solve(graph, params, cfg);
  }
  if (solver.kind == "ga") {
    GaConfig cfg = solver.ga;
    cfg.seed = seed;
    return ga_solve(graph, params, cfg);
  }
  throw InvalidInput("unknown solver kind '" + solver.kind + "'");
}

std::string csv_escape(std::string field) {
  for (char& c : field) {
    if (c == '\n' || c == '\r') c = ' ';  // keep the file line-parseable
  }
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const char* kCsvHeader =
    "instance,n,edges,density,hq_fraction,hq_absolute,solver,seed,total,"
    "hosting,public_comm,hybrid_comm,gap_to_optimal,wall_time,evaluations,"
    "feasible,status,error";

std::string csv_number(double value) {
  if (std::isnan(value)) return "";
  return double_to_string(value);
}

void write_row(std::ostream& out, const BenchmarkRow& row) {
  out << csv_escape(row.instance) << ',' << row.n << ',' << row.edges << ','
      << csv_number(row.density) << ',' << csv_number(row.hq_fraction) << ','
      << csv_number(row.hq_absolute) << ',' << csv_escape(row.solver) << ','
      << row.seed << ',' << csv_number(row.total) << ','
      << csv_number(row.hosting) << ',' << csv_number(row.public_comm) << ','
      << csv_number(row.hybrid_comm) << ',' << csv_number(row.gap_to_optimal)
      << ',' << csv_number(row.wall_time) << ',' << row.evaluations << ','
      << (row.feasible ? "true" : "false") << ',' << csv_escape(row.status)
      << ',' << csv_escape(row.error) << '\n';
}

}  // namespace

std::vector<BenchmarkRow> run_sweep(const SweepConfig& config) {
  for (double f : config.hq_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw InvalidInput("hq_fractions entries must lie in [0, 1]");
    }
  }
  if (config.repetitions < 1) throw InvalidInput("repetitions must be >= 1");

  std::ofstream file;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) {
      throw Error("cannot open '" + config.output.string() + "' for writing");
    }
    file << kCsvHeader << '\n' << std::flush;
  }

  std::vector<BenchmarkRow> rows;
  const std::vector<NamedInstance> instances = collect_instances(config);

  for (const NamedInstance& inst : instances) {
    BenchmarkRow base;
    base.instance = inst.name;
    base.density = kNan;
    if (inst.loaded) {
      base.n = inst.graph.node_count();
      base.edges = inst.graph.edge_count();
      base.density = base.n >= 2 ? density_percent(inst.graph) : kNan;
    }

    for (double fraction : config.hq_fractions) {
      double optimal = kNan;
      for (const SolverSpec& solver : config.solvers) {
        const int reps = solver.stochastic() ? config.repetitions : 1;
        for (int rep = 0; rep < reps; ++rep) {
          BenchmarkRow row = base;
          row.hq_fraction = fraction;
          row.solver = solver.label;
          row.seed = solver.stochastic() ? config.seed_base + rep : 0;
          row.gap_to_optimal = kNan;
          row.total = row.hosting = row.public_comm = row.hybrid_comm = kNan;
          row.wall_time = kNan;
          if (!inst.loaded) {
            row.status = "failed";
            row.error = inst.load_error;
            row.hq_absolute = kNan;
          } else {
            CostParams params{config.alpha, config.beta1, config.beta2, 0.0};
            params.hq = hq_from_fraction(inst.graph, fraction);
            row.hq_absolute = params.hq;
            try {
              const SolveResult res =
                  dispatch_solver(solver, inst.graph, params, row.seed);
              row.total = res.breakdown.total;
              row.hosting = res.breakdown.hosting;
              row.public_comm = res.breakdown.public_comm;
              row.hybrid_comm = res.breakdown.hybrid_comm;
              row.wall_time = res.wall_time;
              row.evaluations = res.evaluations;
              row.feasible = res.feasible;
              if (solver.kind == "exact" || solver.kind == "exact-bnb") {
                if (std::isnan(optimal)) optimal = res.breakdown.total;
              }
              if (!std::isnan(optimal)) {
                row.gap_to_optimal =
                    optimal > 0.0
                        ? row.total / optimal - 1.0
                        : (row.total > 1e-9
                               ? std::numeric_limits<double>::infinity()
                               : 0.0);
              }
            } catch (const std::exception& e) {
              row.status = "failed";
              row.error = e.what();
            }
          }
          if (file.is_open()) {
            write_row(file, row);
            file << std::flush;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

namespace {

double median(std::vector<double> values) {
  if (values.empty()) return kNan;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

}  // namespace

Summary summarize(const std::vector<BenchmarkRow>& rows) {
  if (rows.empty()) throw InvalidInput("summarize: no rows");

  // Cell key: (instance, hq_fraction, solver), in first-seen order.
  struct CellData {
    std::vector<double> totals;
    std::vector<double> walls;
    std::vector<double> gaps;
  };
  std::vector<std::pair<std::tuple<std::string, double, std::string>, CellData>>
      cells;
  auto cell_for = [&](const BenchmarkRow& row) -> CellData& {
    const auto key = std::make_tuple(row.instance, row.hq_fraction, row.solver);
    for (auto& [k, data] : cells) {
      if (k == key) return data;
    }
    cells.emplace_back(key, CellData{});
    return cells.back().second;
  };

  for (const BenchmarkRow& row : rows) {
    if (row.status != "ok") continue;
    CellData& cell = cell_for(row);
    cell.totals.push_back(row.total);
    cell.walls.push_back(row.wall_time);
    if (!std::isnan(row.gap_to_optimal)) cell.gaps.push_back(row.gap_to_optimal);
  }
  if (cells.empty()) throw InvalidInput("summarize: no successful rows");

  Summary summary;
  for (const auto& [key, data] : cells) {
    CellSummary cs;
    cs.instance = std::get<0>(key);
    cs.hq_fraction = std::get<1>(key);
    cs.solver = std::get<2>(key);
    cs.runs = static_cast<int>(data.totals.size());
    cs.total_median = median(data.totals);
    cs.total_min = *std::min_element(data.totals.begin(), data.totals.end());
    cs.total_max = *std::max_element(data.totals.begin(), data.totals.end());
    cs.wall_time_median = median(data.walls);
    cs.gap_median = median(data.gaps);
    summary.cells.push_back(std::move(cs));
  }

  // Exact wall time per (instance, hq) for the time-ratio aggregate.
  std::map<std::pair<std::string, double>, double> exact_wall;
  for (const CellSummary& cs : summary.cells) {
    if (cs.solver == "exact") {
      exact_wall[{cs.instance, cs.hq_fraction}] = cs.wall_time_median;
    }
  }

  std::vector<std::string> solver_names;
  for (const CellSummary& cs : summary.cells) {
    if (std::find(solver_names.begin(), solver_names.end(), cs.solver) ==
        solver_names.end()) {
      solver_names.push_back(cs.solver);
    }
  }
  for (const std::string& name : solver_names) {
    SolverAggregate agg;
    agg.solver = name;
    double gap_sum = 0.0;
    int gap_count = 0;
    double ratio_sum = 0.0;
    int ratio_count = 0;
    for (const CellSummary& cs : summary.cells) {
      if (cs.solver != name) continue;
      ++agg.cells;
      if (!std::isnan(cs.gap_median)) {
        gap_sum += cs.gap_median;
        ++gap_count;
      }
      const auto it = exact_wall.find({cs.instance, cs.hq_fraction});
      if (it != exact_wall.end() && it->second > 0.0) {
        ratio_sum += cs.wall_time_median / it->second;
        ++ratio_count;
      }
    }
    agg.mean_gap = gap_count > 0 ? gap_sum / gap_count : kNan;
    agg.time_ratio_vs_exact = ratio_count > 0 ? ratio_sum / ratio_count : kNan;
    summary.solvers.push_back(std::move(agg));
  }
  return summary;
}

void emit_csv(const std::vector<BenchmarkRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const BenchmarkRow& row : rows) write_row(out, row);
}

void emit_csv(const std::vector<BenchmarkRow>& rows,
              const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  emit_csv(rows, out);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line,
                                        const std::string& where) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError(where + ": unterminated quote");
  fields.push_back(std::move(field));
  return fields;
}

double field_double(const std::string& text, const std::string& what) {
  if (text.empty()) return kNan;
  if (text == "inf") return std::numeric_limits<double>::infinity();
  return parse_double(text, what);
}

}  // namespace

std::vector<BenchmarkRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ParseError("csv: unexpected header '" + line + "'");

  std::vector<BenchmarkRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "csv: line " + std::to_string(line_no);
    const std::vector<std::string> f = split_csv_line(line, where);
    if (f.size() != 18) {
      throw ParseError(where + ": expected 18 fields, got " +
                       std::to_string(f.size()));
    }
    BenchmarkRow row;
    row.instance = f[0];
    row.n = static_cast<int>(parse_int(f[1], where + " n"));
    row.edges = static_cast<int>(parse_int(f[2], where + " edges"));
    row.density = field_double(f[3], where + " density");
    row.hq_fraction = field_double(f[4], where + " hq_fraction");
    row.hq_absolute = field_double(f[5], where + " hq_absolute");
    row.solver = f[6];
    row.seed = static_cast<std::uint64_t>(parse_int(f[7], where + " seed"));
    row.total = field_double(f[8], where + " total");
    row.hosting = field_double(f[9], where + " hosting");
    row.public_comm = field_double(f[10], where + " public_comm");
    row.hybrid_comm = field_double(f[11], where + " hybrid_comm");
    row.gap_to_optimal = field_double(f[12], where + " gap_to_optimal");
    row.wall_time = field_double(f[13], where + " wall_time");
    row.evaluations =
        static_cast<std::uint64_t>(parse_int(f[14], where + " evaluations"));
    row.feasible = f[15] == "true";
    row.status = f[16];
    row.error = f[17];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BenchmarkRow> parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return parse_csv(in);
}

void emit_plot_data(const Summary& summary, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  std::vector<std::string> instances;
  for (const CellSummary& cs : summary.cells) {
    if (std::find(instances.begin(), instances.end(), cs.instance) ==
        instances.end()) {
      instances.push_back(cs.instance);
    }
  }

  for (const std::string& instance : instances) {
    for (const bool cost : {true, false}) {
      const std::filesystem::path path =
          dir / (instance + (cost ? "_cost.dat" : "_time.dat"));
      std::ofstream out(path);
      if (!out) throw Error("cannot open '" + path.string() + "' for writing");
      out << "# " << instance << ' ' << (cost ? "median total" : "median wall time")
          << " vs hq fraction; one block per solver\n";

      std::vector<std::string> solvers;
      for (const CellSummary& cs : summary.cells) {
        if (cs.instance == instance &&
            std::find(solvers.begin(), solvers.end(), cs.solver) ==
                solvers.end()) {
          solvers.push_back(cs.solver);
        }
      }
      bool first = true;
      for (const std::string& solver : solvers) {
        if (!first) out << '\n';
        first = false;
        out << "# solver: " << solver << '\n';
        std::vector<std::pair<double, double>> points;
        for (const CellSummary& cs : summary.cells) {
          if (cs.instance == instance && cs.solver == solver) {
            points.emplace_back(cs.hq_fraction,
                                cost ? cs.total_median : cs.wall_time_median);
          }
        }
        std::sort(points.begin(), points.end());
        for (const auto& [x, y] : points) {
          out << double_to_string(x) << ' ' << double_to_string(y) << '\n';
        }
      }
      if (!out) throw Error("failed writing '" + path.string() + "'");
    }
  }
}

void print_summary(const Summary& summary, std::ostream& out) {
  out << "solver            cells   mean_gap   time_vs_exact\n";
  for (const SolverAggregate& agg : summary.solvers) {
    out << std::left << std::setw(16) << agg.solver << ' ' << std::right
        << std::setw(6) << agg.cells << ' ';
    if (std::isnan(agg.mean_gap)) {
      out << std::setw(10) << "-";
    } else {
      out << std::setw(10) << std::fixed << std::setprecision(4) << agg.mean_gap;
    }
    out << ' ';
    if (std::isnan(agg.time_ratio_vs_exact)) {
      out << std::setw(15) << "-";
    } else {
      out << std::setw(15) << std::fixed << std::setprecision(4)
          << agg.time_ratio_vs_exact;
    }
    out << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace sbaplace
