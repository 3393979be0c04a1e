#include "sbaplace/exact.hpp"

#include <algorithm>
#include <chrono>
#include <utility>
#include <vector>

namespace sbaplace {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_size(const SbaGraph& graph, int max_nodes) {
  if (max_nodes < 0 || max_nodes > 62) {
    throw InvalidInput("exact-solver node limit must lie in [0, 62]");
  }
  if (graph.node_count() > max_nodes) {
    throw InstanceTooLarge("exhaustive solve rejected: " +
                           std::to_string(graph.node_count()) + " nodes > limit " +
                           std::to_string(max_nodes));
  }
}

// Mirrors evaluate_cost's accumulation order exactly so search-time totals
// are bitwise equal to the canonical evaluation of the same bits.
CostBreakdown eval_bits(const SbaGraph& graph,
                        const std::vector<std::uint8_t>& bits,
                        const CostParams& params, double& host_units_out) {
  double host_units = 0.0;
  for (const ServiceNode& node : graph.nodes()) {
    if (bits[node.id]) host_units += node.hosting;
  }
  double public_units = 0.0;
  double hybrid_units = 0.0;
  for (const CommEdge& e : graph.edges()) {
    const bool pa = bits[e.a] != 0;
    const bool pb = bits[e.b] != 0;
    if (pa && pb) {
      public_units += e.rate;
    } else if (pa != pb) {
      hybrid_units += e.rate;
    }
  }
  CostBreakdown out;
  out.hosting = params.alpha * host_units;
  out.public_comm = params.beta2 * public_units;
  out.hybrid_comm = params.beta1 * hybrid_units;
  out.total = out.hosting + out.public_comm + out.hybrid_comm;
  host_units_out = host_units;
  return out;
}

SolveResult infeasible_result(const SbaGraph& graph, const CostParams& params,
                              std::string name) {
  SolveResult r;
  r.placement = Placement::all_public(graph.node_count());
  r.breakdown = evaluate_cost(graph, r.placement, params);
  r.feasible = false;
  r.evaluations = 1;
  r.solver_name = std::move(name);
  return r;
}

}  // namespace

SolveResult exact_solve(const SbaGraph& graph, const CostParams& params,
                        int max_nodes) {
  validate_params(params);
  check_size(graph, max_nodes);
  const auto start = Clock::now();

  if (total_hosting(graph) < params.hq) {
    SolveResult r = infeasible_result(graph, params, "exact");
    r.wall_time = seconds_since(start);
    return r;
  }

  const int n = graph.node_count();
  std::vector<std::uint8_t> bits(n, 0);
  Placement best;
  double best_total = 0.0;
  bool have_best = false;
  std::uint64_t evals = 0;

  // Bit d of the placement is taken from mask bit (n-1-d), so ascending masks
  // enumerate bit vectors in lexicographic order; strict improvement then
  // keeps the lexicographically smallest optimum.
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (int d = 0; d < n; ++d) {
      bits[d] = static_cast<std::uint8_t>((mask >> (n - 1 - d)) & 1u);
    }
    double host_units = 0.0;
    const CostBreakdown cb = eval_bits(graph, bits, params, host_units);
    ++evals;
    if (host_units < params.hq) continue;
    if (!have_best || cb.total < best_total) {
      have_best = true;
      best_total = cb.total;
      best.bits = bits;
    }
  }

  SolveResult r;
  r.placement = std::move(best);
  r.breakdown = evaluate_cost(graph, r.placement, params);
  r.feasible = is_feasible(graph, r.placement, params);
  r.evaluations = evals;
  r.solver_name = "exact";
  r.wall_time = seconds_since(start);
  return r;
}

namespace {

struct BnbSearch {
  const SbaGraph& graph;
  const CostParams& params;
  std::vector<std::vector<std::pair<int, double>>> back_edges;  // to lower ids
  std::vector<double> hosting_after;  // sum of hosting over nodes >= d
  std::vector<std::uint8_t> bits;
  Placement best;
  double best_total = 0.0;
  bool have_best = false;
  std::uint64_t leaf_evals = 0;

  // Guard band for float drift between incremental partial costs and the
  // canonical evaluation; keeps razor-edge ties from being pruned away.
  static constexpr double kEps = 1e-9;

  BnbSearch(const SbaGraph& g, const CostParams& p) : graph(g), params(p) {
    const int n = g.node_count();
    back_edges.resize(n);
    for (const CommEdge& e : g.edges()) {
      const int lo = std::min(e.a, e.b);
      const int hi = std::max(e.a, e.b);
      back_edges[hi].emplace_back(lo, e.rate);
    }
    hosting_after.assign(n + 1, 0.0);
    for (int d = n - 1; d >= 0; --d) {
      hosting_after[d] = hosting_after[d + 1] + g.nodes()[d].hosting;
    }
    bits.assign(n, 0);
  }

  void descend(int depth, double partial_cost, double pub_host) {
    if (pub_host + hosting_after[depth] < params.hq - kEps) return;
    if (have_best && partial_cost > best_total + kEps) return;
    if (depth == graph.node_count()) {
      double host_units = 0.0;
      const CostBreakdown cb = eval_bits(graph, bits, params, host_units);
      ++leaf_evals;
      if (host_units < params.hq) return;
      if (!have_best || cb.total < best_total) {
        have_best = true;
        best_total = cb.total;
        best.bits = bits;
      }
      return;
    }

    // Private branch first: lexicographically smaller prefixes are explored
    // before larger ones, so the first optimum found wins ties.
    bits[depth] = 0;
    double cost0 = partial_cost;
    for (const auto& [nbr, rate] : back_edges[depth]) {
      if (bits[nbr]) cost0 += params.beta1 * rate;
    }
    descend(depth + 1, cost0, pub_host);

    bits[depth] = 1;
    double cost1 = partial_cost + params.alpha * graph.nodes()[depth].hosting;
    for (const auto& [nbr, rate] : back_edges[depth]) {
      cost1 += (bits[nbr] ? params.beta2 : params.beta1) * rate;
    }
    descend(depth + 1, cost1, pub_host + graph.nodes()[depth].hosting);
    bits[depth] = 0;
  }
};

}  // namespace

SolveResult exact_solve_bnb(const SbaGraph& graph, const CostParams& params,
                            int max_nodes) {
  validate_params(params);
  check_size(graph, max_nodes);
  const auto start = Clock::now();

  if (total_hosting(graph) < params.hq) {
    SolveResult r = infeasible_result(graph, params, "exact-bnb");
    r.wall_time = seconds_since(start);
    return r;
  }

  BnbSearch search(graph, params);
  search.descend(0, 0.0, 0.0);

  SolveResult r;
  r.placement = std::move(search.best);
  r.breakdown = evaluate_cost(graph, r.placement, params);
  r.feasible = is_feasible(graph, r.placement, params);
  r.evaluations = search.leaf_evals;
  r.solver_name = "exact-bnb";
  r.wall_time = seconds_since(start);
  return r;
}

}  // namespace sbaplace
