#include <chrono>
#include <limits>

#include "sbaplace/metaheuristics.hpp"

namespace sbaplace {

SolveResult greedy_solve(const SbaGraph& graph, const CostParams& params) {
  validate_params(params);
  if (total_hosting(graph) < params.hq) {
    throw InfeasibleInstance("hq " + std::to_string(params.hq) +
                             " exceeds total hosting " +
                             std::to_string(total_hosting(graph)));
  }

  const auto start = std::chrono::steady_clock::now();
  const int n = graph.node_count();
  Placement placement = Placement::zeros(n);
  CostBreakdown current;  // all-private costs nothing
  std::uint64_t evals = 0;
  std::uint64_t flips = 0;

  while (!is_feasible(graph, placement, params)) {
    int best_node = -1;
    double best_delta = std::numeric_limits<double>::infinity();
    CostBreakdown best_breakdown;
    for (int i = 0; i < n; ++i) {
      if (placement.bits[i]) continue;
      placement.bits[i] = 1;
      const CostBreakdown cb = evaluate_cost(graph, placement, params);
      placement.bits[i] = 0;
      ++evals;
      const double delta = cb.total - current.total;
      if (delta < best_delta) {  // strict: ties go to the lowest id
        best_delta = delta;
        best_node = i;
        best_breakdown = cb;
      }
    }
    placement.bits[best_node] = 1;
    current = best_breakdown;
    ++flips;
  }

  SolveResult r;
  r.placement = std::move(placement);
  r.breakdown = evaluate_cost(graph, r.placement, params);
  r.feasible = true;
  r.evaluations = evals;
  r.iterations = flips;
  r.solver_name = "greedy";
  r.wall_time = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return r;
}

}  // namespace sbaplace
