#pragma once

#include <cstdint>
#include <string>

#include "sbaplace/model.hpp"

namespace sbaplace {

/// Outcome of one solver run. `breakdown` and `feasible` are always the
/// evaluate_cost / is_feasible values of `placement` for the inputs that
/// produced the result.
struct SolveResult {
  Placement placement;
  CostBreakdown breakdown;
  bool feasible = false;
  std::uint64_t evaluations = 0;  // full cost evaluations performed
  std::uint64_t iterations = 0;   // solver iterations (0 for exact)
  double wall_time = 0.0;         // seconds, solve call only
  std::string solver_name;
};

inline constexpr int kDefaultExactNodeLimit = 30;

/// Exhaustive enumeration over all 2^n placements. Returns a feasible
/// placement of minimum total cost; among equal-cost optima the
/// lexicographically smallest bit vector wins. If no feasible placement
/// exists (hq > total hosting) returns the all-public placement with
/// feasible=false. Throws InstanceTooLarge above `max_nodes`.
SolveResult exact_solve(const SbaGraph& graph, const CostParams& params,
                        int max_nodes = kDefaultExactNodeLimit);

/// Depth-first branch and bound over the same space. Identical result
/// contract as exact_solve (same optimum, same lexicographic tie-break);
/// prunes subtrees whose decided-portion cost already exceeds the incumbent
/// or that cannot reach the hq threshold any more.
SolveResult exact_solve_bnb(const SbaGraph& graph, const CostParams& params,
                            int max_nodes = kDefaultExactNodeLimit);

}  // namespace sbaplace
