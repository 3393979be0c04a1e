#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "sbaplace/metaheuristics.hpp"
#include "sbaplace/model.hpp"

namespace sbaplace::detail {

/// Shared constraint handling for the stochastic solvers. In repair mode a
/// candidate is made feasible in place before evaluation; in penalty mode it
/// is left alone and ranked by total + factor * hq-shortfall. Tracks the best
/// feasible placement seen (by true total, first seen wins ties).
class ConstraintHandler {
 public:
  ConstraintHandler(const SbaGraph& graph, const CostParams& params,
                    ConstraintMode mode, std::optional<double> penalty_factor)
      : graph_(graph),
        params_(params),
        mode_(mode),
        factor_(penalty_factor.value_or(10.0 * params.alpha)) {}

  /// Evaluates (and in repair mode first repairs) the candidate. Returns the
  /// penalized ranking cost.
  double process(Placement& candidate) {
    if (mode_ == ConstraintMode::repair) {
      candidate = repair_placement(graph_, candidate, params_);
    }
    const CostBreakdown cb = evaluate_cost(graph_, candidate, params_);
    ++evaluations_;
    const double shortfall = params_.hq - public_hosting(graph_, candidate);
    const bool feasible = shortfall <= 0.0;
    if (feasible &&
        (!have_feasible_ || cb.total < best_feasible_breakdown_.total)) {
      have_feasible_ = true;
      best_feasible_ = candidate;
      best_feasible_breakdown_ = cb;
    }
    if (feasible || mode_ == ConstraintMode::repair) return cb.total;
    return cb.total + factor_ * shortfall;
  }

  std::uint64_t evaluations() const { return evaluations_; }

  /// Best feasible placement seen; if penalty mode never saw one, the
  /// repaired fallback. Callers always hand back a feasible result.
  std::pair<Placement, CostBreakdown> finish(const Placement& fallback) {
    if (!have_feasible_) {
      Placement repaired = repair_placement(graph_, fallback, params_);
      return {repaired, evaluate_cost(graph_, repaired, params_)};
    }
    return {std::move(best_feasible_), best_feasible_breakdown_};
  }

 private:
  const SbaGraph& graph_;
  const CostParams& params_;
  ConstraintMode mode_;
  double factor_;
  std::uint64_t evaluations_ = 0;
  bool have_feasible_ = false;
  Placement best_feasible_;
  CostBreakdown best_feasible_breakdown_;
};

}  // namespace sbaplace::detail
