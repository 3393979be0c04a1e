#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sbaplace/exact.hpp"
#include "sbaplace/model.hpp"
#include "sbaplace/rng.hpp"

namespace sbaplace {

/// How infeasible candidates are handled: flipped to feasibility (repair)
/// or charged a linear shortfall penalty on top of the true cost (penalty).
enum class ConstraintMode { repair, penalty };

struct BpsoConfig {
  int swarm_size = 30;
  int max_iters = 200;
  double w_start = 0.9;  // inertia at iteration 0
  double w_end = 0.4;    // inertia at the final iteration (linear decay)
  double c1 = 2.0;       // cognitive acceleration
  double c2 = 2.0;       // social acceleration
  double v_max = 4.0;    // velocity clamp magnitude
  int stagnation_limit = 50;  // stop after this many iterations without gbest improvement
  std::uint64_t seed = 0;
  ConstraintMode constraint = ConstraintMode::repair;
  std::optional<double> penalty_factor;  // nullopt = 10 * alpha
};

struct GaConfig {
  int population = 100;
  int generations = 200;
  double crossover_rate = 0.9;
  std::optional<double> mutation_rate;  // per-bit flip probability, nullopt = 1/n
  int tournament_size = 3;
  int elitism = 2;
  std::uint64_t seed = 0;
  ConstraintMode constraint = ConstraintMode::repair;
  std::optional<double> penalty_factor;
};

struct Particle {
  Placement position;
  std::vector<double> velocity;  // component magnitudes clamped to v_max
  Placement pbest_position;
  double pbest_cost = 0.0;  // penalized cost of pbest_position, non-increasing
};

/// Called once per completed iteration with the current best (penalized) cost.
using IterationCallback = std::function<void(int iteration, double gbest_cost)>;

/// 1 / (1 + e^-v): flip probability of a velocity component.
double sigmoid(double v);

/// v' = clamp(w*v + c1*r1*(pbest - x) + c2*r2*(gbest - x), +-v_max)
/// with explicit per-dimension random factors.
std::vector<double> velocity_update(const Particle& particle,
                                    const Placement& gbest, double w,
                                    const BpsoConfig& cfg,
                                    std::span<const double> r1,
                                    std::span<const double> r2);

/// Same, drawing r1 then r2 (each one value per dimension) from rng.
std::vector<double> velocity_update(const Particle& particle,
                                    const Placement& gbest, double w,
                                    const BpsoConfig& cfg, Rng& rng);

/// bit d = 1 iff sigmoid(velocity[d]) > r3[d] (strict).
Placement position_update(std::span<const double> velocity,
                          std::span<const double> r3);

/// Same, drawing r3 (one value per dimension) from rng.
Placement position_update(std::span<const double> velocity, Rng& rng);

/// Feasible placements pass through unchanged. Infeasible ones get private
/// nodes flipped to public in decreasing hosting order (ties: lowest id)
/// until the hq threshold is met. Throws InfeasibleInstance when even the
/// all-public placement falls short.
Placement repair_placement(const SbaGraph& graph, const Placement& placement,
                           const CostParams& params);

/// Binary particle swarm search over placements. Deterministic per seed.
SolveResult bpso_solve(const SbaGraph& graph, const CostParams& params,
                       const BpsoConfig& cfg,
                       const IterationCallback& on_iteration = {});

/// Binary genetic algorithm baseline: tournament selection, uniform
/// crossover, bit-flip mutation, elitism. Deterministic per seed.
SolveResult ga_solve(const SbaGraph& graph, const CostParams& params,
                     const GaConfig& cfg,
                     const IterationCallback& on_iteration = {});

/// Deterministic baseline: start all-private and repeatedly flip the node
/// with the smallest marginal cost increase until feasible. At most n^2
/// cost evaluations.
SolveResult greedy_solve(const SbaGraph& graph, const CostParams& params);

}  // namespace sbaplace
