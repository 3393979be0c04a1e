#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "sbaplace/metaheuristics.hpp"
#include "solver_detail.hpp"

namespace sbaplace {

namespace {

using Clock = std::chrono::steady_clock;

void check_config(const BpsoConfig& cfg) {
  if (cfg.swarm_size < 2) throw InvalidInput("swarm_size must be >= 2");
  if (cfg.max_iters < 1) throw InvalidInput("max_iters must be >= 1");
  if (!(cfg.v_max > 0.0)) throw InvalidInput("v_max must be > 0");
  if (!(cfg.w_end >= 0.0 && cfg.w_end <= cfg.w_start)) {
    throw InvalidInput("inertia must satisfy 0 <= w_end <= w_start");
  }
  if (!(cfg.c1 >= 0.0) || !(cfg.c2 >= 0.0)) {
    throw InvalidInput("acceleration constants must be >= 0");
  }
}

}  // namespace

double sigmoid(double v) {
  double s;
  if (v >= 0.0) {
    s = 1.0 / (1.0 + std::exp(-v));
  } else {
    const double e = std::exp(v);
    s = e / (1.0 + e);
  }
  // Keep strictly inside (0,1) so saturated velocities never pin a bit.
  constexpr double lo = std::numeric_limits<double>::min();
  constexpr double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
  return std::clamp(s, lo, hi);
}

std::vector<double> velocity_update(const Particle& particle,
                                    const Placement& gbest, double w,
                                    const BpsoConfig& cfg,
                                    std::span<const double> r1,
                                    std::span<const double> r2) {
  const std::size_t n = particle.position.size();
  if (particle.velocity.size() != n || particle.pbest_position.size() != n ||
      gbest.size() != n || r1.size() != n || r2.size() != n) {
    throw InvalidInput("velocity update: dimension mismatch");
  }
  std::vector<double> out(n);
  for (std::size_t d = 0; d < n; ++d) {
    const double x = particle.position.bits[d];
    const double v = w * particle.velocity[d] +
                     cfg.c1 * r1[d] * (particle.pbest_position.bits[d] - x) +
                     cfg.c2 * r2[d] * (gbest.bits[d] - x);
    out[d] = std::clamp(v, -cfg.v_max, cfg.v_max);
  }
  return out;
}

std::vector<double> velocity_update(const Particle& particle,
                                    const Placement& gbest, double w,
                                    const BpsoConfig& cfg, Rng& rng) {
  const std::size_t n = particle.position.size();
  std::vector<double> r1(n), r2(n);
  for (double& r : r1) r = rng.unit();
  for (double& r : r2) r = rng.unit();
  return velocity_update(particle, gbest, w, cfg, r1, r2);
}

Placement position_update(std::span<const double> velocity,
                          std::span<const double> r3) {
  if (r3.size() != velocity.size()) {
    throw InvalidInput("position update: dimension mismatch");
  }
  Placement p = Placement::zeros(velocity.size());
  for (std::size_t d = 0; d < velocity.size(); ++d) {
    p.bits[d] = sigmoid(velocity[d]) > r3[d] ? 1 : 0;
  }
  return p;
}

Placement position_update(std::span<const double> velocity, Rng& rng) {
  std::vector<double> r3(velocity.size());
  for (double& r : r3) r = rng.unit();
  return position_update(velocity, r3);
}

Placement repair_placement(const SbaGraph& graph, const Placement& placement,
                           const CostParams& params) {
  validate_params(params);
  if (is_feasible(graph, placement, params)) return placement;
  if (total_hosting(graph) < params.hq) {
    throw InfeasibleInstance("hq " + std::to_string(params.hq) +
                             " exceeds total hosting " +
                             std::to_string(total_hosting(graph)));
  }

  std::vector<int> order(graph.node_count());
  for (int i = 0; i < graph.node_count(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return graph.hosting(a) > graph.hosting(b);  // ties keep lowest id first
  });

  Placement out = placement;
  for (int id : order) {
    if (out.bits[id]) continue;
    out.bits[id] = 1;
    if (is_feasible(graph, out, params)) break;
  }
  return out;
}

SolveResult bpso_solve(const SbaGraph& graph, const CostParams& params,
                       const BpsoConfig& cfg,
                       const IterationCallback& on_iteration) {
  validate_params(params);
  check_config(cfg);
  if (total_hosting(graph) < params.hq) {
    throw InfeasibleInstance("hq " + std::to_string(params.hq) +
                             " exceeds total hosting " +
                             std::to_string(total_hosting(graph)));
  }

  const auto start = Clock::now();
  const int n = graph.node_count();
  Rng rng(cfg.seed);
  detail::ConstraintHandler handler(graph, params, cfg.constraint,
                                    cfg.penalty_factor);

  // Draw order (fixed for reproducibility): at init, per particle in index
  // order, position bits then velocity components; per iteration, per
  // particle in index order, the r1 vector, then r2, then r3.
  std::vector<Particle> swarm(cfg.swarm_size);
  for (Particle& p : swarm) {
    p.position = Placement::zeros(n);
    for (int d = 0; d < n; ++d) p.position.bits[d] = rng.unit() < 0.5 ? 1 : 0;
    p.velocity.resize(n);
    for (double& v : p.velocity) v = rng.uniform(-cfg.v_max, cfg.v_max);
    p.pbest_cost = handler.process(p.position);
    p.pbest_position = p.position;
  }

  Placement gbest;
  double gbest_cost = std::numeric_limits<double>::infinity();
  for (const Particle& p : swarm) {
    if (p.pbest_cost < gbest_cost) {
      gbest_cost = p.pbest_cost;
      gbest = p.pbest_position;
    }
  }

  int iterations = 0;
  int stagnation = 0;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const double w =
        cfg.max_iters > 1
            ? cfg.w_start + (cfg.w_end - cfg.w_start) * iter / (cfg.max_iters - 1)
            : cfg.w_start;

    // All particles move against the previous iteration's bests, then the
    // bests are refreshed in one pass (synchronous update).
    for (Particle& p : swarm) {
      p.velocity = velocity_update(p, gbest, w, cfg, rng);
      p.position = position_update(p.velocity, rng);
    }
    for (Particle& p : swarm) {
      const double cost = handler.process(p.position);
      if (cost < p.pbest_cost) {
        p.pbest_cost = cost;
        p.pbest_position = p.position;
      }
    }
    bool improved = false;
    for (const Particle& p : swarm) {
      if (p.pbest_cost < gbest_cost) {
        gbest_cost = p.pbest_cost;
        gbest = p.pbest_position;
        improved = true;
      }
    }

    iterations = iter + 1;
    if (on_iteration) on_iteration(iter, gbest_cost);
    stagnation = improved ? 0 : stagnation + 1;
    if (cfg.stagnation_limit > 0 && stagnation >= cfg.stagnation_limit) break;
  }

  auto [placement, breakdown] = handler.finish(gbest);
  SolveResult r;
  r.placement = std::move(placement);
  r.breakdown = breakdown;
  r.feasible = true;
  r.evaluations = handler.evaluations();
  r.iterations = static_cast<std::uint64_t>(iterations);
  r.solver_name = "bpso";
  r.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace sbaplace
