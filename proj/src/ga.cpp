#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <vector>

#include "sbaplace/metaheuristics.hpp"
#include "solver_detail.hpp"

namespace sbaplace {

namespace {

using Clock = std::chrono::steady_clock;

void check_config(const GaConfig& cfg) {
  if (cfg.population < 2) throw InvalidInput("population must be >= 2");
  if (cfg.generations < 1) throw InvalidInput("generations must be >= 1");
  if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0)) {
    throw InvalidInput("crossover_rate must lie in [0, 1]");
  }
  if (cfg.mutation_rate &&
      !(*cfg.mutation_rate >= 0.0 && *cfg.mutation_rate <= 1.0)) {
    throw InvalidInput("mutation_rate must lie in [0, 1]");
  }
  if (cfg.tournament_size < 1) throw InvalidInput("tournament_size must be >= 1");
  if (cfg.elitism < 0 || cfg.elitism >= cfg.population) {
    throw InvalidInput("elitism must lie in [0, population)");
  }
}

struct Individual {
  Placement position;
  double cost = 0.0;  // penalized
};

}  // namespace

SolveResult ga_solve(const SbaGraph& graph, const CostParams& params,
                     const GaConfig& cfg, const IterationCallback& on_iteration) {
  validate_params(params);
  const int n = graph.node_count();
  check_config(cfg);
  if (total_hosting(graph) < params.hq) {
    throw InfeasibleInstance("hq " + std::to_string(params.hq) +
                             " exceeds total hosting " +
                             std::to_string(total_hosting(graph)));
  }

  const auto start = Clock::now();
  const double mutation = cfg.mutation_rate.value_or(n > 0 ? 1.0 / n : 0.0);
  Rng rng(cfg.seed);
  detail::ConstraintHandler handler(graph, params, cfg.constraint,
                                    cfg.penalty_factor);

  std::vector<Individual> pop(cfg.population);
  for (Individual& ind : pop) {
    ind.position = Placement::zeros(n);
    for (int d = 0; d < n; ++d) ind.position.bits[d] = rng.unit() < 0.5 ? 1 : 0;
    ind.cost = handler.process(ind.position);
  }

  Placement best;
  double best_cost = std::numeric_limits<double>::infinity();
  auto track_best = [&] {
    for (const Individual& ind : pop) {
      if (ind.cost < best_cost) {
        best_cost = ind.cost;
        best = ind.position;
      }
    }
  };
  track_best();

  // Draws the tournament entrants and returns the index of the cheapest one
  // (ties: first drawn).
  auto tournament = [&]() -> int {
    int winner = static_cast<int>(rng.below(pop.size()));
    for (int k = 1; k < cfg.tournament_size; ++k) {
      const int challenger = static_cast<int>(rng.below(pop.size()));
      if (pop[challenger].cost < pop[winner].cost) winner = challenger;
    }
    return winner;
  };

  for (int gen = 0; gen < cfg.generations; ++gen) {
    std::vector<Individual> next;
    next.reserve(cfg.population);

    if (cfg.elitism > 0) {
      std::vector<int> order(pop.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return pop[a].cost < pop[b].cost; });
      for (int e = 0; e < cfg.elitism; ++e) next.push_back(pop[order[e]]);
    }

    while (static_cast<int>(next.size()) < cfg.population) {
      const Individual& p1 = pop[tournament()];
      const Individual& p2 = pop[tournament()];
      Placement c1 = p1.position;
      Placement c2 = p2.position;
      if (rng.unit() < cfg.crossover_rate) {
        for (int d = 0; d < n; ++d) {
          if (rng.unit() < 0.5) std::swap(c1.bits[d], c2.bits[d]);
        }
      }
      for (int d = 0; d < n; ++d) {
        if (rng.unit() < mutation) c1.bits[d] ^= 1;
      }
      for (int d = 0; d < n; ++d) {
        if (rng.unit() < mutation) c2.bits[d] ^= 1;
      }
      Individual child1{std::move(c1), 0.0};
      child1.cost = handler.process(child1.position);
      next.push_back(std::move(child1));
      if (static_cast<int>(next.size()) < cfg.population) {
        Individual child2{std::move(c2), 0.0};
        child2.cost = handler.process(child2.position);
        next.push_back(std::move(child2));
      }
    }

    pop = std::move(next);
    track_best();
    if (on_iteration) on_iteration(gen, best_cost);
  }

  auto [placement, breakdown] = handler.finish(best);
  SolveResult r;
  r.placement = std::move(placement);
  r.breakdown = breakdown;
  r.feasible = true;
  r.evaluations = handler.evaluations();
  r.iterations = static_cast<std::uint64_t>(cfg.generations);
  r.solver_name = "ga";
  r.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace sbaplace
