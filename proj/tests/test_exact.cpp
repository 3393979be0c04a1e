#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fixtures.hpp"
#include "sbaplace/exact.hpp"
#include "sbaplace/instances.hpp"

using namespace sbaplace;
using namespace sbaplace::testing;

namespace {

// Independent oracle: plain-counting enumeration (bit d from mask bit d,
// unlike the solver's ordering), collecting every optimum and picking the
// lexicographically smallest by explicit comparison.
std::optional<std::pair<Placement, double>> oracle_optimum(
    const SbaGraph& g, const CostParams& params) {
  const int n = g.node_count();
  std::vector<Placement> optima;
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Placement p = Placement::zeros(n);
    for (int d = 0; d < n; ++d) p.bits[d] = (mask >> d) & 1u;
    if (!is_feasible(g, p, params)) continue;
    const double total = evaluate_cost(g, p, params).total;
    if (optima.empty() || total < best - 1e-12) {
      optima.clear();
      best = total;
    }
    if (std::abs(total - best) <= 1e-12) optima.push_back(p);
  }
  if (optima.empty()) return std::nullopt;
  std::sort(optima.begin(), optima.end(),
            [](const Placement& a, const Placement& b) {
              return a.bits < b.bits;
            });
  return std::make_pair(optima.front(), best);
}

void check_result_consistency(const SbaGraph& g, const CostParams& params,
                              const SolveResult& r) {
  const CostBreakdown cb = evaluate_cost(g, r.placement, params);
  CHECK(r.breakdown.total == cb.total);
  CHECK(r.breakdown.hosting == cb.hosting);
  CHECK(r.feasible == is_feasible(g, r.placement, params));
}

}  // namespace

TEST_CASE("3-node path optimum at hq=25") {
  // Brute force over all 8 placements puts the optimum at (0,0,1): hosting 30,
  // one cut edge of rate 7 -> total 44.
  const SbaGraph g = path3_graph();
  const CostParams params = path3_params(25);
  const SolveResult r = exact_solve(g, params);
  CHECK(r.placement == Placement({0, 0, 1}));
  CHECK(near_abs(r.breakdown.total, 44.0));
  CHECK(near_abs(r.breakdown.hosting, 30.0));
  CHECK(near_abs(r.breakdown.public_comm, 0.0));
  CHECK(near_abs(r.breakdown.hybrid_comm, 14.0));
  CHECK(r.feasible);
  CHECK(r.evaluations == 8);
  CHECK(r.iterations == 0);
  check_result_consistency(g, params, r);

  const SolveResult bnb = exact_solve_bnb(g, params);
  CHECK(bnb.placement == r.placement);
  CHECK(bnb.breakdown.total == r.breakdown.total);
}

TEST_CASE("hq=0 optimum is all-private at zero cost") {
  for (const auto* name : {"G4", "G7"}) {
    const SbaGraph g = generate_instance(preset(name));
    const CostParams params{40, 20, 10, 0.0};
    const SolveResult r = exact_solve(g, params);
    CHECK(r.placement == Placement::all_private(g.node_count()));
    CHECK(r.breakdown.total == 0.0);
    CHECK(r.feasible);
    const SolveResult bnb = exact_solve_bnb(g, params);
    CHECK(bnb.placement == r.placement);
    CHECK(bnb.breakdown.total == 0.0);
  }
}

TEST_CASE("hq equal to total hosting forces full offload") {
  const SbaGraph g = path3_graph();
  CostParams params = path3_params(total_hosting(g));
  const SolveResult r = exact_solve(g, params);
  CHECK(r.placement == Placement::all_public(3));
  CHECK(r.feasible);
  CHECK(r.breakdown.total ==
        evaluate_cost(g, Placement::all_public(3), params).total);
}

TEST_CASE("hq above total hosting reports infeasible") {
  const SbaGraph g = path3_graph();
  const CostParams params = path3_params(61.0);
  for (const SolveResult& r : {exact_solve(g, params), exact_solve_bnb(g, params)}) {
    CHECK_FALSE(r.feasible);
    CHECK(r.placement == Placement::all_public(3));
  }
  CHECK_FALSE(oracle_optimum(g, params).has_value());
}

TEST_CASE("equal-cost optima resolve to the lexicographically smallest") {
  // Two interchangeable nodes: (0,1) and (1,0) both cost 10; (0,1) is smaller.
  const SbaGraph g = SbaGraph::from_hosting({10, 10}, {});
  const CostParams params{1, 1, 1, 10};
  const SolveResult a = exact_solve(g, params);
  CHECK(a.placement == Placement({0, 1}));
  const SolveResult b = exact_solve_bnb(g, params);
  CHECK(b.placement == Placement({0, 1}));

  // Bit-identical across repeated calls.
  CHECK(exact_solve(g, params).placement == a.placement);
  CHECK(exact_solve_bnb(g, params).placement == a.placement);
}

TEST_CASE("enumeration matches the independent oracle on random instances") {
  Rng rng(8101);
  for (int trial = 0; trial < 40; ++trial) {
    const SbaGraph g = random_graph(rng, 2 + static_cast<int>(rng.below(9)));
    CostParams params = random_params(rng);
    params.hq = rng.uniform(0.0, total_hosting(g));
    const auto expected = oracle_optimum(g, params);
    REQUIRE(expected.has_value());
    const SolveResult r = exact_solve(g, params);
    CHECK(r.feasible);
    CHECK(near_abs(r.breakdown.total, expected->second));
    CHECK(r.placement == expected->first);
    check_result_consistency(g, params, r);
  }
}

TEST_CASE("branch and bound agrees with enumeration on random instances") {
  Rng rng(8102);
  for (int trial = 0; trial < 60; ++trial) {
    const SbaGraph g = random_graph(rng, 2 + static_cast<int>(rng.below(11)));
    CostParams params = random_params(rng);
    params.hq = rng.uniform(0.0, 1.1 * total_hosting(g));
    const SolveResult full = exact_solve(g, params);
    const SolveResult bnb = exact_solve_bnb(g, params);
    CHECK(bnb.placement == full.placement);
    CHECK(bnb.breakdown.total == full.breakdown.total);
    CHECK(bnb.feasible == full.feasible);
    CHECK(bnb.evaluations <= full.evaluations);
  }
}

TEST_CASE("every feasible sampled placement costs at least the optimum") {
  Rng rng(8103);
  for (const int n : {6, 10, 15}) {
    const SbaGraph g = random_graph(rng, n);
    CostParams params = random_params(rng);
    params.hq = rng.uniform(0.0, total_hosting(g));
    const double optimum = exact_solve(g, params).breakdown.total;
    for (int s = 0; s < 1000; ++s) {
      const Placement p = random_placement(rng, n);
      if (!is_feasible(g, p, params)) continue;
      CHECK(evaluate_cost(g, p, params).total >= optimum - 1e-9);
    }
  }
}

TEST_CASE("optimum is monotone in hq") {
  Rng rng(8104);
  const SbaGraph g = random_graph(rng, 10);
  CostParams params = random_params(rng);
  double previous = -1.0;
  for (int i = 0; i <= 10; ++i) {
    params.hq = hq_from_fraction(g, i / 10.0);
    const double total = exact_solve(g, params).breakdown.total;
    CHECK(total >= previous - 1e-9);
    previous = total;
  }
}

TEST_CASE("uniform coefficient scaling preserves the argmin") {
  Rng rng(8105);
  const SbaGraph g = random_graph(rng, 9);
  CostParams params = random_params(rng);
  params.hq = hq_from_fraction(g, 0.4);
  const SolveResult base = exact_solve(g, params);
  for (const double k : {0.5, 2.0, 10.0}) {
    const CostParams scaled{k * params.alpha, k * params.beta1,
                            k * params.beta2, params.hq};
    const SolveResult r = exact_solve(g, scaled);
    CHECK(r.placement == base.placement);
    CHECK(r.breakdown.total ==
          doctest::Approx(k * base.breakdown.total).epsilon(1e-9));
  }
}

TEST_CASE("node-count guard") {
  std::vector<double> hosting(31, 1.0);
  const SbaGraph big = SbaGraph::from_hosting(hosting, {});
  const CostParams params{1, 1, 1, 0};
  CHECK_THROWS_AS(exact_solve(big, params), InstanceTooLarge);
  CHECK_THROWS_AS(exact_solve_bnb(big, params), InstanceTooLarge);

  // The guard is adjustable.
  CHECK_THROWS_AS(exact_solve(path3_graph(), path3_params(0), 2),
                  InstanceTooLarge);
  CHECK_NOTHROW(exact_solve(path3_graph(), path3_params(0), 3));
}
