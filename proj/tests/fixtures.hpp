#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "sbaplace/model.hpp"
#include "sbaplace/rng.hpp"

namespace sbaplace::testing {

/// Bank-account-opening study case: node 0 stays private, nodes 1 and 2
/// (hosting 12 and 45) go public; two cut edges (17.5, 10) and one
/// public-public edge (5). With alpha=30, beta1=20, beta2=5 the placement
/// (0,1,1) costs 1710 + 550 + 25 = 2285.
inline SbaGraph bank_graph() {
  return SbaGraph::from_hosting({20, 12, 45},
                                {{0, 1, 17.5}, {0, 2, 10.0}, {1, 2, 5.0}});
}

inline Placement bank_placement() { return Placement({0, 1, 1}); }

inline CostParams bank_params(double hq = 0.0) { return {30, 20, 5, hq}; }

/// Path 0-1-2 with hosting (10, 20, 30) and rates (5, 7).
inline SbaGraph path3_graph() {
  return SbaGraph::from_hosting({10, 20, 30}, {{0, 1, 5.0}, {1, 2, 7.0}});
}

inline CostParams path3_params(double hq) { return {1, 2, 3, hq}; }

/// Random simple graph for property tests: n nodes, each possible edge kept
/// with probability edge_prob, hosting uniform in [0, 50], rates in [0, 20].
inline SbaGraph random_graph(Rng& rng, int n, double edge_prob = 0.4) {
  std::vector<double> hosting(n);
  for (double& h : hosting) h = rng.uniform(0.0, 50.0);
  std::vector<CommEdge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.unit() < edge_prob) edges.push_back({a, b, rng.uniform(0.0, 20.0)});
    }
  }
  return SbaGraph::from_hosting(hosting, std::move(edges));
}

inline Placement random_placement(Rng& rng, int n) {
  Placement p = Placement::zeros(n);
  for (auto& bit : p.bits) bit = rng.unit() < 0.5 ? 1 : 0;
  return p;
}

inline CostParams random_params(Rng& rng) {
  return {rng.uniform(0.0, 50.0), rng.uniform(0.0, 30.0),
          rng.uniform(0.0, 30.0), 0.0};
}

inline double round_to_nearest_10(double value) {
  return 10.0 * std::round(value / 10.0);
}

/// Absolute-tolerance comparison (the numeric contract for cost values).
inline bool near_abs(double a, double b, double tol = 1e-9) {
  return std::fabs(a - b) <= tol;
}

}  // namespace sbaplace::testing
