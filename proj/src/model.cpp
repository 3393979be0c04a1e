#include "sbaplace/model.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace sbaplace {

namespace {

std::string describe_edge(const CommEdge& e) {
  return "(" + std::to_string(e.a) + ", " + std::to_string(e.b) + ")";
}

}  // namespace

SbaGraph::SbaGraph(std::vector<ServiceNode> nodes, std::vector<CommEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const int n = static_cast<int>(nodes_.size());
  for (int i = 0; i < n; ++i) {
    if (nodes_[i].id != i) {
      throw InvalidInput("node ids must be contiguous from 0: slot " +
                         std::to_string(i) + " holds id " +
                         std::to_string(nodes_[i].id));
    }
    if (!(nodes_[i].hosting >= 0.0)) {
      throw InvalidInput("node " + std::to_string(i) +
                         ": hosting must be >= 0");
    }
  }
  std::set<std::pair<int, int>> seen;
  for (const CommEdge& e : edges_) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
      throw InvalidInput("edge " + describe_edge(e) +
                         " references a node outside 0.." +
                         std::to_string(n - 1));
    }
    if (e.a == e.b) {
      throw InvalidInput("edge " + describe_edge(e) + " is a self-loop");
    }
    if (!(e.rate >= 0.0)) {
      throw InvalidInput("edge " + describe_edge(e) + ": rate must be >= 0");
    }
    if (!seen.insert(std::minmax(e.a, e.b)).second) {
      throw InvalidInput("duplicate edge " + describe_edge(e));
    }
  }
}

SbaGraph SbaGraph::from_hosting(const std::vector<double>& hosting,
                                std::vector<CommEdge> edges) {
  std::vector<ServiceNode> nodes;
  nodes.reserve(hosting.size());
  for (std::size_t i = 0; i < hosting.size(); ++i) {
    nodes.push_back({static_cast<int>(i), hosting[i]});
  }
  return SbaGraph(std::move(nodes), std::move(edges));
}

Placement::Placement(std::vector<std::uint8_t> b) : bits(std::move(b)) {
  for (std::size_t d = 0; d < bits.size(); ++d) {
    if (bits[d] > 1) {
      throw InvalidInput("placement bit " + std::to_string(d) +
                         " is not 0 or 1");
    }
  }
}

Placement Placement::zeros(std::size_t n) {
  Placement p;
  p.bits.assign(n, 0);
  return p;
}

Placement Placement::all_public(std::size_t n) {
  Placement p;
  p.bits.assign(n, 1);
  return p;
}

std::string Placement::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

void validate_params(const CostParams& params) {
  if (!(params.alpha >= 0.0) || !(params.beta1 >= 0.0) ||
      !(params.beta2 >= 0.0) || !(params.hq >= 0.0)) {
    throw InvalidInput("cost parameters must all be >= 0");
  }
}

namespace {

void check_length(const SbaGraph& graph, const Placement& placement) {
  if (placement.size() != static_cast<std::size_t>(graph.node_count())) {
    throw InvalidInput("placement length " + std::to_string(placement.size()) +
                       " does not match node count " +
                       std::to_string(graph.node_count()));
  }
}

}  // namespace

CostBreakdown evaluate_cost(const SbaGraph& graph, const Placement& placement,
                            const CostParams& params) {
  check_length(graph, placement);
  validate_params(params);

  double host_units = 0.0;
  for (const ServiceNode& node : graph.nodes()) {
    if (placement.bits[node.id]) host_units += node.hosting;
  }

  // Each undirected edge is charged once: public-public traffic at beta2,
  // cut traffic at beta1, private-private traffic free.
  double public_units = 0.0;
  double hybrid_units = 0.0;
  for (const CommEdge& e : graph.edges()) {
    const bool pa = placement.bits[e.a] != 0;
    const bool pb = placement.bits[e.b] != 0;
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
  return out;
}

double public_hosting(const SbaGraph& graph, const Placement& placement) {
  check_length(graph, placement);
  double sum = 0.0;
  for (const ServiceNode& node : graph.nodes()) {
    if (placement.bits[node.id]) sum += node.hosting;
  }
  return sum;
}

bool is_feasible(const SbaGraph& graph, const Placement& placement,
                 const CostParams& params) {
  return public_hosting(graph, placement) >= params.hq;
}

double total_hosting(const SbaGraph& graph) {
  double sum = 0.0;
  for (const ServiceNode& node : graph.nodes()) sum += node.hosting;
  return sum;
}

double density_percent(const SbaGraph& graph) {
  const int n = graph.node_count();
  if (n < 2) {
    throw InvalidInput("density needs at least 2 nodes, got " +
                       std::to_string(n));
  }
  const double possible = static_cast<double>(n) * (n - 1) / 2.0;
  return 100.0 * static_cast<double>(graph.edge_count()) / possible;
}

double hq_from_fraction(const SbaGraph& graph, double fraction) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw InvalidInput("hq fraction must lie in [0, 1]");
  }
  return fraction * total_hosting(graph);
}

}  // namespace sbaplace
