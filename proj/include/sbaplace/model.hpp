#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbaplace {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad argument or broken precondition (length mismatch, negative rate, ...).
class InvalidInput : public Error {
  using Error::Error;
};

/// Malformed graph/config file; the message names the offending line or field.
class ParseError : public Error {
  using Error::Error;
};

/// Exhaustive solver asked to enumerate more nodes than its guard allows.
class InstanceTooLarge : public Error {
  using Error::Error;
};

/// The offload threshold exceeds the total hosting of the graph.
class InfeasibleInstance : public Error {
  using Error::Error;
};

/// One service of the application. Ids are zero-based and contiguous.
struct ServiceNode {
  int id = 0;
  double hosting = 0.0;  // hosting units, >= 0

  bool operator==(const ServiceNode&) const = default;
};

/// Undirected communication link between two services.
struct CommEdge {
  int a = 0;
  int b = 0;
  double rate = 0.0;  // communication units, >= 0

  bool operator==(const CommEdge&) const = default;
};

/// Service-based application graph: nodes carry hosting quantities,
/// undirected edges carry communication rates. Immutable after construction;
/// the constructor validates all structural invariants (contiguous ids,
/// no self-loops, no duplicate unordered pairs, non-negative weights).
class SbaGraph {
 public:
  SbaGraph() = default;
  SbaGraph(std::vector<ServiceNode> nodes, std::vector<CommEdge> edges);

  /// Convenience: node i gets hosting[i] as its hosting quantity.
  static SbaGraph from_hosting(const std::vector<double>& hosting,
                               std::vector<CommEdge> edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<ServiceNode>& nodes() const { return nodes_; }
  const std::vector<CommEdge>& edges() const { return edges_; }
  double hosting(int id) const { return nodes_.at(id).hosting; }

  bool operator==(const SbaGraph&) const = default;

 private:
  std::vector<ServiceNode> nodes_;
  std::vector<CommEdge> edges_;
};

/// Binary location vector: bit d places service d (0 = private, 1 = public).
struct Placement {
  std::vector<std::uint8_t> bits;

  Placement() = default;
  explicit Placement(std::vector<std::uint8_t> b);

  static Placement all_private(std::size_t n) { return zeros(n); }
  static Placement all_public(std::size_t n);
  static Placement zeros(std::size_t n);

  std::size_t size() const { return bits.size(); }
  std::string to_string() const;  // e.g. "0110"

  bool operator==(const Placement&) const = default;
};

/// Pricing coefficients and the minimum-offload threshold.
struct CostParams {
  double alpha = 0.0;  // cost per public hosting unit
  double beta1 = 0.0;  // cost per hybrid (cross-cloud) communication unit
  double beta2 = 0.0;  // cost per public-internal communication unit
  double hq = 0.0;     // minimum hosting units that must go public

  bool operator==(const CostParams&) const = default;
};

/// The three cost components and their sum.
struct CostBreakdown {
  double hosting = 0.0;
  double public_comm = 0.0;
  double hybrid_comm = 0.0;
  double total = 0.0;

  bool operator==(const CostBreakdown&) const = default;
};

/// Placement cost: alpha * (public hosting) + beta2 * (public-public traffic)
/// + beta1 * (cut traffic). Private-side hosting and private-private traffic
/// cost nothing. Does not check the offload constraint.
CostBreakdown evaluate_cost(const SbaGraph& graph, const Placement& placement,
                            const CostParams& params);

/// Sum of hosting over publicly placed nodes.
double public_hosting(const SbaGraph& graph, const Placement& placement);

/// True iff the public hosting sum meets the hq threshold (exact >=).
bool is_feasible(const SbaGraph& graph, const Placement& placement,
                 const CostParams& params);

/// Sum of hosting over all nodes.
double total_hosting(const SbaGraph& graph);

/// 100 * |E| / (n(n-1)/2). Requires n >= 2.
double density_percent(const SbaGraph& graph);

/// Absolute hq threshold from a fraction of the graph's total hosting.
double hq_from_fraction(const SbaGraph& graph, double fraction);

/// Throws InvalidInput unless all coefficients and hq are non-negative.
void validate_params(const CostParams& params);

}  // namespace sbaplace
