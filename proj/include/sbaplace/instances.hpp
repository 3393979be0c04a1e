#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sbaplace/model.hpp"

namespace sbaplace {

/// Recipe for a synthetic SBA graph with fixed structural statistics.
struct InstanceSpec {
  std::string name;
  int nodes = 0;
  int edges = 0;
  double total_hosting = 0.0;  // integral; every node gets at least 1 unit
  double rate_min = 1.0;
  double rate_max = 50.0;
  std::uint64_t seed = 0;

  bool operator==(const InstanceSpec&) const = default;
};

/// The ten bundled presets G1..G10 (node/edge counts, hosting totals and
/// densities spanning 10% to 100%).
std::vector<InstanceSpec> preset_specs();

/// Preset lookup by name ("G1".."G10"). Throws InvalidInput for unknown names.
InstanceSpec preset(const std::string& name);

/// Random simple graph with exactly spec.nodes nodes and spec.edges edges
/// sampled uniformly without replacement; integral hosting >= 1 per node
/// summing exactly to spec.total_hosting; one-decimal edge rates uniform in
/// [rate_min, rate_max]. Deterministic per seed.
SbaGraph generate_instance(const InstanceSpec& spec);

enum class GraphFormat { canonical, edge_list };

/// Reads either graph format, sniffing by leading character ('{' = canonical).
SbaGraph read_graph(const std::filesystem::path& path);

/// Parses graph text (same sniffing as read_graph). `origin` names the
/// source in error messages.
SbaGraph parse_graph(const std::string& text, const std::string& origin = "<string>");

void write_graph(const SbaGraph& graph, const std::filesystem::path& path,
                 GraphFormat format = GraphFormat::canonical);

/// Serializes to the requested format without touching the filesystem.
std::string format_graph(const SbaGraph& graph,
                         GraphFormat format = GraphFormat::canonical);

}  // namespace sbaplace
