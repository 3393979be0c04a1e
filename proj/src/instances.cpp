#include "sbaplace/instances.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "sbaplace/rng.hpp"
#include "text_util.hpp"

namespace sbaplace {

namespace {

using detail::double_to_string;
using detail::parse_double;
using detail::parse_int;

InstanceSpec make_spec(std::string name, int nodes, int edges,
                       double total_hosting, std::uint64_t seed) {
  InstanceSpec s;
  s.name = std::move(name);
  s.nodes = nodes;
  s.edges = edges;
  s.total_hosting = total_hosting;
  s.seed = seed;
  return s;
}

}  // namespace

std::vector<InstanceSpec> preset_specs() {
  return {
      make_spec("G1", 20, 19, 469, 1),  make_spec("G2", 17, 28, 521, 2),
      make_spec("G3", 18, 46, 418, 3),  make_spec("G4", 11, 22, 254, 4),
      make_spec("G5", 16, 60, 413, 5),  make_spec("G6", 14, 55, 332, 6),
      make_spec("G7", 13, 55, 319, 7),  make_spec("G8", 19, 137, 570, 8),
      make_spec("G9", 15, 95, 363, 9),  make_spec("G10", 12, 66, 297, 10),
  };
}

InstanceSpec preset(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (InstanceSpec& s : preset_specs()) {
    if (s.name == upper) return s;
  }
  throw InvalidInput("unknown preset '" + name + "' (expected G1..G10)");
}

namespace {

void check_spec(const InstanceSpec& spec) {
  if (spec.nodes < 0) throw InvalidInput("instance spec: nodes must be >= 0");
  const long long possible =
      static_cast<long long>(spec.nodes) * (spec.nodes - 1) / 2;
  if (spec.edges < 0 || spec.edges > possible) {
    throw InvalidInput("instance spec: edges must lie in [0, " +
                       std::to_string(possible) + "]");
  }
  if (!std::isfinite(spec.total_hosting) ||
      !(spec.total_hosting >= spec.nodes)) {
    throw InvalidInput(
        "instance spec: total_hosting must be >= nodes (each node needs 1)");
  }
  if (spec.total_hosting != std::floor(spec.total_hosting)) {
    throw InvalidInput("instance spec: total_hosting must be an integer");
  }
  if (spec.nodes == 0 && spec.total_hosting != 0.0) {
    throw InvalidInput("instance spec: hosting cannot be placed on 0 nodes");
  }
  if (!(spec.rate_min > 0.0 && spec.rate_min <= spec.rate_max)) {
    throw InvalidInput("instance spec: need 0 < rate_min <= rate_max");
  }
}

}  // namespace

SbaGraph generate_instance(const InstanceSpec& spec) {
  check_spec(spec);
  // Rates are drawn from the one-decimal grid inside [rate_min, rate_max].
  const long long tick_lo = std::llround(std::ceil(spec.rate_min * 10 - 1e-9));
  const long long tick_hi = std::llround(std::floor(spec.rate_max * 10 + 1e-9));
  if (tick_lo > tick_hi) {
    throw InvalidInput("instance spec: [rate_min, rate_max] contains no "
                       "one-decimal rate");
  }

  Rng rng(spec.seed);
  const int n = spec.nodes;

  // Every node starts at 1 hosting unit; the surplus lands uniformly.
  std::vector<double> hosting(n, 1.0);
  const long long extra = std::llround(spec.total_hosting - n);
  for (long long k = 0; k < extra; ++k) {
    hosting[rng.below(n)] += 1.0;
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  // Partial Fisher-Yates: the first `edges` entries are a uniform sample
  // without replacement.
  for (int i = 0; i < spec.edges; ++i) {
    const std::size_t j = i + rng.below(pairs.size() - i);
    std::swap(pairs[i], pairs[j]);
  }
  pairs.resize(spec.edges);
  std::sort(pairs.begin(), pairs.end());

  std::vector<CommEdge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    const long long tick = tick_lo + static_cast<long long>(
                                         rng.below(tick_hi - tick_lo + 1));
    edges.push_back({a, b, static_cast<double>(tick) / 10.0});
  }

  return SbaGraph::from_hosting(hosting, std::move(edges));
}

namespace {

SbaGraph parse_canonical(const std::string& text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError(origin + ": expected an object");
    if (!doc.contains("version") || !doc["version"].is_number_integer()) {
      throw ParseError(origin + ": field 'version': missing or not an integer");
    }
    if (doc["version"].get<int>() != 1) {
      throw ParseError(origin + ": field 'version': unsupported version " +
                       doc["version"].dump());
    }
    if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
      throw ParseError(origin + ": field 'nodes': missing or not an array");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
      throw ParseError(origin + ": field 'edges': missing or not an array");
    }
    std::vector<ServiceNode> nodes;
    nodes.reserve(doc["nodes"].size());
    for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
      const auto& jn = doc["nodes"][i];
      const std::string where = origin + ": field 'nodes[" + std::to_string(i) + "]'";
      if (!jn.is_object() || !jn.contains("id") || !jn.contains("hosting") ||
          !jn["id"].is_number_integer() || !jn["hosting"].is_number()) {
        throw ParseError(where + ": expected {id, hosting}");
      }
      nodes.push_back({jn["id"].get<int>(), jn["hosting"].get<double>()});
    }
    std::vector<CommEdge> edges;
    edges.reserve(doc["edges"].size());
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& je = doc["edges"][i];
      const std::string where = origin + ": field 'edges[" + std::to_string(i) + "]'";
      if (!je.is_object() || !je.contains("a") || !je.contains("b") ||
          !je.contains("rate") || !je["a"].is_number_integer() ||
          !je["b"].is_number_integer() || !je["rate"].is_number()) {
        throw ParseError(where + ": expected {a, b, rate}");
      }
      edges.push_back(
          {je["a"].get<int>(), je["b"].get<int>(), je["rate"].get<double>()});
    }
    return SbaGraph(std::move(nodes), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

// Whitespace-separated fields of the next non-blank line.
bool next_line(std::istringstream& in, int& line_no,
               std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    fields.assign(std::istream_iterator<std::string>(ls),
                  std::istream_iterator<std::string>());
    if (!fields.empty()) return true;
  }
  return false;
}

SbaGraph parse_edge_list(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  int line_no = 0;
  std::vector<std::string> fields;

  auto where = [&] { return origin + ": line " + std::to_string(line_no); };

  if (!next_line(in, line_no, fields) || fields.size() != 2) {
    throw ParseError(origin + ": line 1: expected header 'n m'");
  }
  const long long n = parse_int(fields[0], where() + ", field 'n'");
  const long long m = parse_int(fields[1], where() + ", field 'm'");
  if (n < 0 || m < 0) throw ParseError(where() + ": counts must be >= 0");

  std::vector<ServiceNode> nodes;
  nodes.reserve(n);
  for (long long i = 0; i < n; ++i) {
    if (!next_line(in, line_no, fields) || fields.size() != 2) {
      throw ParseError(where() + ": expected node line 'id hosting'");
    }
    nodes.push_back({static_cast<int>(parse_int(fields[0], where() + ", field 'id'")),
                     parse_double(fields[1], where() + ", field 'hosting'")});
  }
  std::vector<CommEdge> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line_no, fields) || fields.size() != 3) {
      throw ParseError(where() + ": expected edge line 'a b rate'");
    }
    edges.push_back({static_cast<int>(parse_int(fields[0], where() + ", field 'a'")),
                     static_cast<int>(parse_int(fields[1], where() + ", field 'b'")),
                     parse_double(fields[2], where() + ", field 'rate'")});
  }
  if (next_line(in, line_no, fields)) {
    throw ParseError(where() + ": unexpected trailing content");
  }
  return SbaGraph(std::move(nodes), std::move(edges));
}

}  // namespace

SbaGraph parse_graph(const std::string& text, const std::string& origin) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw ParseError(origin + ": empty graph file");
  }
  if (text[first] == '{') return parse_canonical(text, origin);
  return parse_edge_list(text, origin);
}

SbaGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), path.string());
}

std::string format_graph(const SbaGraph& graph, GraphFormat format) {
  if (format == GraphFormat::canonical) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const ServiceNode& node : graph.nodes()) {
      doc["nodes"].push_back({{"id", node.id}, {"hosting", node.hosting}});
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const CommEdge& e : graph.edges()) {
      doc["edges"].push_back({{"a", e.a}, {"b", e.b}, {"rate", e.rate}});
    }
    return doc.dump(2) + "\n";
  }

  std::string out = std::to_string(graph.node_count()) + " " +
                    std::to_string(graph.edge_count()) + "\n";
  for (const ServiceNode& node : graph.nodes()) {
    out += std::to_string(node.id) + " " + double_to_string(node.hosting) + "\n";
  }
  for (const CommEdge& e : graph.edges()) {
    out += std::to_string(e.a) + " " + std::to_string(e.b) + " " +
           double_to_string(e.rate) + "\n";
  }
  return out;
}

void write_graph(const SbaGraph& graph, const std::filesystem::path& path,
                 GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << format_graph(graph, format);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace sbaplace
