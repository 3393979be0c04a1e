#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "sbaplace/instances.hpp"

using namespace sbaplace;
using namespace sbaplace::testing;

TEST_CASE("preset table") {
  const auto specs = preset_specs();
  REQUIRE(specs.size() == 10);

  const InstanceSpec& g5 = specs[4];
  CHECK(g5.name == "G5");
  CHECK(g5.nodes == 16);
  CHECK(g5.edges == 60);
  CHECK(g5.total_hosting == 413.0);

  CHECK(preset("G10").nodes == 12);
  CHECK(preset("G10").edges == 66);
  CHECK(preset("g3").name == "G3");  // case-insensitive lookup

  // G1 is sparser than a spanning tree would need; that is fine.
  CHECK(preset("G1").edges < preset("G1").nodes);

  CHECK_THROWS_AS(preset("G11"), InvalidInput);
}

TEST_CASE("generated graphs match their spec exactly") {
  const double expected_density[] = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  int i = 0;
  for (const InstanceSpec& spec : preset_specs()) {
    const SbaGraph g = generate_instance(spec);
    CHECK(g.node_count() == spec.nodes);
    CHECK(g.edge_count() == spec.edges);
    CHECK(total_hosting(g) == spec.total_hosting);
    CHECK(round_to_nearest_10(density_percent(g)) == expected_density[i]);
    ++i;
  }
}

TEST_CASE("generated graphs are valid and deterministic") {
  InstanceSpec spec;
  spec.name = "R";
  spec.nodes = 14;
  spec.edges = 40;
  spec.total_hosting = 200;
  spec.seed = 42;

  const SbaGraph g = generate_instance(spec);
  for (const ServiceNode& node : g.nodes()) {
    CHECK(node.hosting >= 1.0);
    CHECK(node.hosting == std::floor(node.hosting));
  }
  for (const CommEdge& e : g.edges()) {
    CHECK(e.rate >= spec.rate_min);
    CHECK(e.rate <= spec.rate_max);
    CHECK(near_abs(e.rate * 10.0, std::round(e.rate * 10.0), 1e-9));
  }

  CHECK(generate_instance(spec) == g);
  spec.seed = 43;
  CHECK_FALSE(generate_instance(spec) == g);
}

TEST_CASE("degenerate rate ranges") {
  InstanceSpec spec;
  spec.nodes = 5;
  spec.edges = 4;
  spec.total_hosting = 10;
  spec.rate_min = spec.rate_max = 5.0;
  const SbaGraph g = generate_instance(spec);
  for (const CommEdge& e : g.edges()) {
    CHECK(e.rate == 5.0);
  }

  spec.rate_min = 1.01;
  spec.rate_max = 1.04;  // no one-decimal value inside
  CHECK_THROWS_AS(generate_instance(spec), InvalidInput);
}

TEST_CASE("instance spec validation") {
  InstanceSpec spec;
  spec.nodes = 5;
  spec.edges = 11;  // above 5*4/2
  spec.total_hosting = 10;
  CHECK_THROWS_AS(generate_instance(spec), InvalidInput);
  spec.edges = 4;
  spec.total_hosting = 4;  // below nodes
  CHECK_THROWS_AS(generate_instance(spec), InvalidInput);
  spec.total_hosting = 10.5;  // not integral
  CHECK_THROWS_AS(generate_instance(spec), InvalidInput);
  spec.total_hosting = 10;
  spec.rate_min = 0.0;
  CHECK_THROWS_AS(generate_instance(spec), InvalidInput);
  spec.rate_min = 1.0;
  spec.nodes = 0;
  spec.edges = 0;
  CHECK_THROWS_AS(generate_instance(spec), InvalidInput);  // hosting, no nodes
}

TEST_CASE("round trips through both file formats") {
  InstanceSpec spec;
  spec.name = "RT";
  spec.nodes = 9;
  spec.edges = 17;
  spec.total_hosting = 77;
  spec.seed = 7;
  const SbaGraph g = generate_instance(spec);

  for (const GraphFormat format : {GraphFormat::canonical, GraphFormat::edge_list}) {
    const std::string text = format_graph(g, format);
    CHECK(parse_graph(text) == g);

    const auto path = std::filesystem::temp_directory_path() /
                      (format == GraphFormat::canonical ? "sbaplace_rt.json"
                                                        : "sbaplace_rt.txt");
    write_graph(g, path, format);
    CHECK(read_graph(path) == g);
    std::filesystem::remove(path);
  }

  // Fractional values survive with full precision.
  const SbaGraph fractional =
      SbaGraph::from_hosting({0.1, 1.0 / 3.0}, {{0, 1, 17.5}});
  for (const GraphFormat format : {GraphFormat::canonical, GraphFormat::edge_list}) {
    CHECK(parse_graph(format_graph(fractional, format)) == fractional);
  }
}

TEST_CASE("edge-list parsing") {
  const SbaGraph g = parse_graph("3 1\n0 10\n1 20\n2 30\n0 2 5.5\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g.edges()[0] == CommEdge{0, 2, 5.5});
  CHECK(g.hosting(1) == 20.0);

  SUBCASE("self-loop is a validation error") {
    CHECK_THROWS_AS(parse_graph("2 1\n0 1\n1 2\n1 1 4.0\n"), InvalidInput);
  }
  SUBCASE("malformed content names the line") {
    CHECK_THROWS_WITH_AS(parse_graph("3\n"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 ten\n1 20\n0 1 4\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("1 0\n0 5\nleftover\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n1 1\n0 1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("   \n \n"), ParseError);
  }
}

TEST_CASE("canonical parsing") {
  const char* good = R"({
    "version": 1,
    "nodes": [{"id": 0, "hosting": 12}, {"id": 1, "hosting": 45}],
    "edges": [{"a": 0, "b": 1, "rate": 17.5}]
  })";
  const SbaGraph g = parse_graph(good);
  CHECK(g.node_count() == 2);
  CHECK(g.edges()[0].rate == 17.5);

  CHECK_THROWS_WITH_AS(parse_graph(R"({"version": 2, "nodes": [], "edges": []})"),
                       doctest::Contains("version"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"version": 1, "edges": []})"),
                       doctest::Contains("nodes"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_graph(R"({"version": 1, "nodes": [{"id": 0}], "edges": []})"),
      doctest::Contains("nodes[0]"), ParseError);
  CHECK_THROWS_AS(parse_graph("{broken json"), ParseError);

  // Node order and ids must line up.
  CHECK_THROWS_AS(
      parse_graph(
          R"({"version": 1, "nodes": [{"id": 1, "hosting": 1}], "edges": []})"),
      InvalidInput);
}
