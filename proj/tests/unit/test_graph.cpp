#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "vtypes/error.hpp"
#include "vtypes/graph.hpp"

using namespace vtypes;

namespace {

std::string spec_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("spec text round trip") {
  for (const char* text : {"nsg:2,2,2;2,3,2", "dng:1,1;1,1", "nsg:1;1", "dng:3,1,4;1,5,9"}) {
    CAPTURE(text);
    CHECK(format_spec(parse_spec(text)) == text);
  }
  CHECK(parse_spec("half:3") == dng({1, 1, 1}, {1, 1, 1}));
  CHECK(parse_spec(" nsg: 1 , 2 ; 3 , 4 ") == nsg({1, 2}, {3, 4}));
}

TEST_CASE("malformed specs name the bad token") {
  CHECK(spec_error("nsg:0;1").find("m_1") != std::string::npos);
  CHECK(spec_error("nsg:1,x;1,1").find("'x'") != std::string::npos);
  CHECK(spec_error("tree:1;1").find("'tree'") != std::string::npos);
  CHECK(spec_error("nsg:1,1;1").find("differ") != std::string::npos);
  CHECK(spec_error("nsg:1,1").find("';'") != std::string::npos);
  CHECK(spec_error("nsg:;").find("bad token") != std::string::npos);
  CHECK(spec_error("half:0").find("h >= 1") != std::string::npos);
  CHECK(spec_error("1;1").find("prefix") != std::string::npos);
  CHECK_THROWS_AS(validate(nsg({1, -2}, {1, 1})), SpecError);
}

TEST_CASE("small graphs by hand") {
  const Graph k2 = build(nsg({1}, {1}));
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);

  // NSG(1,1;1,1): V is a clique, u_2 sees both V cells, u_1 only V_1
  const Graph g = build(nsg({1, 1}, {1, 1}));
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(g.label(0) == CellTag{Side::U, 1});
  CHECK(g.label(3) == CellTag{Side::V, 2});

  const Graph k22 = build(dng({2}, {2}));
  CHECK(k22.edge_count() == 4);
  CHECK_FALSE(k22.adjacent(0, 1));
}

TEST_CASE("half graphs have h(h+1)/2 edges") {
  for (int h = 1; h <= 12; ++h) {
    const Graph g = half_graph(h);
    CHECK(g.order() == static_cast<std::size_t>(2 * h));
    CHECK(g.edge_count() == static_cast<std::size_t>(h * (h + 1) / 2));
    CHECK(g == build(half_graph_spec(h)));
  }
}

TEST_CASE("build agrees with the defining adjacency rule on random specs") {
  oracle::SpecGen gen(1001);
  for (int trial = 0; trial < 200; ++trial) {
    const Family f = trial % 2 ? Family::Chain : Family::Threshold;
    const GraphSpec s = gen(f, 6, 4);
    CAPTURE(format_spec(s));
    const Graph g = build(s);
    REQUIRE(g.order() == s.order());
    CHECK(oracle::adjacency(g) == oracle::adjacency(s));
    CHECK(validate_family(g, f));
    const auto cells = oracle::cells_of(s);
    for (Vertex v = 0; v < g.order(); ++v) {
      REQUIRE(g.label(v).has_value());
      CHECK((g.label(v)->side == Side::U) == cells[v].u);
      CHECK(g.label(v)->index == cells[v].index);
    }
  }
}

TEST_CASE("forbidden subgraphs") {
  CHECK_FALSE(validate_family(path_graph(4), Family::Threshold));
  CHECK_FALSE(validate_family(cycle_graph(4), Family::Threshold));
  CHECK(validate_family(star_graph(4), Family::Threshold));
  CHECK(validate_family(complete_graph(5), Family::Threshold));

  CHECK_FALSE(validate_family(cycle_graph(3), Family::Chain));
  CHECK_FALSE(validate_family(cycle_graph(5), Family::Chain));
  CHECK(validate_family(path_graph(3), Family::Chain));
  CHECK(validate_family(cycle_graph(4), Family::Chain));
  // 2K2 is forbidden in both
  const std::pair<Vertex, Vertex> e[] = {{0, 1}, {2, 3}};
  CHECK_FALSE(validate_family(Graph::from_edges(4, e), Family::Threshold));
  CHECK_FALSE(validate_family(Graph::from_edges(4, e), Family::Chain));
  // a threshold graph with a triangle is not a chain graph
  CHECK_FALSE(validate_family(build(nsg({1, 1}, {1, 1})), Family::Chain));
}

TEST_CASE("graph constructor rejects bad matrices") {
  DenseMatrix<std::uint8_t> a(2, 2);
  a(0, 1) = 1;
  CHECK_THROWS_AS(Graph{a}, DomainError);
  a(1, 0) = 1;
  a(0, 0) = 1;
  CHECK_THROWS_AS(Graph{a}, DomainError);
}

TEST_CASE("vertex deletion and duplication") {
  const Graph h4 = half_graph(4);
  const Graph d = delete_vertex(h4, 1);
  CHECK(d.order() == 7);
  CHECK(d.edge_count() == h4.edge_count() - h4.degree(1));
  CHECK(oracle::adjacency(d) == oracle::delete_vertex(oracle::adjacency(h4), 1));

  const Graph twin = duplicate_vertex(h4, 1);
  CHECK(twin.order() == 9);
  CHECK(twin.neighbors(2) == twin.neighbors(1));
  CHECK(twin.label(2) == twin.label(1));
  CHECK(delete_vertex(twin, 2) == h4);
  CHECK(twin.same_adjacency(build(dng({1, 2, 1, 1}, {1, 1, 1, 1}))));

  oracle::SpecGen gen(77);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = build(gen(trial % 2 ? Family::Chain : Family::Threshold, 5, 3));
    const Vertex v = static_cast<Vertex>(gen.pick(0, static_cast<int>(g.order()) - 1));
    CHECK(delete_vertex(duplicate_vertex(g, v), v + 1) == g);
  }
}

TEST_CASE("cells and members") {
  const GraphSpec s = nsg({2, 1, 3}, {1, 2, 2});
  const Graph g = build(s);
  CHECK(g.cells().size() == 6);
  CHECK(g.cell_members({Side::U, 3}) == std::vector<Vertex>{3, 4, 5});
  CHECK(g.find_vertex({Side::V, 2}) == Vertex{7});
  CHECK(cell_range(s, Side::V, 2, 3) == std::vector<Vertex>{7, 8, 9, 10});
  CHECK(cell_range(s, Side::U, 1, 1) == std::vector<Vertex>{0, 1});
}

TEST_CASE("derived specs") {
  const GraphSpec s = nsg({1, 2, 3, 4}, {5, 6, 7, 8});
  CHECK(nsg_tail(s, 2) == nsg({3, 4}, {7, 8}));
  CHECK(nsg_head(s, 2) == nsg({1, 2}, {5, 6}));
  CHECK(nsg_merged(s, 3) == nsg({1, 5, 4}, {5, 6, 8}));
  CHECK(nsg_merged(s, 2) == nsg({3, 3, 4}, {5, 7, 8}));
  CHECK_THROWS_AS(nsg_tail(s, 4), DomainError);
  CHECK_THROWS_AS(nsg_merged(s, 1), DomainError);

  const GraphSpec c = dng({1, 2, 3, 4}, {5, 6, 7, 8});
  CHECK(dng_head(c, 2) == dng({1}, {8}));
  CHECK(dng_head(c, 3) == dng({1, 2}, {7, 8}));
  CHECK(dng_tail(c, 2) == dng({2, 3, 4}, {5, 6, 7}));
  CHECK(dng_tail(c, 1) == c);
  CHECK_THROWS_AS(dng_head(c, 1), DomainError);

  const DerivedSpecs d = derived_specs(s, 4);
  CHECK_FALSE(d.tail.has_value());
  CHECK(d.head == s);
  CHECK(d.merged.has_value());
}

TEST_CASE("induced subgraph of a threshold graph stays threshold") {
  oracle::SpecGen gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = build(gen(Family::Threshold, 5, 3));
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
      if (gen.pick(0, 2) != 0) keep.push_back(v);
    CHECK(validate_family(induced_subgraph(g, keep), Family::Threshold));
  }
}
