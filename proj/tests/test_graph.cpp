#include <doctest.h>

#include <deque>
#include <random>

#include "gca/errors.hpp"
#include "gca/graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gca;

TEST_SUITE("graph") {
  TEST_CASE("parse minimal graphs") {
    const Graph g = fixture::edge();
    CHECK(g.vertex_count() == 2);
    CHECK(g.bundle_count() == 1);
    CHECK(g.sinks() == g.set_from_names({"v"}));
    CHECK(g.sigma() == g.set_from_names({"u"}));

    const Graph inf = fixture::oinf();
    CHECK(inf.infinite_emitters() == inf.set_from_names({"u"}));
    CHECK(inf.has_omega());
  }

  TEST_CASE("parse errors carry line numbers") {
    try {
      parse_graph("vertex u\nedge e : u -> v\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("edge e : u -> v"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex u; vertex u"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex u; edge u : u -> u"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex u; edge a : u -> u * 0"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex u; edge a : u -> u * lots"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex 9u"), ParseError);
    CHECK_THROWS_AS(parse_graph("node u"), ParseError);
  }

  TEST_CASE("comments, blank lines and multiplicities") {
    const Graph g = parse_graph("# header\n\nvertex u   # the only vertex\nedge a : u -> u * 3\n");
    CHECK(g.bundle(g.bundle_id("a")).multiplicity == Multiplicity::finite(3));
    CHECK(g.delta1(g.vertex("u")).finite.size() == 3);
  }

  TEST_CASE("format and reparse") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
      const Graph g = oracle::random_graph(rng, 6, 8, true);
      const Graph h = parse_graph(format_graph(g));
      CHECK(is_subgraph(g, h));
      CHECK(is_subgraph(h, g));
    }
  }

  TEST_CASE("delta1") {
    const Graph g = fixture::o2();
    const Delta1 d = g.delta1(g.vertex("u"));
    REQUIRE(d.finite.size() == 2);
    CHECK(g.label(d.finite[0]) == "a");
    CHECK(g.label(d.finite[1]) == "b");
    CHECK_FALSE(d.infinite());

    const Graph inf = fixture::oinf();
    const Delta1 di = inf.delta1(inf.vertex("u"));
    CHECK(di.infinite());
    CHECK(di.nth(0) == EdgeInstance{inf.bundle_id("a"), 0});
    CHECK(di.nth(5) == EdgeInstance{inf.bundle_id("a"), 5});
    CHECK(di.truncated(4).size() == 4);
    CHECK(inf.label(di.nth(2)) == "a#2");

    const Graph e = fixture::edge();
    CHECK(e.delta1(e.vertex("v")).empty());
    CHECK_THROWS_AS(e.vertex("zz"), DomainError);
  }

  TEST_CASE("kinds partition the vertices") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
      const Graph g = oracle::random_graph(rng, 7, 9, true);
      const VertexSet a = g.sinks(), b = g.sigma(), c = g.infinite_emitters();
      CHECK((a | b | c) == g.all_vertices());
      CHECK_FALSE(a.intersects(b));
      CHECK_FALSE(a.intersects(c));
      CHECK_FALSE(b.intersects(c));
    }
  }

  TEST_CASE("reachable matches a breadth-first search") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      const Graph g = oracle::random_graph(rng, 8, 12, true);
      const auto reach = oracle::closure(g);
      for (VertexId u : g.vertices()) {
        const VertexSet r = g.reachable(u), co = g.coreachable(u);
        for (VertexId v : g.vertices()) {
          CHECK(r.contains(v.value) == reach[u.value][v.value]);
          CHECK(co.contains(v.value) == reach[v.value][u.value]);
        }
      }
    }
    const Graph c = fixture::chain();
    CHECK(c.reachable(c.vertex("u")) == c.all_vertices());
    CHECK(c.reachable(c.vertex("w")) == c.set_from_names({"w"}));
  }

  TEST_CASE("edge labels round-trip") {
    const Graph g = parse_graph("vertex u; vertex v; edge e : u -> v * 2; edge f : v -> u");
    for (const char* s : {"e#0", "e#1", "~e#1", "f", "~f"}) CHECK(g.label(g.parse_edge(s)) == s);
    CHECK_THROWS_AS(g.parse_edge("e#2"), ParseError);
    CHECK_THROWS_AS(g.parse_edge("g"), ParseError);
  }

  TEST_CASE("subgraph relation") {
    CHECK(is_subgraph(fixture::edge(), fixture::two()));
    CHECK_FALSE(is_subgraph(fixture::two(), fixture::edge()));
    const Graph more = parse_graph("vertex u; vertex v; edge e : u -> v * 2");
    CHECK(is_subgraph(fixture::edge(), more));
    CHECK_FALSE(is_subgraph(more, fixture::edge()));
  }

  TEST_CASE("forest test") {
    CHECK(fixture::chain().is_forest());
    CHECK_FALSE(fixture::loop().is_forest());
    CHECK_FALSE(parse_graph("vertex u; vertex v; edge e : u -> v * 2").is_forest());
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) CHECK(oracle::random_tree(rng, 30).is_forest());
  }
}
