#include <doctest.h>

#include <random>

#include "gca/errors.hpp"
#include "gca/structure.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gca;

TEST_SUITE("structure") {
  TEST_CASE("cycle taxonomy") {
    const Graph loop = fixture::loop();
    auto cycles = find_cycles(loop);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].kind == CycleKind::Terminal);
    CHECK(cycles[0].path(loop) == Path::parse(loop, "a"));

    const Graph o2 = fixture::o2();
    cycles = find_cycles(o2);
    REQUIRE(cycles.size() == 2);
    for (const Cycle& c : cycles) {
      CHECK(c.kind == CycleKind::Returning);
      CHECK(c.exit);
    }

    const Graph trans = fixture::trans();
    cycles = find_cycles(trans);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].kind == CycleKind::Transitory);
    CHECK(cycle_kind_name(CycleKind::Transitory) == "transitory");

    const Graph inf = fixture::oinf();
    cycles = find_cycles(inf);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].omega_instances);
    CHECK(cycles[0].kind == CycleKind::Returning);
    CHECK(cycles[0].exit == inf.parse_edge("a#1").instance);

    const Graph par = parse_graph("vertex u; edge a : u -> u * 2");
    cycles = find_cycles(par);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].instance_count == 2);
    CHECK(cycles[0].kind == CycleKind::Returning);

    CHECK(find_cycles(fixture::chain()).empty());
    CHECK_THROWS_AS(find_cycles(o2, 1), ResourceLimitError);
  }

  TEST_CASE("named verdicts") {
    const StructureReport two = analyze(fixture::two());
    CHECK(two.af.holds);
    CHECK_FALSE(two.cofinal.holds);

    const StructureReport loop = analyze(fixture::loop());
    CHECK_FALSE(loop.af.holds);
    CHECK_FALSE(loop.locally_contractive.holds);
    CHECK_FALSE(loop.essentially_free.holds);
    CHECK_FALSE(loop.simple.holds);

    const StructureReport o2 = analyze(fixture::o2());
    CHECK_FALSE(o2.af.holds);
    CHECK(o2.locally_contractive.holds);
    CHECK(o2.cofinal.holds);
    CHECK(o2.essentially_free.holds);
    CHECK(o2.essentially_principal.holds);
    CHECK(o2.simple.holds);
    CHECK(o2.purely_infinite_simple.holds);

    const StructureReport edge = analyze(fixture::edge());
    CHECK_FALSE(edge.locally_contractive.holds);
    CHECK(edge.cofinal.holds);
    CHECK(edge.simple.holds);
    CHECK_FALSE(edge.purely_infinite_simple.holds);

    const StructureReport trans = analyze(fixture::trans());
    CHECK(trans.essentially_free.holds);
    CHECK_FALSE(trans.essentially_principal.holds);
    CHECK_FALSE(trans.essentially_principal.reason.empty());
  }

  TEST_CASE("verdicts agree with direct checks on random graphs") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 400; ++trial) {
      const Graph g = oracle::random_graph(rng, 7, 10, trial % 3 == 0);
      const StructureReport r = analyze(g);
      const auto types = oracle::cycle_types(g);
      const auto reach = oracle::closure(g);
      const VertexSet cyc = cyclic_vertices(g);
      bool every_vertex_sees_cycle = true;
      for (VertexId u : g.vertices()) {
        bool sees = false;
        for (auto c : cyc.members()) sees = sees || reach[u.value][c];
        every_vertex_sees_cycle = every_vertex_sees_cycle && sees;
      }
      CHECK(r.cycles.size() == oracle::simple_cycles(g).size());
      CHECK(r.af.holds == !types.any);
      CHECK(r.essentially_free.holds == !types.terminal);
      CHECK(r.essentially_principal.holds == (!types.terminal && !types.transitory));
      CHECK(r.cofinal.holds == oracle::cofinal(g));
      CHECK(r.simple.holds == (oracle::cofinal(g) && !types.terminal));
      CHECK(r.locally_contractive.holds == (!types.terminal && every_vertex_sees_cycle));
      CHECK(r.purely_infinite_simple.holds == (r.simple.holds && every_vertex_sees_cycle));
      // implications
      if (r.purely_infinite_simple.holds) CHECK(r.simple.holds);
      if (r.simple.holds) CHECK((r.cofinal.holds && r.essentially_free.holds));
      if (r.essentially_principal.holds) CHECK(r.essentially_free.holds);
      if (r.af.holds) CHECK(r.essentially_principal.holds);
    }
  }

  TEST_CASE("isotropy") {
    const Graph loop = fixture::loop();
    CHECK_FALSE(isotropy(BoundaryPoint::parse(fixture::edge(), "e")).nontrivial);
    const Isotropy a = isotropy(BoundaryPoint::parse(loop, "@a"));
    CHECK(a.nontrivial);
    CHECK(a.witness == Path::parse(loop, "a"));
    const Graph o2 = fixture::o2();
    const BoundaryPoint x = BoundaryPoint::parse(o2, "b@a");
    const Isotropy b = isotropy(x);
    CHECK(b.witness == Path::parse(o2, "b.a.~b"));
    CHECK(act(o2, *b.witness, x) == x);
  }

  TEST_CASE("free points") {
    const Graph trans = fixture::trans();
    FreePoint p = free_point_from(trans, trans.vertex("u"));
    REQUIRE(p.finite);
    CHECK(*p.finite == BoundaryPoint::parse(trans, "e"));
    const Graph edge = fixture::edge();
    p = free_point_from(edge, edge.vertex("u"));
    REQUIRE(p.finite);
    CHECK(*p.finite == BoundaryPoint::parse(edge, "e"));
    CHECK_THROWS_AS(free_point_from(fixture::loop(), VertexId{0}), DomainError);

    const Graph o2 = fixture::o2();
    p = free_point_from(o2, o2.vertex("u"));
    REQUIRE(p.aperiodic);
    const auto word = p.aperiodic->prefix(60);
    CHECK(word.size() == 60);
    // not eventually periodic with a short period over the sampled window
    for (std::size_t period = 1; period <= 8; ++period) {
      bool periodic = true;
      for (std::size_t i = 30; i + period < word.size(); ++i) periodic = periodic && word[i] == word[i + period];
      CHECK_FALSE(periodic);
    }
    CHECK_FALSE(p.aperiodic->describe(o2, 12).empty());
  }

  TEST_CASE("free points on random graphs without terminal cycles") {
    std::mt19937_64 rng(62);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 100; ++trial) {
      const Graph g = oracle::random_graph(rng, 6, 9, false);
      if (oracle::cycle_types(g).terminal) continue;
      ++checked;
      for (VertexId u : g.vertices()) {
        const FreePoint p = free_point_from(g, u);
        CHECK(p.finite.has_value() != p.aperiodic.has_value());
        if (p.finite) {
          CHECK(p.finite->origin() == u);
          CHECK(p.finite->is_directed());
          CHECK(g.kind(p.finite->terminus()) != VertexKind::Regular);
          CHECK_FALSE(isotropy(*p.finite).nontrivial);
        }
      }
    }
    CHECK(checked > 20);
  }

  TEST_CASE("Toeplitz ideal dimensions") {
    const Graph edge = fixture::edge();
    auto rep = toeplitz_ideal_report(edge, edge.empty_set());
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].vertex == edge.vertex("u"));
    CHECK(rep[0].count == 1u);
    const Graph chain = fixture::chain();
    rep = toeplitz_ideal_report(chain, chain.empty_set());
    REQUIRE(rep.size() == 2);
    CHECK(rep[1].count == 2u);
    CHECK(toeplitz_ideal_report(chain, chain.sigma()).empty());
    const Graph loop = fixture::loop();
    rep = toeplitz_ideal_report(loop, loop.empty_set());
    REQUIRE(rep.size() == 1);
    CHECK_FALSE(rep[0].count);
    CHECK_THROWS_AS(toeplitz_ideal_report(chain, chain.set_from_names({"w"})), DomainError);

    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = oracle::random_dag(rng, 7, 10);
      for (const auto& d : toeplitz_ideal_report(g, g.empty_set())) CHECK(d.count == oracle::paths_into(g, d.vertex));
      const Graph c = oracle::random_graph(rng, 6, 9, false);
      const auto reach = oracle::closure(c);
      const VertexSet cyc = cyclic_vertices(c);
      for (const auto& d : toeplitz_ideal_report(c, c.empty_set())) {
        bool fed = false;
        for (auto v : cyc.members()) fed = fed || reach[v][d.vertex.value];
        CHECK(d.count.has_value() == !fed);
      }
    }
  }
}
