#include <doctest.h>

#include <random>

#include "gca/errors.hpp"
#include "gca/fock.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gca;

namespace {

PathBasis ck(const Graph& g) { return PathBasis(g, BasisOptions{RepMode::CuntzKrieger, {}, {}, 3, 200000}); }
PathBasis toeplitz(const Graph& g, VertexSet s = {}, std::optional<std::size_t> depth = {}) {
  return PathBasis(g, BasisOptions{RepMode::Toeplitz, std::move(s), depth, 3, 200000});
}

const RelationResult& relation(const RelationReport& r, const std::string& name) {
  for (const auto& x : r.relations)
    if (x.name == name) return x;
  throw std::out_of_range(name);
}

std::vector<std::string> formatted(const PathBasis& b) {
  std::vector<std::string> out;
  for (const Path& p : b.paths()) out.push_back(p.format(b.graph()));
  return out;
}

}  // namespace

TEST_SUITE("fock") {
  TEST_CASE("bases") {
    const Graph e = fixture::edge();
    const PathBasis t = toeplitz(e);
    CHECK(t.exact());
    CHECK(formatted(t) == std::vector<std::string>{"u", "v", "e"});
    const PathBasis c = ck(e);
    CHECK(c.exact());
    CHECK(formatted(c) == std::vector<std::string>{"v", "e"});
    const Graph loop = fixture::loop();
    const PathBasis l = toeplitz(loop, {}, 3);
    CHECK_FALSE(l.exact());
    CHECK(formatted(l) == std::vector<std::string>{"u", "a", "a.a", "a.a.a"});
    CHECK(l.interior(2));
    CHECK_FALSE(l.interior(3));
    CHECK(longest_path(fixture::chain()) == 2u);
    CHECK_FALSE(longest_path(loop));
    const Graph inf = parse_graph("vertex u; vertex v; edge e : u -> v * omega");
    CHECK_FALSE(toeplitz(inf).exact());
    CHECK_THROWS_AS(toeplitz(e, fixture::two().empty_set()), DomainError);
  }

  TEST_CASE("generators of the edge graph") {
    const Graph e = fixture::edge();
    const PathBasis c = ck(e);
    const Generators gen = generator_matrices(c);
    const SparseOperator& s = gen.edge.at(e.parse_edge("e").instance);
    const std::size_t iv = *c.index_of(Path::parse(e, "v")), ie = *c.index_of(Path::parse(e, "e"));
    CHECK(s.entries().size() == 1);
    CHECK(s.get(ie, iv) == 1);
    CHECK(gen.vertex.at(e.vertex("u")).get(ie, ie) == 1);
    CHECK(gen.vertex.at(e.vertex("v")).get(iv, iv) == 1);
    CHECK(s.adjoint() * s == gen.vertex.at(e.vertex("v")));
  }

  TEST_CASE("relations") {
    for (const Graph& g : {fixture::edge(), fixture::two(), fixture::chain(),
                           parse_graph("vertex u; vertex v; edge e : u -> v * 2")}) {
      const RelationReport r = verify_relations(ck(g), RelationSet::CuntzKrieger);
      CHECK(r.exact);
      CHECK(r.all_hold());
      CHECK(relation(r, "range-equality-at-regular-vertices").holds);
    }
    const Graph e = fixture::edge();
    const RelationReport t = verify_relations(toeplitz(e), RelationSet::Toeplitz);
    CHECK(t.all_hold());
    CHECK(t.strict_vertices == std::vector<VertexId>{e.vertex("u")});
    const RelationReport ts = verify_relations(toeplitz(e, e.sigma()), RelationSet::ToeplitzWithS);
    CHECK(ts.all_hold());
    CHECK(ts.strict_vertices.empty());
    // CK relations fail on the Toeplitz representation: the range defect at u.
    const RelationReport wrong = verify_relations(toeplitz(e), RelationSet::CuntzKrieger);
    CHECK_FALSE(relation(wrong, "range-equality-at-regular-vertices").holds);
    CHECK(relation(wrong, "range-equality-at-regular-vertices").witness == "u");
  }

  TEST_CASE("relations on truncated bases") {
    for (const Graph& g : {fixture::loop(), fixture::o2(), fixture::trans(), fixture::oinf()})
      for (std::size_t d = 2; d <= 5; ++d) {
        const PathBasis b = toeplitz(g, {}, d);
        CHECK_FALSE(b.exact());
        const RelationReport r = verify_relations(b, RelationSet::Toeplitz);
        CHECK(r.all_hold());
        CHECK_FALSE(r.scope.empty());
      }
    const Graph inf = fixture::oinf();
    const RelationReport r = verify_relations(PathBasis(inf, BasisOptions{RepMode::CuntzKrieger, {}, 3, 3, 200000}),
                                              RelationSet::CuntzKrieger);
    CHECK(r.all_hold());
  }

  TEST_CASE("named dimensions") {
    CHECK(algebra_dimension(ck(fixture::edge())) == 4);
    CHECK(algebra_dimension(toeplitz(fixture::edge())) == 5);
    CHECK(algebra_dimension(ck(fixture::two())) == 8);
    CHECK_THROWS_AS(algebra_dimension(toeplitz(fixture::loop(), {}, 3)), DomainError);
  }

  TEST_CASE("dimension bookkeeping on random acyclic graphs") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_dag(rng, 5, 6);
      VertexSet s = g.empty_set();
      for (auto v : g.sigma().members())
        if (rng() % 2) s.insert(v);
      std::uint64_t sinks = 0, defect = 0;
      for (VertexId v : g.vertices()) {
        const std::uint64_t n = oracle::paths_into(g, v);
        if (g.kind(v) == VertexKind::Sink) sinks += n * n;
        else if (!s.contains(v.value)) defect += n * n;
      }
      const PathBasis c = ck(g), t = toeplitz(g, s);
      REQUIRE(c.exact());
      CHECK(algebra_dimension(c) == sinks);
      CHECK(algebra_dimension(t) == sinks + defect);
      CHECK(verify_relations(c, RelationSet::CuntzKrieger).all_hold());
      CHECK(verify_relations(t, RelationSet::ToeplitzWithS).all_hold());
    }
  }

  TEST_CASE("word identities") {
    const Graph g = fixture::chain();
    const PathBasis b = toeplitz(g);
    const std::vector<Path> paths = b.paths();
    for (const Path& p : paths)
      for (const Path& q : paths) {
        if (p.terminus() == q.terminus())
          CHECK(word_operator(b, p, q).adjoint() == word_operator(b, q, p));
        // S_p^* S_q vanishes when neither extends the other
        const bool p_ext = q.length() <= p.length() && p.prefix(g, q.length()) == q;
        const bool q_ext = p.length() <= q.length() && q.prefix(g, p.length()) == p;
        if (!p_ext && !q_ext)
          CHECK((word_operator(b, p, Path::unit(p.terminus())).adjoint() *
                 word_operator(b, q, Path::unit(q.terminus()))).is_zero());
      }
    // theta_{p.f} <= theta_p: theta_p - theta_{pf} is a projection
    const Path a = Path::parse(g, "a"), ab = Path::parse(g, "a.b");
    const SparseOperator d = word_operator(b, a, a) - word_operator(b, ab, ab);
    CHECK(d * d == d);
    CHECK(d.adjoint() == d);
  }

  TEST_CASE("sparse rank") {
    std::vector<std::map<std::size_t, Rational>> v{{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{2, Rational(1, 3)}}};
    CHECK(sparse_rank(v) == 2);
    v.push_back({{0, 1}, {1, 1}});
    CHECK(sparse_rank(v) == 3);
    CHECK(sparse_rank({}) == 0);
  }
}
