#include <doctest.h>

#include <random>

#include "gca/errors.hpp"
#include "gca/path.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gca;

namespace {
bool reduced(const Path& p) {
  for (std::size_t i = 1; i < p.length(); ++i)
    if (p[i] == p[i - 1].inverse()) return false;
  return true;
}
}  // namespace

TEST_SUITE("path") {
  TEST_CASE("concatenation examples") {
    const Graph g = fixture::chain();
    const Path ab = Path::parse(g, "a.b");
    CHECK((ab * ab.inverse()) == Path::unit(g.vertex("u")));
    CHECK((Path::parse(g, "a") * Path::parse(g, "b")).format(g) == "a.b");
    CHECK((ab * Path::parse(g, "~b")).format(g) == "a");
    CHECK(ab.inverse().format(g) == "~b.~a");
    CHECK(Path::unit(g.vertex("u")).inverse() == Path::unit(g.vertex("u")));
    CHECK_THROWS_AS(Path::parse(g, "a") * Path::parse(g, "a"), DomainError);
  }

  TEST_CASE("directedness") {
    const Graph g = fixture::chain();
    CHECK(Path::parse(g, "a.b").is_directed());
    CHECK_FALSE(Path::parse(g, "~b.~a").is_directed());
    CHECK(Path::unit(g.vertex("u")).is_directed());
  }

  TEST_CASE("parse and format") {
    const Graph g = fixture::chain();
    CHECK(Path::parse(g, "v").is_unit());
    CHECK(Path::parse(g, "v:").origin() == g.vertex("v"));
    CHECK(Path::parse(g, "u: a.b").length() == 2);
    CHECK_THROWS_AS(Path::parse(g, "v: a"), ParseError);
    CHECK_THROWS_AS(Path::parse(g, "a.~a"), ParseError);
    CHECK_THROWS_AS(Path::parse(g, "a..b"), ParseError);
    CHECK_THROWS_AS(Path::parse(g, "b.a"), ParseError);
  }

  TEST_CASE("groupoid axioms on random words") {
    std::mt19937_64 rng(9);
    for (const Graph& g : {fixture::o2(), fixture::two(), fixture::trans(), fixture::oinf()}) {
      for (int t = 0; t < 500; ++t) {
        const VertexId v{static_cast<std::uint32_t>(rng() % g.vertex_count())};
        const Path p = oracle::random_walk(g, rng, v, 6);
        const Path q = oracle::random_walk(g, rng, p.terminus(), 6);
        const Path r = oracle::random_walk(g, rng, q.terminus(), 6);
        CHECK(((p * q) * r) == (p * (q * r)));
        CHECK((p * Path::unit(p.terminus())) == p);
        CHECK((Path::unit(p.origin()) * p) == p);
        CHECK((p * p.inverse()) == Path::unit(p.origin()));
        CHECK(p.inverse().inverse() == p);
        const Path pq = p * q;
        CHECK(reduced(pq));
        const std::size_t c = Path::cancellation_count(p, q);
        CHECK(pq.length() == p.length() + q.length() - 2 * c);
        CHECK(Path::parse(g, pq.format(g)) == pq);
        if (!pq.is_unit()) CHECK(Path::parse(g, g.vertex_name(pq.origin()) + ":" + pq.format(g)) == pq);
      }
    }
  }

  TEST_CASE("prefix and suffix") {
    const Graph g = fixture::chain();
    const Path ab = Path::parse(g, "a.b");
    CHECK(ab.prefix(g, 1).format(g) == "a");
    CHECK(ab.suffix_from(g, 1).format(g) == "b");
    CHECK(ab.prefix(g, 0) == Path::unit(g.vertex("u")));
    CHECK(ab.suffix_from(g, 2) == Path::unit(g.vertex("w")));
    CHECK((ab.prefix(g, 1) * ab.suffix_from(g, 1)) == ab);
  }

  TEST_CASE("shortlex order") {
    const Graph g = fixture::chain();
    CHECK(Path::unit(g.vertex("w")) < Path::parse(g, "a"));
    CHECK(Path::parse(g, "b") < Path::parse(g, "a.b"));
    CHECK(Path::unit(g.vertex("u")) < Path::unit(g.vertex("v")));
  }
}
