#include <doctest.h>

#include <random>
#include <vector>

#include "gca/kernels/bitops.hpp"
#include "gca/vertex_set.hpp"

using namespace gca::kernels;

namespace {

std::vector<const BitKernels*> variants() {
  std::vector<const BitKernels*> out{&scalar_kernels()};
  if (auto* k = avx2_kernels()) out.push_back(k);
  if (auto* k = neon_kernels()) out.push_back(k);
  return out;
}

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<Word> out(n);
  for (auto& w : out) {
    switch (density) {
      case 0: w = 0; break;
      case 1: w = rng() & rng() & rng(); break;
      default: w = rng(); break;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("every variant matches the scalar reference") {
    std::mt19937_64 rng(7);
    const BitKernels& ref = scalar_kernels();
    for (const BitKernels* k : variants()) {
      CAPTURE(k->name);
      for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 33, 64, 100}) {
        for (int density = 0; density < 3; ++density) {
          auto a = random_words(rng, n, density);
          auto b = random_words(rng, n, (density + 1) % 3);
          std::vector<Word> x(n), y(n);
          ref.and_words(x, a, b);
          k->and_words(y, a, b);
          CHECK(x == y);
          ref.or_words(x, a, b);
          k->or_words(y, a, b);
          CHECK(x == y);
          ref.xor_words(x, a, b);
          k->xor_words(y, a, b);
          CHECK(x == y);
          ref.andnot_words(x, a, b);
          k->andnot_words(y, a, b);
          CHECK(x == y);
          CHECK(ref.popcount(a) == k->popcount(a));
          CHECK(ref.any(a) == k->any(a));
          CHECK(ref.equal(a, b) == k->equal(a, b));
          CHECK(ref.equal(a, a) == k->equal(a, a));
          CHECK(ref.subset(a, b) == k->subset(a, b));
          std::vector<Word> sub(n);
          ref.and_words(sub, a, b);
          CHECK(k->subset(sub, a));
        }
      }
    }
  }

  TEST_CASE("aliasing destination") {
    std::mt19937_64 rng(11);
    for (const BitKernels* k : variants()) {
      auto a = random_words(rng, 13, 2);
      auto b = random_words(rng, 13, 2);
      auto expect = a;
      for (std::size_t i = 0; i < a.size(); ++i) expect[i] = a[i] & ~b[i];
      k->andnot_words(a, a, b);
      CHECK(a == expect);
    }
  }

  TEST_CASE("scalar popcount against bit loop") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
      auto a = random_words(rng, 9, 2);
      std::size_t count = 0;
      for (Word w : a)
        for (int i = 0; i < 64; ++i) count += (w >> i) & 1U;
      CHECK(scalar_kernels().popcount(a) == count);
    }
  }

  TEST_CASE("active kernels is one of the variants") {
    const BitKernels& k = active_kernels();
    bool found = false;
    for (const BitKernels* v : variants()) found = found || v == &k;
    CHECK(found);
  }
}

TEST_SUITE("vertex-set") {
  TEST_CASE("set algebra against std::vector<bool>") {
    std::mt19937_64 rng(5);
    for (std::size_t n : {1, 63, 64, 65, 200, 257}) {
      gca::VertexSet a(n), b(n);
      std::vector<bool> ra(n), rb(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        if (rng() % 3 == 0) { a.insert(i); ra[i] = true; }
        if (rng() % 2 == 0) { b.insert(i); rb[i] = true; }
      }
      const auto u = a | b, in = a & b, d = a - b, x = a ^ b;
      std::size_t ca = 0;
      bool sub = true;
      for (std::uint32_t i = 0; i < n; ++i) {
        CHECK(u.contains(i) == (ra[i] || rb[i]));
        CHECK(in.contains(i) == (ra[i] && rb[i]));
        CHECK(d.contains(i) == (ra[i] && !rb[i]));
        CHECK(x.contains(i) == (ra[i] != rb[i]));
        ca += ra[i];
        if (ra[i] && !rb[i]) sub = false;
      }
      CHECK(a.size() == ca);
      CHECK(a.subset_of(b) == sub);
      CHECK(in.subset_of(a));
      CHECK(gca::VertexSet::full(n).size() == n);
    }
  }

  TEST_CASE("mismatched universes are rejected") {
    gca::VertexSet a(3), b(4);
    CHECK_THROWS(a |= b);
    CHECK_THROWS(a.insert(3));
  }
}
