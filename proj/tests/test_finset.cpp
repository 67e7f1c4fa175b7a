#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ohl/finset.hpp"

using namespace ohl;

namespace {

FinFn random_fn(std::mt19937& rng, std::size_t a, std::size_t b) {
  std::vector<std::size_t> t(a);
  for (auto& x : t) x = std::uniform_int_distribution<std::size_t>(0, b - 1)(rng);
  return FinFn(FinSet::atom(a), FinSet::atom(b), t);
}

}  // namespace

TEST_CASE("product codec") {
  FinSet x = product(FinSet::atom(2), FinSet::atom(3));
  CHECK(x.size() == 6);
  std::vector<std::size_t> t{1, 2};
  CHECK(x.encode(std::span<const std::size_t>(t)) == 5);
  CHECK(x.decode(5) == t);

  std::vector<FinSet> none;
  CHECK(product(none).size() == 1);
  CHECK(product(none).arity() == 0);
  CHECK(product(FinSet::atom(2), FinSet::atom(0)).size() == 0);
  CHECK(product(FinSet::atom(2), FinSet::unit()) == FinSet::atom(2));
}

TEST_CASE("codec roundtrip for every shape of size at most 64") {
  std::vector<std::vector<std::size_t>> shapes{{}, {1}, {64}, {2, 2, 2, 2, 2, 2}, {4, 4, 4}, {3, 1, 5}, {2, 0, 3}, {7, 9}};
  for (const auto& sh : shapes) {
    FinSet x(sh);
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto t = x.decode(i);
      CHECK(x.encode(std::span<const std::size_t>(t)) == i);
    }
  }
}

TEST_CASE("encode rejects out of range atoms") {
  FinSet x({2, 3});
  std::vector<std::size_t> bad{2, 0};
  CHECK_THROWS_AS(x.encode(std::span<const std::size_t>(bad)), Error);
}

TEST_CASE("compose_fn matches pointwise evaluation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t a = 1 + rng() % 4, b = 1 + rng() % 4, c = 1 + rng() % 4;
    FinFn f = random_fn(rng, a, b), g = random_fn(rng, b, c);
    FinFn h = compose_fn(f, g);
    for (std::size_t x = 0; x < a; ++x) CHECK(h(x) == g.table[f.table[x]]);
  }
  FinSet x = FinSet::atom(3);
  FinFn g = random_fn(rng, 3, 3);
  CHECK(compose_fn(identity_fn(x), g) == g);
  CHECK(compose_fn(g, identity_fn(x)) == g);
  CHECK(compose_fn(diagonal(x), reindex(product(x, x), {0})) == identity_fn(x));
  CHECK_THROWS_AS(compose_fn(random_fn(rng, 2, 3), random_fn(rng, 2, 2)), Error);
}

TEST_CASE("FinFn validates its table") {
  CHECK_THROWS_AS(FinFn(FinSet::atom(2), FinSet::atom(2), {0, 2}), Error);
  CHECK_THROWS_AS(FinFn(FinSet::atom(2), FinSet::atom(2), {0}), Error);
  FinFn empty(FinSet::atom(0), FinSet::atom(0), {});
  CHECK(empty.bijective());
}

TEST_CASE("reindex builds the standard X-power maps") {
  FinSet x = FinSet::atom(2);
  FinSet x3({2, 2, 2}), x2({2, 2});
  FinFn ddd = reindex(x3, {0, 1, 1, 2});
  CHECK(ddd.cod == FinSet({2, 2, 2, 2}));
  // (1,0,1) -> (1,0,0,1)
  CHECK(ddd(5) == 9);
  FinFn p13 = reindex(x3, {0, 2});
  CHECK(p13(5) == 3);
  FinFn sw = swap_fn(x, x);
  CHECK(sw(1) == 2);
  CHECK(sw.table == reindex(x2, {1, 0}).table);
  CHECK(bang(x3).cod.size() == 1);
}

TEST_CASE("swap on 2 x 3") {
  FinFn sw = swap_fn(FinSet::atom(2), FinSet::atom(3));
  // (0,2) is index 2 and lands on (2,0), index 4
  CHECK(sw(2) == 4);
  CHECK(inverse_fn(sw).has_value());
}

TEST_CASE("pullback examples") {
  FinSet two = FinSet::atom(2);
  SUBCASE("along identity") {
    FinFn m(FinSet::atom(3), two, {1, 0, 1});
    Pullback p = pullback(identity_fn(two), m);
    CHECK(p.apex.size() == 3);
    CHECK(p.p2.bijective());
  }
  SUBCASE("identity against a constant") {
    FinFn m(two, FinSet::atom(1), {0, 0});
    FinFn g(two, FinSet::atom(1), {0, 0});
    FinFn idg(two, two, {0, 1});
    FinFn c(two, two, {0, 0});
    Pullback p = pullback(idg, c);
    REQUIRE(p.apex.size() == 2);
    CHECK(p.apex.decoded(0) == std::vector<std::size_t>{0, 0});
    CHECK(p.apex.decoded(1) == std::vector<std::size_t>{0, 1});
    Pullback q = pullback(g, m);
    CHECK(q.apex.size() == 4);
  }
}

TEST_CASE("pullback universal property, brute force") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t s = 1 + rng() % 3, q = 1 + rng() % 3, y = 1 + rng() % 2;
    FinFn g = random_fn(rng, s, y), m = random_fn(rng, q, y);
    Pullback p = pullback(g, m);
    // oracle: enumerate all pairs
    std::size_t n = 0;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (g(i) == m(j)) {
          REQUIRE(n < p.apex.size());
          CHECK(p.p1(n) == i);
          CHECK(p.p2(n) == j);
          ++n;
        }
    CHECK(n == p.apex.size());
    // every cone from T of size <= 2 factors uniquely
    for (std::size_t t = 1; t <= 2; ++t) {
      std::size_t cones = 0;
      std::vector<std::size_t> a(t), b(t);
      std::size_t total = 1;
      for (std::size_t k = 0; k < t; ++k) total *= s * q;
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        bool ok = true;
        for (std::size_t k = 0; k < t; ++k) {
          a[k] = c % s; c /= s;
          b[k] = c % q; c /= q;
          if (g(a[k]) != m(b[k])) ok = false;
        }
        if (!ok) continue;
        ++cones;
        std::size_t factorizations = 0;
        std::size_t wt = 1;
        for (std::size_t k = 0; k < t; ++k) wt *= p.apex.size();
        for (std::size_t w = 0; w < wt; ++w) {
          std::size_t d = w;
          bool fits = true;
          for (std::size_t k = 0; k < t; ++k) {
            std::size_t e = d % p.apex.size(); d /= p.apex.size();
            if (p.p1(e) != a[k] || p.p2(e) != b[k]) fits = false;
          }
          if (fits) ++factorizations;
        }
        CHECK(factorizations == 1);
      }
      (void)cones;
    }
  }
}

TEST_CASE("pullback rejects different codomains") {
  CHECK_THROWS_AS(pullback(identity_fn(FinSet::atom(2)), identity_fn(FinSet::atom(3))), Error);
}

TEST_CASE("subset apex lookup") {
  FinSet amb({2, 2});
  SubsetApex s(amb, {0, 1, 1, 0, 1, 1});
  CHECK(s.size() == 3);
  std::vector<Atom> t{1, 0};
  CHECK(s.find(t) == std::optional<std::size_t>(1));
  std::vector<Atom> u{0, 0};
  CHECK_FALSE(s.find(u).has_value());
  CHECK(s.members() == std::vector<std::size_t>{1, 2, 3});
}
