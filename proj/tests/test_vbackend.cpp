#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ohl/vbackend.hpp"

using namespace ohl;

namespace {

IntMatrix random_mat(std::mt19937& rng, const MatBackend& v, std::size_t r, std::size_t c) {
  std::vector<std::int64_t> d(r * c);
  for (auto& x : d) x = std::int64_t(rng() % 7);
  return v.from_rows(r, c, d);
}

FinFn random_fn(std::mt19937& rng, std::size_t a, std::size_t b) {
  std::vector<std::size_t> t(a);
  for (auto& x : t) x = rng() % b;
  return FinFn(FinSet::atom(a), FinSet::atom(b), t);
}

// Oracle: naive triple loop product reduced mod p.
IntMatrix naive_product(const IntMatrix& a, const IntMatrix& b, std::int64_t p) {
  IntMatrix c = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      std::int64_t s = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s % p;
    }
  return c;
}

}  // namespace

TEST_CASE("F_3 arithmetic") {
  MatBackend v(Semiring::field(3));
  IntMatrix two = v.from_rows(1, 1, {2});
  CHECK(v.compose(two, two)(0, 0) == 1);
  CHECK_THROWS_AS(Semiring::field(4), Error);
  CHECK_THROWS_AS(v.compose(v.id(2), v.id(3)), Error);
}

TEST_CASE("Boolean semiring saturates") {
  MatBackend v(Semiring::boolean());
  IntMatrix a = v.from_rows(1, 2, {1, 1});
  IntMatrix b = v.from_rows(2, 1, {1, 1});
  CHECK(v.compose(a, b)(0, 0) == 1);
}

TEST_CASE("matrix composition matches the naive product") {
  std::mt19937 rng(1);
  for (std::int64_t p : {2, 3, 5}) {
    MatBackend v(Semiring::field(p));
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t n = 1 + rng() % 4, k = 1 + rng() % 4, m = 1 + rng() % 4;
      IntMatrix a = random_mat(rng, v, n, k), b = random_mat(rng, v, k, m);
      CHECK(v.eq(v.compose(a, b), naive_product(a, b, p)));
    }
  }
}

TEST_CASE("braiding is symmetric and natural") {
  MatBackend v(Semiring::field(5));
  std::mt19937 rng(2);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m) {
      CHECK(v.is_id(v.compose(v.braiding(n, m), v.braiding(m, n))));
      IntMatrix f = random_mat(rng, v, n, 1 + rng() % 3), g = random_mat(rng, v, m, 1 + rng() % 3);
      std::size_t n2 = std::size_t(f.cols()), m2 = std::size_t(g.cols());
      CHECK(v.eq(v.compose(v.braiding(n, m), v.tensor(g, f)), v.compose(v.tensor(f, g), v.braiding(n2, m2))));
    }
  // e_i (x) e_j |-> e_j (x) e_i
  IntMatrix s = v.braiding(2, 3);
  CHECK(s(0 * 3 + 2, 2 * 2 + 0) == 1);
  CHECK(v.is_id(v.braiding(1, 2)));
}

TEST_CASE("interchange law") {
  MatBackend v(Semiring::field(3));
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3, d = 1 + rng() % 3, e = 1 + rng() % 3,
                f = 1 + rng() % 3;
    IntMatrix x = random_mat(rng, v, a, b), x2 = random_mat(rng, v, b, c);
    IntMatrix y = random_mat(rng, v, d, e), y2 = random_mat(rng, v, e, f);
    CHECK(v.eq(v.tensor(v.compose(x, x2), v.compose(y, y2)), v.compose(v.tensor(x, y), v.tensor(x2, y2))));
  }
  FinSetBackend s;
  for (int trial = 0; trial < 50; ++trial) {
    FinFn f = random_fn(rng, 2, 3), f2 = random_fn(rng, 3, 2), g = random_fn(rng, 3, 3), g2 = random_fn(rng, 3, 1);
    CHECK(s.eq(s.tensor(s.compose(f, f2), s.compose(g, g2)), s.compose(s.tensor(f, g), s.tensor(f2, g2))));
  }
}

TEST_CASE("finset tensor is the componentwise product") {
  FinSetBackend s;
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    FinFn f = random_fn(rng, 3, 2), g = random_fn(rng, 2, 4);
    FinFn t = s.tensor(f, g);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(t(i * 2 + j) == f(i) * 4 + g(j));
  }
  FinSet a = FinSet::atom(2), b = FinSet::atom(3);
  CHECK(s.is_id(s.compose(s.braiding(a, b), s.braiding(b, a))));
}

TEST_CASE("left Kan extension along a function") {
  MatBackend v(Semiring::field(2));
  FinFn g(FinSet::atom(2), FinSet::atom(1), {0, 0});
  auto k = left_kan_along_function(v, g, {1, 2});
  CHECK(k.objs == std::vector<std::size_t>{3});
  CHECK(k.injections[1].rows() == 2);
  CHECK(k.injections[1].cols() == 3);
  CHECK(k.injections[1](0, 1) == 1);

  FinFn id = identity_fn(FinSet::atom(3));
  CHECK(left_kan_along_function(v, id, {4, 0, 2}).objs == std::vector<std::size_t>{4, 0, 2});

  FinFn miss(FinSet::atom(1), FinSet::atom(2), {1});
  CHECK(left_kan_along_function(v, miss, {3}).objs == std::vector<std::size_t>{0, 3});

  FinSetBackend s;
  auto ks = left_kan_along_function(s, g, {FinSet::atom(2), FinSet::atom(3)});
  CHECK(ks.objs[0].size() == 5);
  CHECK(ks.injections[1].table == std::vector<std::size_t>{2, 3, 4});

  TrivialBackend t;
  CHECK_THROWS_AS(left_kan_along_function(t, g, {Unit{}, Unit{}}), Error);
  CHECK_THROWS_AS(left_kan_along_function(v, g, {1}), Error);
}
