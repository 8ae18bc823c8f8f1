#include <doctest.h>

#include <random>

#include "mpcq/error.hpp"
#include "mpcq/exact_linalg.hpp"
#include "mpcq/lattice.hpp"
#include "support.hpp"

using namespace mpcq;

namespace {
Rational q(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("parse_rational canonicalizes and rejects bad input") {
  CHECK(q("6/4") == Rational(3, 2));
  CHECK(q("-3") == Rational(-3));
  CHECK(q("+2/4") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("2/-4"), Error);
  CHECK(to_string(q("10/4")) == "5/2");
  CHECK(to_string(q("-8/4")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("frac_part examples") {
  CHECK(frac_part(RatCovector{q("-3/2")}) == RatCovector{q("1/2")});
  CHECK(frac_part(RatCovector{0, 0}) == RatCovector{0, 0});
  CHECK(frac_part(RatCovector{q("5/4"), q("-1/4")}) == RatCovector{q("1/4"), q("3/4")});
}

TEST_CASE("is_integral examples") {
  CHECK(is_integral(RatCovector{0, 0}));
  CHECK_FALSE(is_integral(RatCovector{q("1/2"), q("1/2")}));
  CHECK(is_integral(RatCovector{-3, 7}));
}

TEST_CASE("unimodular_transform examples") {
  const auto id = UnimodularMatrix::identity(2);
  CHECK(unimodular_transform(RatCovector{1, 0}, id) == RatCovector{1, 0});
  const UnimodularMatrix b({{1, 1}, {0, 1}});
  const WeightVector w{1, 0};
  CHECK(unimodular_transform(w, b) == WeightVector{1, 1});
  for (const Generator& xi : {Generator{1, 0}, Generator{0, 1}, Generator{3, -2}}) {
    CHECK(pairing(unimodular_transform(w, b), transform_generator(xi, b)) == pairing(w, xi));
    const RatCovector v{q("1/3"), q("-5/2")};
    CHECK(pairing(unimodular_transform(v, b), transform_generator(xi, b)) == pairing(v, xi));
  }
  CHECK_THROWS_AS(UnimodularMatrix({{2, 0}, {0, 1}}), Error);
  try {
    UnimodularMatrix({{1, 2}, {3, 4}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonUnimodular);
  }
}

TEST_CASE("inverse of a unimodular matrix") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto b = testing::random_unimodular(rng, 3);
    const auto inv = b.inverse();
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += b(r, j) * inv(j, c);
        CHECK(s == (r == c ? 1 : 0));
      }
  }
}

TEST_CASE("frac_part properties on random covectors") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    RatCovector v{testing::random_rational(rng, -20, 20, 12), testing::random_rational(rng, -20, 20, 12)};
    const auto f = frac_part(v);
    CHECK(frac_part(f) == f);
    CHECK(is_integral(v - f));
    for (const auto& e : f) {
      CHECK(e >= 0);
      CHECK(e < 1);
    }
  }
}

TEST_CASE("integrality and pairings survive random unimodular changes") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 1 + i % 3;
    const auto b = testing::random_unimodular(rng, k);
    std::vector<Rational> e;
    for (std::size_t j = 0; j < k; ++j) e.push_back(testing::random_rational(rng, -6, 6, i % 2 ? 1 : 4));
    const RatCovector v(e);
    CHECK(is_integral(v) == is_integral(unimodular_transform(v, b)));
    Generator xi(k);
    for (auto& x : xi) x = static_cast<std::int64_t>(rng() % 7) - 3;
    CHECK(pairing(unimodular_transform(v, b), transform_generator(xi, b)) == pairing(v, xi));
  }
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rational a = testing::random_rational(rng, -1000, 1000, 997);
    const Rational b = testing::random_rational(rng, -1000, 1000, 991);
    CHECK((a + b) - b == a);
  }
  Rational big(Integer("123456789012345678901234567890"), Integer(7));
  big.canonicalize();
  CHECK((big + 1) - 1 == big);
}

TEST_CASE("exact linear algebra") {
  using linalg::rank;
  CHECK(rank({RatCovector{1, 2}, RatCovector{2, 4}}) == 1);
  CHECK(rank({RatCovector{1, 2}, RatCovector{0, 1}}) == 2);
  const auto x = linalg::solve({RatCovector{2, 1}, RatCovector{1, 3}}, RatCovector{3, 5});
  REQUIRE(x);
  CHECK(*x == RatCovector{Rational(4, 5), Rational(7, 5)});
  CHECK_FALSE(linalg::solve({RatCovector{1, 1}, RatCovector{2, 2}}, RatCovector{1, 3}));
  CHECK(linalg::primitive(RatCovector{Rational(2, 3), Rational(4, 3)}) == RatCovector{1, 2});
}
