#include <doctest.h>

#include <random>

#include "mpcq/equivariance.hpp"
#include "mpcq/error.hpp"
#include "mpcq/models.hpp"
#include "support.hpp"

using namespace mpcq;

namespace {

Rational q(const char* s) { return parse_rational(s); }

FixedPointDatum point(std::vector<WeightVector> w, RatCovector m) { return {"z", std::move(w), std::move(m)}; }

SystemData cp2(std::vector<WeightVector> basis, std::int64_t big_n, std::optional<RatCovector> c) {
  ProjectiveSpec spec{2, big_n, std::move(basis), std::move(c)};
  return projective_space(spec);
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::Parse;
}

}  // namespace

TEST_CASE("half_sum examples") {
  CHECK(half_sum(point({{1}, {1}, {1}}, RatCovector{0})) == RatCovector{q("3/2")});
  CHECK(half_sum(point({{-1, 0}, {-1, 1}}, RatCovector{0, 0})) == RatCovector{-1, q("1/2")});
  CHECK(half_sum(point({{0, 0}}, RatCovector{0, 0})) == RatCovector{0, 0});
}

TEST_CASE("defect examples") {
  CHECK(defect(oscillator_t1(3, false).fixed_points[0]) == RatCovector{q("1/2")});
  CHECK(defect(oscillator_t1(2, false).fixed_points[0]) == RatCovector{0});
  CHECK(defect(point({{1, 0}, {0, 1}}, RatCovector{0, 0})) == RatCovector{q("1/2"), q("1/2")});
}

TEST_CASE("check_equivariance examples") {
  const auto cp = cp2({{1, 0}, {0, 1}}, 0, RatCovector{q("1/2"), q("1/2")});
  const auto r = check_equivariance(cp);
  CHECK(r.overall);
  REQUIRE(r.points.size() == 3);
  for (const auto& p : r.points) CHECK(p.defect == RatCovector{0, 0});

  CHECK_FALSE(check_equivariance(oscillator_t1(3, false)).overall);

  auto osc = oscillator_t1(3, false);
  osc.fixed_points[0].momentum = RatCovector{q("3/2")};
  CHECK(check_equivariance(osc).overall);

  auto flagless = oscillator_t1(2, true);
  flagless.mpc_prequantizable.value = false;
  CHECK(code_of([&] { check_equivariance(flagless); }) == Errc::NotPrequantizable);

  auto empty = oscillator_t1(2, true);
  empty.fixed_points.clear();
  CHECK(code_of([&] { check_equivariance(empty); }) == Errc::NoFixedPoints);
}

TEST_CASE("solve_shift examples") {
  CHECK(solve_shift(cp2({{1, 0}, {0, 1}}, 0, RatCovector{0, 0})) == RatCovector{q("1/2"), q("1/2")});
  CHECK(solve_shift(oscillator_t1(4, false)) == RatCovector{0});
  CHECK(solve_shift(oscillator_t1(3, false)) == RatCovector{q("1/2")});

  SystemData fab = oscillator_t1(1, false);
  fab.model = "explicit";
  fab.polyhedron.reset();
  fab.fixed_points = {point({{1}}, RatCovector{0}), point({{1}}, RatCovector{q("1/4")})};
  CHECK(code_of([&] { solve_shift(fab); }) == Errc::InconsistentDefects);
}

TEST_CASE("oscillator parity of the unshifted defect") {
  for (int n = 1; n <= 10; ++n) {
    const auto d = defect(oscillator_t1(n, false).fixed_points[0]);
    CHECK(d == RatCovector{n % 2 == 0 ? Rational(0) : Rational(1, 2)});
  }
}

TEST_CASE("integral shifts leave defects unchanged") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto b = testing::random_unimodular(rng, 2);
    const auto s = cp2(b.rows(), static_cast<std::int64_t>(rng() % 4) - 1, RatCovector{0, 0});
    const RatCovector m{static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5};
    const auto t = s.shifted(m);
    for (std::size_t j = 0; j < s.fixed_points.size(); ++j)
      CHECK(defect(s.fixed_points[j]) == defect(t.fixed_points[j]));
  }
}

TEST_CASE("defects lie in [0,1)") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const RatCovector m{testing::random_rational(rng, -5, 5, 6), testing::random_rational(rng, -5, 5, 6)};
    const auto d = defect(point({{1, 2}, {-3, 1}}, m));
    for (const auto& e : d) {
      CHECK(e >= 0);
      CHECK(e < 1);
    }
  }
}

TEST_CASE("CP2 builder is equivariant after the solved shift for random bases") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto b = testing::random_unimodular(rng, 2);
    for (std::int64_t big_n : {-1, 0, 1, 2, 7}) {
      const auto s = cp2(b.rows(), big_n, RatCovector{0, 0});
      const auto shifted = s.shifted(solve_shift(s));
      for (const auto& z : shifted.fixed_points) CHECK(defect(z) == RatCovector{0, 0});
      // The classical constant C = (k^1 + k^2)/2 also works.
      const RatCovector half_basis =
          Rational(1, 2) * (RatCovector::from_integers(b.rows()[0]) + RatCovector::from_integers(b.rows()[1]));
      CHECK(check_equivariance(cp2(b.rows(), big_n, half_basis)).overall);
    }
  }
}

TEST_CASE("equivariance and shifts are basis independent") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    const auto base = cp2({{1, 0}, {0, 1}}, static_cast<std::int64_t>(rng() % 4) - 1,
                          RatCovector{testing::random_rational(rng, -2, 2, 4), testing::random_rational(rng, -2, 2, 4)});
    const auto b = testing::random_unimodular(rng, 2);
    const auto moved = base.transformed(b);
    CHECK(check_equivariance(base).overall == check_equivariance(moved).overall);
    bool consistent = true;
    RatCovector c0;
    try {
      c0 = solve_shift(base);
    } catch (const Error&) {
      consistent = false;
    }
    if (!consistent) {
      CHECK_THROWS_AS(solve_shift(moved), Error);
      continue;
    }
    CHECK(is_integral(unimodular_transform(c0, b) - solve_shift(moved)));
  }
}
