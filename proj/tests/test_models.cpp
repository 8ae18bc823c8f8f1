#include <doctest.h>

#include <map>
#include <random>

#include "mpcq/equivariance.hpp"
#include "mpcq/error.hpp"
#include "mpcq/models.hpp"
#include "mpcq/spectrum.hpp"
#include "support.hpp"

using namespace mpcq;

namespace {

Rational q(const char* s) { return parse_rational(s); }

}  // namespace

TEST_CASE("oscillator_t1 examples") {
  const auto s3 = oscillator_t1(3, true);
  CHECK(s3.rank == 1);
  CHECK(s3.dim == 3);
  CHECK(s3.fixed_points[0].momentum == RatCovector{q("3/2")});
  CHECK(defect(s3.fixed_points[0]) == RatCovector{0});
  CHECK(s3.mpc_prequantizable.value);

  CHECK(defect(oscillator_t1(2, false).fixed_points[0]) == RatCovector{0});

  const auto s1 = oscillator_t1(1, true);
  const Window w{{{-5, 5}}};
  const auto levels = quantized_levels(*s1.polyhedron, w);
  REQUIRE(levels.size() == 6);
  for (const auto& l : levels) {
    const std::int64_t big_n = -l.point[0];
    CHECK(oscillator_energies(s1, RatCovector::from_integers(l.point)) ==
          std::vector<Rational>{Rational(static_cast<long>(big_n)) + Rational(1, 2)});
  }
  CHECK_THROWS_AS(oscillator_t1(0, true), Error);
}

TEST_CASE("oscillator_t1 spectrum is N + n/2 with N > -n/2") {
  for (int n = 1; n <= 5; ++n) {
    const auto s = oscillator_t1(n, true);
    const Window w{{{-20, 20}}};
    for (const auto& l : quantized_levels(*s.polyhedron, w)) {
      const Rational e = oscillator_energies(s, RatCovector::from_integers(l.point))[0];
      const Rational big_n = e - ratio(n, 2);
      CHECK(big_n.get_den() == 1);
      CHECK(big_n > ratio(-n, 2));
      CHECK(big_n == Rational(static_cast<long>(-l.point[0])));
    }
  }
}

TEST_CASE("oscillator_tn examples") {
  const auto s2 = oscillator_tn(2);
  CHECK(s2.fixed_points[0].momentum == RatCovector{q("1/2"), q("1/2")});
  CHECK(s2.polyhedron->rays().size() == 2);
  const Window w{{{-2, 2}, {-2, 2}}};
  const auto levels = quantized_levels(*s2.polyhedron, w);
  CHECK(levels.size() == 9);
  for (const auto& l : levels) {
    CHECK(l.point[0] <= 0);
    CHECK(l.point[1] <= 0);
  }

  CHECK(defect(oscillator_tn(1).fixed_points[0]) == RatCovector{0});

  // Summed energies reproduce N + 3/2 with multiplicity (N+1)(N+2)/2.
  const auto s3 = oscillator_tn(3);
  const Window w3{{{-6, 0}, {-6, 0}, {-6, 0}}};
  std::map<Rational, int> multiplicity;
  for (const auto& l : quantized_levels(*s3.polyhedron, w3)) {
    Rational total = 0;
    for (const auto& e : oscillator_energies(s3, RatCovector::from_integers(l.point))) total += e;
    multiplicity[total]++;
  }
  for (int big_n = 0; big_n <= 6; ++big_n)
    CHECK(multiplicity[Rational(big_n) + Rational(3, 2)] == (big_n + 1) * (big_n + 2) / 2);
}

TEST_CASE("projective_space examples") {
  const auto cp = projective_space(ProjectiveSpec{2, 0, {{1, 0}, {0, 1}}, RatCovector{q("1/2"), q("1/2")}});
  CHECK(cp.fixed_points[0].momentum == RatCovector{q("1/2"), q("1/2")});
  CHECK(cp.fixed_points[1].momentum == RatCovector{-1, q("1/2")});
  CHECK(cp.fixed_points[2].momentum == RatCovector{q("1/2"), -1});
  CHECK(cp.fixed_points[1].weights == std::vector<WeightVector>{{-1, 0}, {-1, 1}});

  const auto zero_c = projective_space(ProjectiveSpec{2, 0, {{1, 0}, {0, 1}}, RatCovector{0, 0}});
  CHECK(solve_shift(zero_c) == RatCovector{q("1/2"), q("1/2")});

  try {
    projective_space(ProjectiveSpec{2, 0, {{2, 0}, {0, 1}}, std::nullopt});
    FAIL("expected NonUnimodular");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonUnimodular);
  }
}

TEST_CASE("projective vertex formulas hold for random bases") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto b = testing::random_unimodular(rng, 2);
    const auto k1 = RatCovector::from_integers(b.rows()[0]);
    const auto k2 = RatCovector::from_integers(b.rows()[1]);
    const RatCovector c = Rational(1, 2) * (k1 + k2);
    const auto cp = projective_space(ProjectiveSpec{2, 0, b.rows(), c});
    const Rational big_k = Rational(3, 2);
    CHECK(cp.fixed_points[0].momentum == c);
    CHECK(cp.fixed_points[1].momentum == c - big_k * k1);
    CHECK(cp.fixed_points[2].momentum == c - big_k * k2);
    CHECK(check_equivariance(cp).overall);
  }
}

TEST_CASE("every builder is equivariant after its solved shift") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : {oscillator_t1(n, false), oscillator_t1(n, true), oscillator_tn(n, false)}) {
      CHECK(check_equivariance(s.shifted(solve_shift(s))).overall);
    }
    for (std::int64_t big_n = -1; big_n <= 3; ++big_n) {
      if (2 * big_n + n + 1 <= 0) continue;
      auto spec = standard_projective(n, big_n);
      spec.constant = RatCovector::zero(static_cast<std::size_t>(n));
      const auto s = projective_space(spec);
      CHECK(check_equivariance(s.shifted(solve_shift(s))).overall);
    }
  }
}

TEST_CASE("projective mpc criterion") {
  CHECK(projective_mpc_criterion(2, q("3/2")));
  CHECK(projective_mpc_criterion(2, q("5/2")));
  CHECK_FALSE(projective_mpc_criterion(2, q("2")));
  CHECK(projective_mpc_criterion(1, q("1")));
  CHECK_FALSE(projective_mpc_criterion(1, q("1/2")));
  CHECK_FALSE(projective_mpc_criterion(2, q("-1/2")));
}

TEST_CASE("oscillator reduction feeds a prequantizable projective successor") {
  for (int n = 2; n <= 4; ++n) {
    const auto s = oscillator_t1(n, true);
    for (std::int64_t big_n = 0; big_n <= 2; ++big_n) {
      const auto r = reduction_report(s, RatCovector{Rational(static_cast<long>(-big_n))});
      REQUIRE(r.successor);
      CHECK(r.successor->dim == static_cast<std::size_t>(n - 1));
      CHECK(*r.successor->kahler_scale == Rational(static_cast<long>(big_n)) + ratio(n, 2));
      CHECK(r.successor->mpc_prequantizable.value);
      CHECK(check_equivariance(*r.successor).overall);
    }
  }
}
