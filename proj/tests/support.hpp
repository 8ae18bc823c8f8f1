#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "mpcq/lattice.hpp"
#include "mpcq/polyhedron.hpp"

namespace mpcq::testing {

// Random unimodular k×k matrix with entries in [-bound, bound], by rejection.
inline UnimodularMatrix random_unimodular(std::mt19937_64& rng, std::size_t k, std::int64_t bound = 5) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  for (;;) {
    std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(k));
    for (auto& r : rows)
      for (auto& e : r) e = d(rng);
    const Integer det = integer_determinant(rows);
    if (det == 1 || det == -1) return UnimodularMatrix(rows);
  }
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den = 7) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  const std::int64_t q = den(rng);
  std::uniform_int_distribution<std::int64_t> num(lo * q, hi * q);
  return ratio(num(rng), q);
}

// Independent oracle: signed area test for a point strictly inside a triangle.
inline int orient(const RatCovector& a, const RatCovector& b, const RatCovector& c) {
  const Rational s = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sgn(s);
}

inline bool strictly_inside_triangle(const RatCovector& a, const RatCovector& b, const RatCovector& c,
                                     const RatCovector& x) {
  const int o = orient(a, b, c);
  if (o == 0) return false;
  return orient(a, b, x) == o && orient(b, c, x) == o && orient(c, a, x) == o;
}

// Brute force over the integer bounding box of a triangle.
inline std::vector<LatticePoint> brute_force_triangle(const RatCovector& a, const RatCovector& b,
                                                      const RatCovector& c) {
  std::vector<LatticePoint> out;
  auto lo = [](const Rational& u, const Rational& v, const Rational& w) { return std::min({u, v, w}); };
  auto hi = [](const Rational& u, const Rational& v, const Rational& w) { return std::max({u, v, w}); };
  const auto x0 = to_int64(floor_of(lo(a[0], b[0], c[0]))), x1 = to_int64(ceil_of(hi(a[0], b[0], c[0])));
  const auto y0 = to_int64(floor_of(lo(a[1], b[1], c[1]))), y1 = to_int64(ceil_of(hi(a[1], b[1], c[1])));
  for (auto x = x0; x <= x1; ++x)
    for (auto y = y0; y <= y1; ++y)
      if (strictly_inside_triangle(a, b, c, RatCovector{Rational(x), Rational(y)})) out.push_back({x, y});
  return out;
}

}  // namespace mpcq::testing
