#pragma once

// Exact rationals, covectors in t* (stored in units of Planck's constant h),
// integer weight vectors and unimodular changes of the integer basis of t.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpcq/error.hpp"

namespace mpcq {

using Integer = mpz_class;
using Rational = mpq_class;  // gmpxx keeps values canonical after every operation

/// Integer vector in the character lattice Z^k (isotropy weights).
using WeightVector = std::vector<std::int64_t>;
/// Integer vector in Z^k inside t (torus generators).
using Generator = std::vector<std::int64_t>;
/// Integer point of Z^{k*}, units of h.
using LatticePoint = std::vector<std::int64_t>;

/// Parses "p/q" or "p" (optional leading sign). Rejects zero denominators and
/// any trailing garbage with Errc::Parse.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// num/den in lowest terms; mpq_class's two-argument constructor does not reduce.
inline Rational ratio(std::int64_t num, std::int64_t den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
/// r - floor(r), in [0, 1).
Rational frac(const Rational& r);
std::int64_t to_int64(const Integer& z);

class RatCovector {
 public:
  RatCovector() = default;
  explicit RatCovector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  RatCovector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static RatCovector zero(std::size_t rank);
  static RatCovector from_integers(std::span<const std::int64_t> v);

  std::size_t rank() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_zero() const;

  RatCovector& operator+=(const RatCovector& o);
  RatCovector& operator-=(const RatCovector& o);
  RatCovector& operator*=(const Rational& s);

  friend RatCovector operator+(RatCovector a, const RatCovector& b) { return a += b; }
  friend RatCovector operator-(RatCovector a, const RatCovector& b) { return a -= b; }
  friend RatCovector operator*(const Rational& s, RatCovector a) { return a *= s; }
  friend RatCovector operator-(RatCovector a) { return a *= Rational(-1); }
  friend bool operator==(const RatCovector& a, const RatCovector& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const RatCovector& a, const RatCovector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Rational> entries_;
};

/// "(a, b, ...)" for rank >= 2, the bare entry for rank 1.
std::string to_string(const RatCovector& v);
std::string to_string(std::span<const std::int64_t> v);

/// Canonical representative of v mod Z^{k*}: every entry in [0, 1).
RatCovector frac_part(const RatCovector& v);
bool is_integral(const RatCovector& v);
/// Integral entries as int64; throws Errc::Schema if some entry is fractional.
LatticePoint to_lattice_point(const RatCovector& v);

/// <v, xi>; throws Errc::RankMismatch on differing lengths.
Rational pairing(const RatCovector& v, std::span<const std::int64_t> xi);
std::int64_t pairing(std::span<const std::int64_t> w, std::span<const std::int64_t> xi);

/// k x k integer matrix with determinant +-1.
///
/// Acts on covectors as row vectors multiplied on the right (v -> v B) and on
/// generators xi in t by the inverse (xi -> B^{-1} xi), so that every pairing
/// <v, xi> is preserved and the lattices Z^k, Z^{k*} map onto themselves.
class UnimodularMatrix {
 public:
  /// Throws Errc::NonUnimodular unless square with |det| = 1.
  explicit UnimodularMatrix(std::vector<std::vector<std::int64_t>> rows);
  static UnimodularMatrix identity(std::size_t k);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }
  int determinant() const noexcept { return det_; }
  UnimodularMatrix inverse() const;

 private:
  UnimodularMatrix(std::vector<std::vector<std::int64_t>> rows, int det) : rows_(std::move(rows)), det_(det) {}
  std::vector<std::vector<std::int64_t>> rows_;
  int det_ = 1;
};

/// Exact integer determinant (Bareiss elimination).
Integer integer_determinant(const std::vector<std::vector<std::int64_t>>& rows);

RatCovector unimodular_transform(const RatCovector& v, const UnimodularMatrix& b);
WeightVector unimodular_transform(std::span<const std::int64_t> w, const UnimodularMatrix& b);
/// xi -> B^{-1} xi.
Generator transform_generator(std::span<const std::int64_t> xi, const UnimodularMatrix& b);

}  // namespace mpcq
