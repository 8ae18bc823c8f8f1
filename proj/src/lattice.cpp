#include "mpcq/lattice.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace mpcq {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Parse: return "ParseError";
    case Errc::Schema: return "SchemaError";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NonUnimodular: return "NonUnimodular";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::StepTooCoarse: return "StepTooCoarse";
    case Errc::NotPrequantizable: return "NotPrequantizable";
    case Errc::NoFixedPoints: return "NoFixedPoints";
    case Errc::InconsistentDefects: return "InconsistentDefects";
    case Errc::RankUnsupported: return "RankUnsupported";
    case Errc::UnboundedNeedsWindow: return "UnboundedNeedsWindow";
    case Errc::Unbounded: return "Unbounded";
    case Errc::NoPolyhedron: return "NoPolyhedron";
    case Errc::NotQuantized: return "NotQuantized";
    case Errc::ActionNotFree: return "ActionNotFree";
    case Errc::NotOnLevelSet: return "NotOnLevelSet";
    case Errc::InvalidGenerator: return "InvalidGenerator";
    case Errc::UnsupportedModel: return "UnsupportedModel";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(Errc::Parse, "malformed rational \"" + std::string(text) + "\"");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(Errc::Parse, "zero denominator in \"" + std::string(text) + "\"");
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& r) {
  Rational out = r - Rational(floor_of(r));
  out.canonicalize();
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(Errc::Schema, "integer " + z.get_str() + " exceeds 64-bit range");
  return static_cast<std::int64_t>(z.get_si());
}

RatCovector RatCovector::zero(std::size_t rank) { return RatCovector(std::vector<Rational>(rank)); }

RatCovector RatCovector::from_integers(std::span<const std::int64_t> v) {
  std::vector<Rational> e;
  e.reserve(v.size());
  for (auto x : v) e.emplace_back(static_cast<long>(x));
  return RatCovector(std::move(e));
}

bool RatCovector::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

RatCovector& RatCovector::operator+=(const RatCovector& o) {
  if (o.rank() != rank()) throw Error(Errc::RankMismatch, "covector ranks differ");
  for (std::size_t i = 0; i < rank(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RatCovector& RatCovector::operator-=(const RatCovector& o) {
  if (o.rank() != rank()) throw Error(Errc::RankMismatch, "covector ranks differ");
  for (std::size_t i = 0; i < rank(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RatCovector& RatCovector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

std::string to_string(const RatCovector& v) {
  if (v.rank() == 1) return to_string(v[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string to_string(std::span<const std::int64_t> v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

RatCovector frac_part(const RatCovector& v) {
  std::vector<Rational> e;
  e.reserve(v.rank());
  for (const auto& x : v) e.push_back(frac(x));
  return RatCovector(std::move(e));
}

bool is_integral(const RatCovector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

LatticePoint to_lattice_point(const RatCovector& v) {
  LatticePoint p;
  p.reserve(v.rank());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw Error(Errc::Schema, "covector " + to_string(v) + " is not integral");
    p.push_back(to_int64(x.get_num()));
  }
  return p;
}

Rational pairing(const RatCovector& v, std::span<const std::int64_t> xi) {
  if (v.rank() != xi.size()) throw Error(Errc::RankMismatch, "pairing of covector and generator of different rank");
  Rational s = 0;
  for (std::size_t i = 0; i < xi.size(); ++i) s += v[i] * Rational(static_cast<long>(xi[i]));
  return s;
}

std::int64_t pairing(std::span<const std::int64_t> w, std::span<const std::int64_t> xi) {
  if (w.size() != xi.size()) throw Error(Errc::RankMismatch, "pairing of weight and generator of different rank");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * xi[i];
  return s;
}

Integer integer_determinant(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) throw Error(Errc::NonUnimodular, "matrix is not square");
    for (std::size_t j = 0; j < k; ++j) m[i][j] = static_cast<long>(rows[i][j]);
  }
  Integer sign = 1, prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t swap = p + 1;
      while (swap < k && m[swap][p] == 0) ++swap;
      if (swap == k) return 0;
      std::swap(m[p], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        Integer t = m[i][j] * m[p][p] - m[i][p] * m[p][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

UnimodularMatrix::UnimodularMatrix(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
  Integer d = integer_determinant(rows_);
  if (d != 1 && d != -1) throw Error(Errc::NonUnimodular, "determinant is " + d.get_str());
  det_ = static_cast<int>(d.get_si());
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t k) {
  std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) rows[i][i] = 1;
  return UnimodularMatrix(std::move(rows), 1);
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  // Adjugate over the determinant; exact because det = +-1.
  const std::size_t k = rank();
  std::vector<std::vector<std::int64_t>> inv(k, std::vector<std::int64_t>(k, 0));
  if (k == 1) {
    inv[0][0] = rows_[0][0];
    return UnimodularMatrix(std::move(inv), det_);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::vector<std::int64_t>> minor;
      for (std::size_t r = 0; r < k; ++r) {
        if (r == j) continue;
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < k; ++c)
          if (c != i) row.push_back(rows_[r][c]);
        minor.push_back(std::move(row));
      }
      Integer cof = integer_determinant(minor);
      if ((i + j) % 2) cof = -cof;
      inv[i][j] = to_int64(cof * det_);
    }
  }
  return UnimodularMatrix(std::move(inv), det_);
}

RatCovector unimodular_transform(const RatCovector& v, const UnimodularMatrix& b) {
  if (v.rank() != b.rank()) throw Error(Errc::RankMismatch, "covector rank differs from basis change");
  std::vector<Rational> out(v.rank());
  for (std::size_t c = 0; c < b.rank(); ++c)
    for (std::size_t r = 0; r < b.rank(); ++r) out[c] += v[r] * Rational(static_cast<long>(b(r, c)));
  return RatCovector(std::move(out));
}

WeightVector unimodular_transform(std::span<const std::int64_t> w, const UnimodularMatrix& b) {
  if (w.size() != b.rank()) throw Error(Errc::RankMismatch, "weight rank differs from basis change");
  WeightVector out(w.size(), 0);
  for (std::size_t c = 0; c < b.rank(); ++c)
    for (std::size_t r = 0; r < b.rank(); ++r) out[c] += w[r] * b(r, c);
  return out;
}

Generator transform_generator(std::span<const std::int64_t> xi, const UnimodularMatrix& b) {
  if (xi.size() != b.rank()) throw Error(Errc::RankMismatch, "generator rank differs from basis change");
  const UnimodularMatrix inv = b.inverse();
  Generator out(xi.size(), 0);
  for (std::size_t r = 0; r < inv.rank(); ++r)
    for (std::size_t c = 0; c < inv.rank(); ++c) out[r] += inv(r, c) * xi[c];
  return out;
}

}  // namespace mpcq
