#include "mpcq/exact_linalg.hpp"

namespace mpcq::linalg {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatCovector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational inv = 1 / m[row][col];
    m[row] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].rank(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational dot(const RatCovector& a, const RatCovector& b) {
  if (a.rank() != b.rank()) throw Error(Errc::RankMismatch, "dot product of vectors of different rank");
  Rational s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t rank(std::vector<RatCovector> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().rank()).size();
}

std::optional<RatCovector> solve(std::vector<RatCovector> rows, RatCovector rhs) {
  const std::size_t n = rows.size();
  if (rhs.rank() != n) throw Error(Errc::RankMismatch, "right-hand side length differs from row count");
  std::vector<RatCovector> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].rank() != n) throw Error(Errc::RankMismatch, "solve expects a square system");
    std::vector<Rational> e(rows[i].begin(), rows[i].end());
    e.push_back(rhs[i]);
    aug.emplace_back(std::move(e));
  }
  auto piv = rref(aug, n);
  if (piv.size() != n) return std::nullopt;
  RatCovector x = RatCovector::zero(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::vector<RatCovector> null_space(std::vector<RatCovector> rows, std::size_t dim) {
  auto piv = rref(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RatCovector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RatCovector d = RatCovector::zero(dim);
    d[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) d[piv[r]] = -rows[r][free];
    basis.push_back(std::move(d));
  }
  return basis;
}

RatCovector primitive(const RatCovector& v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Rational> out;
  out.reserve(v.rank());
  for (const auto& x : v) {
    Rational s = x * Rational(l);
    out.push_back(s);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (g == 0) return v;
  for (auto& x : out) x /= Rational(g);
  return RatCovector(std::move(out));
}

}  // namespace mpcq::linalg
