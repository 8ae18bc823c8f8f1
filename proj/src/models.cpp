#include "mpcq/models.hpp"

#include "mpcq/equivariance.hpp"
#include "mpcq/exact_linalg.hpp"
#include "mpcq/spectrum.hpp"

namespace mpcq {

namespace {

void require_positive(int n) {
  if (n < 1) throw Error(Errc::Schema, "model dimension must be at least 1");
}

const char* kContractible = "C^n is contractible, so a metaplectic-c prequantization exists";

}  // namespace

SystemData oscillator_t1(int n, bool shifted) {
  require_positive(n);
  SystemData s;
  s.model = "oscillator_t1";
  s.rank = 1;
  s.dim = static_cast<std::size_t>(n);
  FixedPointDatum origin;
  origin.name = "origin";
  origin.weights.assign(s.dim, WeightVector{1});
  origin.momentum = RatCovector{shifted ? ratio(n, 2) : Rational(0)};
  s.fixed_points.push_back(std::move(origin));
  s.rays.push_back(RatCovector{-1});
  s.mpc_prequantizable = Flag{true, kContractible};
  s.action_free_on_regular_levels = Flag{true, "diagonal circle acts freely away from the origin"};
  s.polyhedron = hull_from_fixed_points(s);
  return s;
}

SystemData oscillator_tn(int n, bool shifted) {
  require_positive(n);
  SystemData s;
  s.model = "oscillator_tn";
  s.rank = s.dim = static_cast<std::size_t>(n);
  FixedPointDatum origin;
  origin.name = "origin";
  origin.momentum = RatCovector::zero(s.rank);
  std::vector<Halfspace> facets;
  for (std::size_t j = 0; j < s.rank; ++j) {
    WeightVector e(s.rank, 0);
    e[j] = 1;
    origin.weights.push_back(e);
    if (shifted) origin.momentum[j] = Rational(1, 2);
    RatCovector ray = RatCovector::zero(s.rank);
    ray[j] = -1;
    s.rays.push_back(ray);
    facets.push_back(Halfspace{RatCovector::from_integers(e), origin.momentum[j]});
  }
  s.fixed_points.push_back(origin);
  s.mpc_prequantizable = Flag{true, kContractible};
  s.action_free_on_regular_levels = Flag{true, "T^n acts freely where every coordinate is nonzero"};
  if (n <= 2)
    s.polyhedron = hull_from_fixed_points(s);
  else
    s.polyhedron = MomentumPolyhedron::from_both(s.rank, {origin.momentum}, s.rays, std::move(facets));
  return s;
}

SystemData build_oscillator(const OscillatorSpec& spec) {
  return spec.variant == OscillatorVariant::T1 ? oscillator_t1(spec.n, spec.shifted)
                                               : oscillator_tn(spec.n, spec.shifted);
}

ProjectiveSpec standard_projective(int n, std::int64_t big_n) {
  require_positive(n);
  ProjectiveSpec spec;
  spec.n = n;
  spec.big_n = big_n;
  for (int j = 0; j < n; ++j) {
    WeightVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    spec.weight_basis.push_back(e);
  }
  return spec;
}

bool projective_mpc_criterion(int n, const Rational& k_over_hbar) {
  if (k_over_hbar <= 0) return false;
  return Rational(k_over_hbar - ratio(n + 1, 2)).get_den() == 1;
}

namespace {

// Facets of the simplex with the given n+1 affinely independent vertices.
std::vector<Halfspace> simplex_facets(const std::vector<RatCovector>& verts) {
  const std::size_t dim = verts.front().rank();
  std::vector<Halfspace> out;
  for (std::size_t j = 0; j < verts.size(); ++j) {
    std::vector<RatCovector> others;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (i != j) others.push_back(verts[i]);
    std::vector<RatCovector> rows;
    for (std::size_t i = 1; i < others.size(); ++i) rows.push_back(others[i] - others[0]);
    auto ns = linalg::null_space(rows, dim);
    RatCovector a = linalg::primitive(ns.at(0));
    Rational off = linalg::dot(a, others[0]);
    if (linalg::dot(a, verts[j]) > off) {
      a = -a;
      off = -off;
    }
    out.push_back(Halfspace{a, off});
  }
  return out;
}

}  // namespace

SystemData projective_space(const ProjectiveSpec& spec) {
  require_positive(spec.n);
  const auto n = static_cast<std::size_t>(spec.n);
  if (spec.weight_basis.size() != n) throw Error(Errc::Schema, "weight basis must have n vectors");
  for (const auto& k : spec.weight_basis)
    if (k.size() != n) throw Error(Errc::Schema, "weight basis vectors must have length n");
  // Rows k^1..k^n; throws NonUnimodular unless they form a basis of Z^n.
  UnimodularMatrix basis(spec.weight_basis);
  (void)basis;

  const Rational k_over_hbar = Rational(static_cast<long>(spec.big_n)) + ratio(spec.n + 1, 2);
  if (k_over_hbar <= 0) throw Error(Errc::Schema, "K = hbar(N + (n+1)/2) must be positive");

  std::vector<WeightVector> k(n + 1, WeightVector(n, 0));  // k[0] = 0
  for (std::size_t j = 0; j < n; ++j) k[j + 1] = spec.weight_basis[j];

  SystemData s;
  s.model = "projective";
  s.rank = s.dim = n;
  s.kahler_scale = k_over_hbar;
  for (std::size_t j = 0; j <= n; ++j) {
    FixedPointDatum z;
    z.name = "Z" + std::to_string(j);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == j) continue;
      WeightVector w(n);
      for (std::size_t c = 0; c < n; ++c) w[c] = k[i][c] - k[j][c];
      z.weights.push_back(std::move(w));
    }
    z.momentum = -k_over_hbar * RatCovector::from_integers(k[j]);
    s.fixed_points.push_back(std::move(z));
  }
  s.mpc_prequantizable =
      Flag{projective_mpc_criterion(spec.n, k_over_hbar), "K = hbar(N + (n+1)/2) with N = " + std::to_string(spec.big_n)};
  s.action_free_on_regular_levels = Flag{true, "model-asserted: toric action is free over the open polytope"};

  const RatCovector c = spec.constant ? *spec.constant : solve_shift(s);
  if (c.rank() != n) throw Error(Errc::RankMismatch, "constant C has wrong length");
  for (auto& z : s.fixed_points) z.momentum += c;

  if (n <= 2) {
    s.polyhedron = hull_from_fixed_points(s);
  } else {
    std::vector<RatCovector> verts;
    for (const auto& z : s.fixed_points) verts.push_back(z.momentum);
    auto facets = simplex_facets(verts);
    s.polyhedron = MomentumPolyhedron::from_both(n, std::move(verts), {}, std::move(facets));
  }
  return s;
}

std::vector<Rational> oscillator_energies(const SystemData& s, const RatCovector& x) {
  if (s.model != "oscillator_t1" && s.model != "oscillator_tn")
    throw Error(Errc::UnsupportedModel, "energies are defined for oscillator models only");
  if (s.fixed_points.empty()) throw Error(Errc::NoFixedPoints, "oscillator has no fixed point");
  const RatCovector e = s.fixed_points.front().momentum - x;
  return e.entries();
}

}  // namespace mpcq
