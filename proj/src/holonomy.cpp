#include "mpcq/holonomy.hpp"

#include <cmath>
#include <numbers>

#include "mpcq/exact_linalg.hpp"
#include "mpcq/mpc_kernel.hpp"
#include "mpcq/spectrum.hpp"

namespace mpcq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLevelTolerance = 1e-9;

const FixedPointDatum& oscillator_fixed_point(const SystemData& s) {
  if (s.model != "oscillator_t1" && s.model != "oscillator_tn")
    throw Error(Errc::UnsupportedModel, "holonomy is implemented for oscillator models only");
  if (s.fixed_points.size() != 1) throw Error(Errc::Schema, "oscillator model must have exactly one fixed point");
  return s.fixed_points.front();
}

void require_point(const SystemData& s, std::span<const double> point) {
  if (point.size() != 2 * s.dim) throw Error(Errc::RankMismatch, "base point must have 2n coordinates");
}

}  // namespace

Complex closed_form_holonomy(const RatCovector& x, std::span<const std::int64_t> xi) {
  // Reduce mod 1 first so the exponent stays small and exact integers give exactly 1.
  const Rational phase = frac(pairing(x, xi));
  if (phase == 0) return {1.0, 0.0};
  return std::exp(Complex(0.0, -2.0 * kPi * phase.get_d()));
}

std::vector<double> oscillator_momentum(const SystemData& s, std::span<const double> point, double planck_h) {
  const auto& z = oscillator_fixed_point(s);
  require_point(s, point);
  std::vector<double> out(s.rank);
  for (std::size_t i = 0; i < s.rank; ++i) out[i] = z.momentum[i].get_d();
  for (std::size_t j = 0; j < s.dim; ++j) {
    const double r2 = point[j] * point[j] + point[j + s.dim] * point[j + s.dim];
    for (std::size_t i = 0; i < s.rank; ++i) out[i] -= kPi * static_cast<double>(z.weights[j][i]) * r2 / planck_h;
  }
  return out;
}

std::vector<double> base_point_on_level(const SystemData& s, const RatCovector& x, double planck_h) {
  const auto& z = oscillator_fixed_point(s);
  if (x.rank() != s.rank) throw Error(Errc::RankMismatch, "level rank differs from torus rank");
  if (!s.polyhedron || classify_value(*s.polyhedron, x) != Location::Interior)
    throw Error(Errc::NotOnLevelSet, to_string(x) + " is not a regular value");
  // Solve sum_j w_j |z_j|^2 = (c - x) h / pi for the squared radii.
  const RatCovector gap = z.momentum - x;
  std::vector<double> r2(s.dim);
  if (s.rank == 1) {
    std::int64_t total = 0;
    for (const auto& w : z.weights) total += w[0];
    if (total == 0) throw Error(Errc::NotOnLevelSet, "weights sum to zero");
    for (std::size_t j = 0; j < s.dim; ++j) r2[j] = gap[0].get_d() / static_cast<double>(total);
  } else if (s.rank == s.dim) {
    std::vector<RatCovector> rows(s.rank, RatCovector::zero(s.dim));
    for (std::size_t j = 0; j < s.dim; ++j)
      for (std::size_t i = 0; i < s.rank; ++i) rows[i][j] = static_cast<long>(z.weights[j][i]);
    auto sol = linalg::solve(rows, gap);
    if (!sol) throw Error(Errc::NotOnLevelSet, "weights at the fixed point are linearly dependent");
    for (std::size_t j = 0; j < s.dim; ++j) r2[j] = (*sol)[j].get_d();
  } else {
    throw Error(Errc::UnsupportedModel, "base point construction needs rank 1 or rank n");
  }
  std::vector<double> point(2 * s.dim, 0.0);
  for (std::size_t j = 0; j < s.dim; ++j) {
    if (!(r2[j] > 0)) throw Error(Errc::NotOnLevelSet, to_string(x) + " is not a regular value");
    point[j] = std::sqrt(r2[j] * planck_h / kPi);
  }
  return point;
}

double orbit_action_integral(const OrbitSpec& spec) {
  const auto& z = oscillator_fixed_point(spec.model);
  require_point(spec.model, spec.base_point);
  if (spec.xi.size() != spec.model.rank) throw Error(Errc::RankMismatch, "generator rank differs from torus rank");
  bool nonzero = false;
  for (auto c : spec.xi) nonzero = nonzero || c != 0;
  if (!nonzero) throw Error(Errc::InvalidGenerator, "generator must be nonzero");
  if (spec.steps < 16) throw Error(Errc::StepTooCoarse, "orbit quadrature needs at least 16 steps");
  if (!(spec.planck_h > 0)) throw Error(Errc::Schema, "Planck constant must be positive");

  if (spec.level) {
    const auto phi = oscillator_momentum(spec.model, spec.base_point, spec.planck_h);
    if (spec.level->rank() != phi.size()) throw Error(Errc::RankMismatch, "level rank differs from torus rank");
    for (std::size_t i = 0; i < phi.size(); ++i)
      if (std::abs(phi[i] - (*spec.level)[i].get_d()) > kLevelTolerance)
        throw Error(Errc::NotOnLevelSet, "base point does not lie on level " + to_string(*spec.level));
  }

  const std::size_t n = spec.model.dim;
  std::vector<double> rates(n);  // angular speed 2 pi (w_j . xi) in plane j
  for (std::size_t j = 0; j < n; ++j) rates[j] = 2.0 * kPi * static_cast<double>(pairing(z.weights[j], spec.xi));
  const Eigen::Map<const Eigen::VectorXd> m0(spec.base_point.data(), static_cast<Eigen::Index>(2 * n));

  auto integrand = [&](double t) {
    std::vector<double> angles(n);
    for (std::size_t j = 0; j < n; ++j) angles[j] = rates[j] * t;
    const Eigen::VectorXd m = mpc::plane_rotations(angles) * m0;
    double beta = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double q = m[j], p = m[j + n];
      const double dq = -rates[j] * p, dp = rates[j] * q;  // xi_M = i (w_j . xi) 2 pi z_j
      beta += 0.5 * (q * dp - p * dq);
    }
    return beta;
  };

  const double dt = 1.0 / spec.steps;
  double sum = 0.5 * (integrand(0.0) + integrand(1.0));
  for (int i = 1; i < spec.steps; ++i) sum += integrand(i * dt);
  return sum * dt;
}

Complex numeric_mpc_holonomy(const OrbitSpec& spec) {
  const double action = orbit_action_integral(spec);
  const auto& z = oscillator_fixed_point(spec.model);
  const Complex prequantum = std::exp(Complex(0.0, 2.0 * kPi * action / spec.planck_h));
  return prequantum * mpc::halfform_phase(z.weights, spec.xi);
}

bool is_quantized_via_holonomy(const SystemData& s, const RatCovector& x, int steps, double planck_h) {
  OrbitSpec spec{s, base_point_on_level(s, x, planck_h), {}, x, steps, planck_h};
  for (std::size_t i = 0; i < s.rank; ++i) {
    spec.xi.assign(s.rank, 0);
    spec.xi[i] = 1;
    if (std::abs(numeric_mpc_holonomy(spec) - 1.0) >= 1e-6) return false;
  }
  return true;
}

}  // namespace mpcq
