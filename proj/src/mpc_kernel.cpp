#include "mpcq/mpc_kernel.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>

namespace mpcq::mpc {

RealMatrix omega_matrix(int n) {
  RealMatrix m = RealMatrix::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = RealMatrix::Identity(n, n);
  m.bottomLeftCorner(n, n) = -RealMatrix::Identity(n, n);
  return m;
}

RealMatrix complex_structure(int n) {
  RealMatrix j = RealMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -RealMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = RealMatrix::Identity(n, n);
  return j;
}

bool is_symplectic(const RealMatrix& g, double tol) {
  if (g.rows() != g.cols() || g.rows() % 2 != 0 || g.rows() == 0) return false;
  if (!g.allFinite()) return false;
  const int n = static_cast<int>(g.rows() / 2);
  const RealMatrix om = omega_matrix(n);
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff() * g.cwiseAbs().maxCoeff());
  return (g.transpose() * om * g - om).cwiseAbs().maxCoeff() <= tol * scale;
}

bool commutes_with_j(const RealMatrix& g, double tol) {
  const RealMatrix j = complex_structure(static_cast<int>(g.rows() / 2));
  return (g * j - j * g).cwiseAbs().maxCoeff() <= tol;
}

SymplecticMatrix::SymplecticMatrix(RealMatrix g, double tol) : g_(std::move(g)) {
  if (!is_symplectic(g_, tol)) throw Error(Errc::NotSymplectic, "g^T Omega g differs from Omega");
}

SymplecticMatrix SymplecticMatrix::identity(int n) { return SymplecticMatrix(RealMatrix::Identity(2 * n, 2 * n)); }

RealMatrix realify(const ComplexMatrix& u) {
  const auto n = u.rows();
  RealMatrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = u.real();
  m.topRightCorner(n, n) = -u.imag();
  m.bottomLeftCorner(n, n) = u.imag();
  m.bottomRightCorner(n, n) = u.real();
  return m;
}

ComplexMatrix complexify(const RealMatrix& m) {
  const auto n = m.rows() / 2;
  ComplexMatrix u(n, n);
  u.real() = m.topLeftCorner(n, n);
  u.imag() = m.bottomLeftCorner(n, n);
  return u;
}

RealMatrix plane_rotations(std::span<const double> angles) {
  const auto n = static_cast<Eigen::Index>(angles.size());
  RealMatrix g = RealMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double c = std::cos(angles[j]), s = std::sin(angles[j]);
    g(j, j) = c;
    g(j, j + n) = -s;
    g(j + n, j) = s;
    g(j + n, j + n) = c;
  }
  return g;
}

RealMatrix exp_hamiltonian(const RealMatrix& symmetric, double t) {
  const int n = static_cast<int>(symmetric.rows() / 2);
  const RealMatrix x = omega_matrix(n) * symmetric * t;
  return x.exp();
}

ComplexMatrix c_map(const SymplecticMatrix& g) {
  const RealMatrix j = complex_structure(g.n());
  const RealMatrix c = 0.5 * (g.matrix() - j * g.matrix() * j);
  return complexify(c);
}

Complex det_c(const SymplecticMatrix& g) { return c_map(g).determinant(); }

bool ParameterPair::is_metaplectic(double tol) const { return std::abs(mu * mu * det_c(g) - 1.0) <= tol; }

ParameterPair track_parameters(std::span<const RealMatrix> samples, const TrackOptions& opts) {
  if (samples.empty()) throw Error(Errc::StepTooCoarse, "empty path");
  const int n = static_cast<int>(samples.front().rows() / 2);
  if ((samples.front() - RealMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() > opts.tolerance)
    throw Error(Errc::NotSymplectic, "path must start at the identity");

  Complex mu = 1.0;
  Complex prev_det = 1.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const SymplecticMatrix g(samples[i], opts.tolerance);
    const Complex d = det_c(g);
    if (std::abs(d / prev_det - 1.0) >= opts.max_relative_step)
      throw Error(Errc::StepTooCoarse, "Det_C C_g moved by more than the step guard at sample " + std::to_string(i));
    const Complex root = std::sqrt(1.0 / d);
    mu = std::abs(root - mu) <= std::abs(-root - mu) ? root : -root;
    prev_det = d;
  }
  return ParameterPair{SymplecticMatrix(samples.back(), opts.tolerance), mu};
}

ParameterPair track_parameters(const SymplecticPath& path, int steps, const TrackOptions& opts) {
  if (steps < 1) throw Error(Errc::StepTooCoarse, "step count must be positive");
  std::vector<RealMatrix> samples;
  samples.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) samples.push_back(path(static_cast<double>(i) / steps));
  return track_parameters(samples, opts);
}

Complex track_sqrt(const SymplecticPath& path, int steps, const TrackOptions& opts) {
  return track_parameters(path, steps, opts).mu;
}

namespace {

std::vector<std::int64_t> weight_pairings(std::span<const WeightVector> weights, std::span<const std::int64_t> xi) {
  std::vector<std::int64_t> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(pairing(w, xi));
  return out;
}

}  // namespace

SymplecticPath weight_rotation_path(std::span<const WeightVector> weights, std::span<const std::int64_t> xi) {
  auto m = weight_pairings(weights, xi);
  return [m = std::move(m)](double t) {
    std::vector<double> angles;
    angles.reserve(m.size());
    for (auto mj : m) angles.push_back(2.0 * std::numbers::pi * static_cast<double>(mj) * t);
    return plane_rotations(angles);
  };
}

Complex halfform_phase(std::span<const WeightVector> weights, std::span<const std::int64_t> xi) {
  std::int64_t total = 0;
  for (auto m : weight_pairings(weights, xi)) total += m;
  return (total % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
}

}  // namespace mpcq::mpc
