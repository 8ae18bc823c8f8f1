#pragma once

// Floating-point model of Sp(V), U(V) and the parameter pairs (g, mu) of
// metaplectic elements, for V = R^{2n} with coordinates (q_1..q_n, p_1..p_n),
// symplectic form sum dq_j ^ dp_j and compatible complex structure J
// sending q_j to p_j, so that V is identified with C^n via z_j = q_j + i p_j.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <span>

#include "mpcq/lattice.hpp"

namespace mpcq::mpc {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-9;

/// Matrix of the symplectic form: Omega(u, v) = u^T omega_matrix v.
RealMatrix omega_matrix(int n);
/// Matrix of J: J(q, p) = (-p, q).
RealMatrix complex_structure(int n);

/// g^T Omega g = Omega, with tolerance scaled by max(1, |g|_max^2).
bool is_symplectic(const RealMatrix& g, double tol = kDefaultTolerance);
bool commutes_with_j(const RealMatrix& g, double tol);

class SymplecticMatrix {
 public:
  /// Throws Errc::NotSymplectic on a non-square, odd-sized or non-symplectic g.
  explicit SymplecticMatrix(RealMatrix g, double tol = kDefaultTolerance);
  static SymplecticMatrix identity(int n);

  int n() const noexcept { return static_cast<int>(g_.rows() / 2); }
  const RealMatrix& matrix() const noexcept { return g_; }

 private:
  RealMatrix g_;
};

/// Real 2n x 2n matrix of the complex-linear map u (block form [[A, -B], [B, A]]).
RealMatrix realify(const ComplexMatrix& u);
/// Inverse of realify for matrices commuting with J.
ComplexMatrix complexify(const RealMatrix& m);

/// Block rotation by angles[j] in the (q_j, p_j) plane; complex form diag(e^{i angle_j}).
RealMatrix plane_rotations(std::span<const double> angles);

/// exp(t * Omega^{-1}-style Hamiltonian generator omega_matrix * s) for symmetric s.
RealMatrix exp_hamiltonian(const RealMatrix& symmetric, double t = 1.0);

/// C_g = (g - JgJ)/2 as an n x n complex matrix.
ComplexMatrix c_map(const SymplecticMatrix& g);
/// Det_C C_g.
Complex det_c(const SymplecticMatrix& g);

struct ParameterPair {
  SymplecticMatrix g;
  Complex mu;

  /// mu^2 Det_C C_g = 1, i.e. the pair parametrizes an element of Mp(V).
  bool is_metaplectic(double tol = kDefaultTolerance) const;
};

using SymplecticPath = std::function<RealMatrix(double)>;

struct TrackOptions {
  double tolerance = kDefaultTolerance;
  /// Reject a step when |d_{i+1}/d_i - 1| reaches this bound.
  double max_relative_step = 0.5;
};

/// Continues mu(t) = Det_C C_{g(t)}^{-1/2} from mu(0) = 1 along the sampled path
/// by picking, at every sample, the square root closest to the previous value.
/// The samples must start at the identity.
ParameterPair track_parameters(std::span<const RealMatrix> samples, const TrackOptions& opts = {});
ParameterPair track_parameters(const SymplecticPath& path, int steps, const TrackOptions& opts = {});
Complex track_sqrt(const SymplecticPath& path, int steps, const TrackOptions& opts = {});

/// Path t -> diag(e^{2 pi i (w_j . xi) t}) of the torus action on a fixed
/// point tangent space.
SymplecticPath weight_rotation_path(std::span<const WeightVector> weights, std::span<const std::int64_t> xi);

/// e^{-pi i sum_j (w_j . xi)}, which is +-1 for integral input.
Complex halfform_phase(std::span<const WeightVector> weights, std::span<const std::int64_t> xi);

}  // namespace mpcq::mpc
