#pragma once

// Numerical check of the quantization condition on oscillator models: the
// metaplectic-c holonomy around a torus orbit is computed once in closed form
// and once by trapezoid quadrature of the primitive
// beta = 1/2 sum (q dp - p dq) of omega combined with the half-form phase.

#include <complex>
#include <optional>
#include <vector>

#include "mpcq/lattice.hpp"
#include "mpcq/system.hpp"

namespace mpcq {

using Complex = std::complex<double>;

struct OrbitSpec {
  SystemData model;
  /// (q_1..q_n, p_1..p_n).
  std::vector<double> base_point;
  Generator xi;
  /// Level the base point is claimed to lie on (units of h); checked when present.
  std::optional<RatCovector> level;
  int steps = 1000;
  double planck_h = 1.0;
};

/// e^{-2 pi i <x, xi>}, x in units of h.
Complex closed_form_holonomy(const RatCovector& x, std::span<const std::int64_t> xi);

/// Phi(m) / h for the linear torus action of an oscillator model.
std::vector<double> oscillator_momentum(const SystemData& s, std::span<const double> point, double planck_h);

/// A point on the level set Phi^{-1}(x h). Throws Errc::NotOnLevelSet when x is
/// not a regular value of the model.
std::vector<double> base_point_on_level(const SystemData& s, const RatCovector& x, double planck_h = 1.0);

/// Trapezoid value of int_0^1 beta(xi_M(exp(t xi) m)) dt.
double orbit_action_integral(const OrbitSpec& spec);

/// exp(2 pi i Q / h) times the half-form phase at the fixed point.
Complex numeric_mpc_holonomy(const OrbitSpec& spec);

/// True iff the numeric holonomy is trivial (within 1e-6) along every basis
/// generator of t at the regular level x.
bool is_quantized_via_holonomy(const SystemData& s, const RatCovector& x, int steps = 1000, double planck_h = 1.0);

}  // namespace mpcq
