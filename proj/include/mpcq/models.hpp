#pragma once

// Builders for harmonic oscillators (diagonal circle and componentwise torus
// actions on C^n) and complex projective space CP^n with a linear torus action.

#include <cstdint>
#include <optional>
#include <vector>

#include "mpcq/system.hpp"

namespace mpcq {

enum class OscillatorVariant { T1, Tn };

struct OscillatorSpec {
  int n = 1;
  OscillatorVariant variant = OscillatorVariant::T1;
  bool shifted = true;
};

struct ProjectiveSpec {
  int n = 1;
  /// K = hbar (N + (n+1)/2).
  std::int64_t big_n = 0;
  /// k^1..k^n, an integer basis of Z^n.
  std::vector<WeightVector> weight_basis;
  /// Additive constant C (units of h). When absent the canonical shift is used.
  std::optional<RatCovector> constant;
};

/// Circle acting diagonally on C^n. Fixed point: the origin, all weights 1,
/// momentum n/2 when shifted and 0 otherwise; image (-inf, momentum].
SystemData oscillator_t1(int n, bool shifted);
/// T^n acting componentwise; weights e_1..e_n, image an orthant with apex at
/// the fixed-point momentum (1/2, ..., 1/2) when shifted.
SystemData oscillator_tn(int n, bool shifted = true);
SystemData build_oscillator(const OscillatorSpec& spec);

ProjectiveSpec standard_projective(int n, std::int64_t big_n);

/// Fixed points Z_0..Z_n with weights {k^i - k^j : i != j} (k^0 = 0) at Z_j and
/// momentum -(N + (n+1)/2) k^j + C. Throws Errc::NonUnimodular for a basis that
/// does not span Z^n and Errc::Schema when K <= 0. For n >= 3 the general
/// pattern is an extrapolation of the n = 2 computation.
SystemData projective_space(const ProjectiveSpec& spec);

/// (CP^n, K i varpi_FS) is metaplectic-c prequantizable iff K > 0 and
/// K/hbar - (n+1)/2 is an integer.
bool projective_mpc_criterion(int n, const Rational& k_over_hbar);

/// Energies E_j / hbar of an oscillator level x: momentum(fixed point) - x,
/// one entry per torus coordinate.
std::vector<Rational> oscillator_energies(const SystemData& s, const RatCovector& x);

}  // namespace mpcq
