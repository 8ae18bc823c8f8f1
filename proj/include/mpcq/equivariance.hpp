#pragma once

// Fixed-point test for equivariant metaplectic-c prequantization: at a fixed
// point z the momentum value Phi(z)/h minus half the sum of the isotropy
// weights must lie in the integer lattice Z^{k*}.

#include <optional>
#include <vector>

#include "mpcq/system.hpp"

namespace mpcq {

struct FixedPointCheck {
  std::string name;
  RatCovector half_sum;
  RatCovector defect;

  friend bool operator==(const FixedPointCheck&, const FixedPointCheck&) = default;
};

struct EquivarianceReport {
  std::vector<FixedPointCheck> points;
  bool overall = false;
  /// Canonical shift in [0,1)^k when the data admit one and the check failed.
  std::optional<RatCovector> suggested_shift;

  friend bool operator==(const EquivarianceReport&, const EquivarianceReport&) = default;
};

/// (1/2) sum_j w_j.
RatCovector half_sum(const FixedPointDatum& z);
/// frac_part(momentum - half_sum); zero iff the lattice condition holds at z.
RatCovector defect(const FixedPointDatum& z);

/// Throws Errc::NotPrequantizable when the mpc flag is false and
/// Errc::NoFixedPoints on empty data.
EquivarianceReport check_equivariance(const SystemData& s);

/// The shift c in [0,1)^k that zeroes every defect once added to every
/// momentum value. Throws Errc::InconsistentDefects if fixed points disagree.
RatCovector solve_shift(const SystemData& s);

}  // namespace mpcq
