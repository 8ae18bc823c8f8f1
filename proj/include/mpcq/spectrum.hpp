#pragma once

// Quantized energy levels: integer points (units of h) lying strictly inside
// the momentum polyhedron of an equivariantly shifted system.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpcq/polyhedron.hpp"
#include "mpcq/system.hpp"

namespace mpcq {

/// Inclusive integer box, one [lo, hi] range per coordinate.
struct Window {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;

  std::size_t rank() const noexcept { return ranges.size(); }
  bool contains(std::span<const std::int64_t> p) const;
  friend bool operator==(const Window&, const Window&) = default;
};

struct QuantizedLevel {
  LatticePoint point;
  std::string note = "interior lattice point";

  friend bool operator==(const QuantizedLevel&, const QuantizedLevel&) = default;
};

struct ReductionReport {
  QuantizedLevel level;
  std::int64_t reduced_dim = 0;
  std::string statement;
  /// Reduced space as a new system, when a builder for it exists.
  std::optional<SystemData> successor;

  friend bool operator==(const ReductionReport&, const ReductionReport&) = default;
};

/// Hull of the fixed-point momentum images plus the model's recession rays.
MomentumPolyhedron hull_from_fixed_points(const SystemData& s);

Location classify_value(const MomentumPolyhedron& p, const RatCovector& x);

/// Interior lattice points, lexicographically sorted. An unbounded polyhedron
/// requires a window (Errc::UnboundedNeedsWindow).
std::vector<QuantizedLevel> quantized_levels(const MomentumPolyhedron& p, const std::optional<Window>& window = {});

/// Number of quantized levels of a bounded polyhedron (Errc::Unbounded otherwise).
std::uint64_t count_levels(const MomentumPolyhedron& p);

/// Symplectic reduction at a quantized level x.
ReductionReport reduction_report(const SystemData& s, const RatCovector& x);

}  // namespace mpcq
