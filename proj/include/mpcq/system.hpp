#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpcq/lattice.hpp"
#include "mpcq/polyhedron.hpp"

namespace mpcq {

struct FixedPointDatum {
  std::string name;
  /// Isotropy weights of the torus on the tangent space, one per complex dimension.
  std::vector<WeightVector> weights;
  /// Momentum value at the fixed point, units of h.
  RatCovector momentum;

  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;
};

/// A model-asserted hypothesis together with where the assertion comes from.
struct Flag {
  bool value = false;
  std::string provenance;

  friend bool operator==(const Flag&, const Flag&) = default;
};

struct SystemData {
  /// Builder that produced the data ("oscillator_t1", "oscillator_tn",
  /// "projective") or "explicit" for hand-entered data.
  std::string model = "explicit";
  std::size_t rank = 0;  // k
  std::size_t dim = 0;   // n, complex dimension
  std::vector<FixedPointDatum> fixed_points;
  /// Recession directions of the momentum image supplied by the model.
  std::vector<RatCovector> rays;
  std::optional<MomentumPolyhedron> polyhedron;
  Flag mpc_prequantizable;
  Flag action_free_on_regular_levels;
  /// K / hbar for the scaled Fubini-Study form of projective models.
  std::optional<Rational> kahler_scale;

  /// Throws Errc::Schema / Errc::RankMismatch on violated shape invariants.
  void validate() const;
  /// Adds c to every momentum value and translates the polyhedron.
  SystemData shifted(const RatCovector& c) const;
  /// Consistent change of integer basis of all weights, momenta, rays and polyhedron.
  SystemData transformed(const UnimodularMatrix& b) const;

  friend bool operator==(const SystemData&, const SystemData&) = default;
};

}  // namespace mpcq
