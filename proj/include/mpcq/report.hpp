#pragma once

#include <json.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mpcq/equivariance.hpp"
#include "mpcq/polyhedron.hpp"
#include "mpcq/spectrum.hpp"

namespace mpcq {

struct LevelEntry {
  LatticePoint point;
  /// E_j / hbar per torus coordinate; oscillator models only.
  std::vector<Rational> energies;
  std::optional<Rational> total_energy;

  friend bool operator==(const LevelEntry&, const LevelEntry&) = default;
};

struct ReductionEntry {
  LatticePoint level;
  std::int64_t reduced_dim = 0;
  std::string statement;
  std::optional<std::string> successor_model;
  std::optional<std::int64_t> successor_dim;
  std::optional<Rational> successor_kahler_scale;
  std::optional<bool> successor_mpc_prequantizable;
  std::optional<bool> successor_equivariant;

  friend bool operator==(const ReductionEntry&, const ReductionEntry&) = default;
};

struct HolonomyRow {
  RatCovector level;
  Generator xi;
  std::complex<double> numeric;
  std::complex<double> closed_form;
  double deviation = 0.0;
  bool trivial = false;
  bool integral = false;

  friend bool operator==(const HolonomyRow&, const HolonomyRow&) = default;
};

/// Everything a subcommand computed. The JSON rendering is the machine format.
struct Report {
  std::string command;
  std::string model;
  std::optional<bool> verdict;
  std::optional<EquivarianceReport> equivariance;
  std::optional<RatCovector> shift;
  bool shift_applied = false;
  std::optional<MomentumPolyhedron> polyhedron;
  std::optional<std::vector<LevelEntry>> levels;
  std::optional<std::uint64_t> count;
  std::vector<ReductionEntry> reductions;
  std::vector<HolonomyRow> holonomy;
  std::vector<std::string> messages;

  friend bool operator==(const Report&, const Report&) = default;
};

ReductionEntry to_entry(const ReductionReport& r);

nlohmann::json to_json(const Report& r);
/// Inverse of to_json; throws Errc::Schema on malformed input.
Report report_from_json(const nlohmann::json& j);
std::string render_human(const Report& r);

}  // namespace mpcq
