#pragma once

// Input document: a JSON object holding either a "model" stanza (one of the
// built-in families) or an "explicit" stanza (fixed-point data entered by
// hand). Every rational is a string "p/q" or "p".

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpcq/spectrum.hpp"
#include "mpcq/system.hpp"

namespace mpcq {

struct ModelStanza {
  std::string type;  // oscillator_t1 | oscillator_tn | projective
  int n = 1;
  bool shifted = true;                       // oscillators
  std::int64_t big_n = 0;                    // projective: K = hbar(N + (n+1)/2)
  std::vector<WeightVector> weight_basis;    // projective; empty means standard basis
  std::optional<RatCovector> constant;       // projective; absent means canonical shift

  friend bool operator==(const ModelStanza&, const ModelStanza&) = default;
};

struct PolyhedronStanza {
  std::vector<RatCovector> vertices;
  std::vector<RatCovector> rays;
  std::vector<Halfspace> halfspaces;

  friend bool operator==(const PolyhedronStanza&, const PolyhedronStanza&) = default;
};

struct ExplicitStanza {
  std::size_t rank = 0;
  std::size_t dim = 0;
  std::vector<FixedPointDatum> fixed_points;
  std::vector<RatCovector> rays;
  std::optional<PolyhedronStanza> polyhedron;
  bool mpc_prequantizable = false;
  bool action_free_on_regular_levels = false;

  friend bool operator==(const ExplicitStanza&, const ExplicitStanza&) = default;
};

struct InputDocument {
  std::optional<ModelStanza> model;
  std::optional<ExplicitStanza> explicit_system;
  std::optional<Rational> planck_h;
  std::optional<Window> window;

  /// Runs the builder or assembles the explicit data.
  SystemData build() const;
  double planck_constant() const { return planck_h ? planck_h->get_d() : 1.0; }

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws Errc::Parse (with line number) on malformed JSON and Errc::Schema
/// (with the offending field path) on schema violations.
InputDocument parse_document(std::string_view text);
nlohmann::json to_json(const InputDocument& doc);
std::string serialize(const InputDocument& doc);

/// Explicit stanza equivalent to a built system (used by `models --input`).
ExplicitStanza to_explicit(const SystemData& s);

/// "a,b" per axis, axes joined by 'x': "-3,3" or "-2,2x-2,2".
Window parse_window(std::string_view text);
std::string to_string(const Window& w);

nlohmann::json rational_json(const Rational& r);
nlohmann::json covector_json(const RatCovector& v);

}  // namespace mpcq
