#include "mpcq/document.hpp"

#include <algorithm>

#include "mpcq/models.hpp"

namespace mpcq {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw Error(Errc::Schema, path + ": " + msg);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const json* optional_member(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return it.key() == k; }))
      schema_error(path, "unknown field \"" + it.key() + "\"");
  }
}

Rational rational_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (!j.is_string()) schema_error(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

RatCovector covector_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of rationals");
  std::vector<Rational> e;
  for (std::size_t i = 0; i < j.size(); ++i) e.push_back(rational_at(j[i], path + "[" + std::to_string(i) + "]"));
  return RatCovector(std::move(e));
}

std::vector<RatCovector> covectors_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  std::vector<RatCovector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(covector_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::int64_t int_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t count_at(const json& j, const std::string& path) {
  auto v = int_at(j, path);
  if (v < 0) schema_error(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

WeightVector ints_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of integers");
  WeightVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<WeightVector> int_rows_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of integer vectors");
  std::vector<WeightVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(ints_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

bool bool_at(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema_error(path, "expected a boolean");
  return j.get<bool>();
}

ModelStanza parse_model(const json& j, const std::string& path) {
  reject_unknown(j, {"type", "n", "shifted", "N", "weight_basis", "constant"}, path);
  ModelStanza m;
  const json& type = require(j, "type", path);
  if (!type.is_string()) schema_error(path + ".type", "expected a string");
  m.type = type.get<std::string>();
  if (m.type != "oscillator_t1" && m.type != "oscillator_tn" && m.type != "projective")
    schema_error(path + ".type", "unknown model \"" + m.type + "\"");
  const auto n = int_at(require(j, "n", path), path + ".n");
  if (n < 1 || n > 64) schema_error(path + ".n", "dimension must be between 1 and 64");
  m.n = static_cast<int>(n);
  if (auto* s = optional_member(j, "shifted")) m.shifted = bool_at(*s, path + ".shifted");
  if (auto* big = optional_member(j, "N")) m.big_n = int_at(*big, path + ".N");
  if (auto* wb = optional_member(j, "weight_basis")) m.weight_basis = int_rows_at(*wb, path + ".weight_basis");
  if (auto* c = optional_member(j, "constant")) m.constant = covector_at(*c, path + ".constant");
  if (m.type != "projective" && (j.contains("N") || j.contains("weight_basis") || j.contains("constant")))
    schema_error(path, "N, weight_basis and constant apply to the projective model only");
  if (m.type == "projective" && j.contains("shifted")) schema_error(path, "shifted applies to oscillator models only");
  return m;
}

PolyhedronStanza parse_polyhedron(const json& j, const std::string& path) {
  reject_unknown(j, {"vertices", "rays", "halfspaces"}, path);
  PolyhedronStanza p;
  if (auto* v = optional_member(j, "vertices")) p.vertices = covectors_at(*v, path + ".vertices");
  if (auto* r = optional_member(j, "rays")) p.rays = covectors_at(*r, path + ".rays");
  if (auto* hs = optional_member(j, "halfspaces")) {
    if (!hs->is_array()) schema_error(path + ".halfspaces", "expected an array");
    for (std::size_t i = 0; i < hs->size(); ++i) {
      const std::string hp = path + ".halfspaces[" + std::to_string(i) + "]";
      reject_unknown((*hs)[i], {"normal", "offset"}, hp);
      p.halfspaces.push_back(Halfspace{covector_at(require((*hs)[i], "normal", hp), hp + ".normal"),
                                       rational_at(require((*hs)[i], "offset", hp), hp + ".offset")});
    }
  }
  if (p.vertices.empty() && p.halfspaces.empty()) schema_error(path, "needs vertices or halfspaces");
  return p;
}

ExplicitStanza parse_explicit(const json& j, const std::string& path) {
  reject_unknown(j, {"rank", "dim", "fixed_points", "rays", "polyhedron", "flags"}, path);
  ExplicitStanza e;
  e.rank = count_at(require(j, "rank", path), path + ".rank");
  e.dim = count_at(require(j, "dim", path), path + ".dim");
  const json& fps = require(j, "fixed_points", path);
  if (!fps.is_array()) schema_error(path + ".fixed_points", "expected an array");
  for (std::size_t i = 0; i < fps.size(); ++i) {
    const std::string fp = path + ".fixed_points[" + std::to_string(i) + "]";
    reject_unknown(fps[i], {"name", "weights", "momentum"}, fp);
    FixedPointDatum z;
    const json& name = require(fps[i], "name", fp);
    if (!name.is_string()) schema_error(fp + ".name", "expected a string");
    z.name = name.get<std::string>();
    z.weights = int_rows_at(require(fps[i], "weights", fp), fp + ".weights");
    z.momentum = covector_at(require(fps[i], "momentum", fp), fp + ".momentum");
    e.fixed_points.push_back(std::move(z));
  }
  if (auto* r = optional_member(j, "rays")) e.rays = covectors_at(*r, path + ".rays");
  if (auto* p = optional_member(j, "polyhedron")) e.polyhedron = parse_polyhedron(*p, path + ".polyhedron");
  const json& flags = require(j, "flags", path);
  reject_unknown(flags, {"mpc_prequantizable", "action_free_on_regular_levels"}, path + ".flags");
  e.mpc_prequantizable = bool_at(require(flags, "mpc_prequantizable", path + ".flags"), path + ".flags.mpc_prequantizable");
  if (auto* f = optional_member(flags, "action_free_on_regular_levels"))
    e.action_free_on_regular_levels = bool_at(*f, path + ".flags.action_free_on_regular_levels");
  return e;
}

Window window_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected an array of [lo, hi] pairs");
  Window w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string wp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) schema_error(wp, "expected [lo, hi]");
    w.ranges.emplace_back(int_at(j[i][0], wp + "[0]"), int_at(j[i][1], wp + "[1]"));
    if (w.ranges.back().first > w.ranges.back().second) schema_error(wp, "lo exceeds hi");
  }
  return w;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json ints_json(const WeightVector& w) { return json(w); }

json covectors_json(const std::vector<RatCovector>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(covector_json(v));
  return arr;
}

}  // namespace

json rational_json(const Rational& r) { return to_string(r); }

json covector_json(const RatCovector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rational_json(x));
  return arr;
}

InputDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, "line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what());
  }
  if (!j.is_object()) schema_error("$", "document must be a JSON object");
  reject_unknown(j, {"model", "explicit", "planck_h", "window"}, "$");
  InputDocument doc;
  const bool has_model = j.contains("model"), has_explicit = j.contains("explicit");
  if (has_model == has_explicit) schema_error("$", "exactly one of \"model\" or \"explicit\" is required");
  if (has_model) doc.model = parse_model(j["model"], "model");
  if (has_explicit) doc.explicit_system = parse_explicit(j["explicit"], "explicit");
  if (auto* h = optional_member(j, "planck_h")) {
    doc.planck_h = rational_at(*h, "planck_h");
    if (*doc.planck_h <= 0) schema_error("planck_h", "must be positive");
  }
  if (auto* w = optional_member(j, "window")) doc.window = window_from_json(*w, "window");
  return doc;
}

json to_json(const InputDocument& doc) {
  json j = json::object();
  if (doc.model) {
    const auto& m = *doc.model;
    json mj = {{"type", m.type}, {"n", m.n}};
    if (m.type == "projective") {
      mj["N"] = m.big_n;
      if (!m.weight_basis.empty()) {
        json wb = json::array();
        for (const auto& w : m.weight_basis) wb.push_back(ints_json(w));
        mj["weight_basis"] = wb;
      }
      if (m.constant) mj["constant"] = covector_json(*m.constant);
    } else {
      mj["shifted"] = m.shifted;
    }
    j["model"] = mj;
  }
  if (doc.explicit_system) {
    const auto& e = *doc.explicit_system;
    json fps = json::array();
    for (const auto& z : e.fixed_points) {
      json ws = json::array();
      for (const auto& w : z.weights) ws.push_back(ints_json(w));
      fps.push_back({{"name", z.name}, {"weights", ws}, {"momentum", covector_json(z.momentum)}});
    }
    json ej = {{"rank", e.rank},
               {"dim", e.dim},
               {"fixed_points", fps},
               {"flags",
                {{"mpc_prequantizable", e.mpc_prequantizable},
                 {"action_free_on_regular_levels", e.action_free_on_regular_levels}}}};
    if (!e.rays.empty()) ej["rays"] = covectors_json(e.rays);
    if (e.polyhedron) {
      json pj = json::object();
      if (!e.polyhedron->vertices.empty()) pj["vertices"] = covectors_json(e.polyhedron->vertices);
      if (!e.polyhedron->rays.empty()) pj["rays"] = covectors_json(e.polyhedron->rays);
      if (!e.polyhedron->halfspaces.empty()) {
        json hs = json::array();
        for (const auto& h : e.polyhedron->halfspaces)
          hs.push_back({{"normal", covector_json(h.normal)}, {"offset", rational_json(h.offset)}});
        pj["halfspaces"] = hs;
      }
      ej["polyhedron"] = pj;
    }
    j["explicit"] = ej;
  }
  if (doc.planck_h) j["planck_h"] = rational_json(*doc.planck_h);
  if (doc.window) {
    json w = json::array();
    for (const auto& [lo, hi] : doc.window->ranges) w.push_back({lo, hi});
    j["window"] = w;
  }
  return j;
}

std::string serialize(const InputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

SystemData InputDocument::build() const {
  if (model) {
    const auto& m = *model;
    if (m.type == "oscillator_t1") return oscillator_t1(m.n, m.shifted);
    if (m.type == "oscillator_tn") return oscillator_tn(m.n, m.shifted);
    ProjectiveSpec spec = standard_projective(m.n, m.big_n);
    if (!m.weight_basis.empty()) spec.weight_basis = m.weight_basis;
    spec.constant = m.constant;
    return projective_space(spec);
  }
  if (!explicit_system) throw Error(Errc::Schema, "$: document has neither model nor explicit data");
  const auto& e = *explicit_system;
  SystemData s;
  s.model = "explicit";
  s.rank = e.rank;
  s.dim = e.dim;
  s.fixed_points = e.fixed_points;
  s.rays = e.rays;
  s.mpc_prequantizable = Flag{e.mpc_prequantizable, "asserted by input document"};
  s.action_free_on_regular_levels = Flag{e.action_free_on_regular_levels, "asserted by input document"};
  s.validate();
  if (e.polyhedron) {
    const auto& p = *e.polyhedron;
    if (!p.halfspaces.empty() && !p.vertices.empty())
      s.polyhedron = MomentumPolyhedron::from_both(s.rank, p.vertices, p.rays, p.halfspaces);
    else if (!p.halfspaces.empty())
      s.polyhedron = MomentumPolyhedron::from_halfspaces(s.rank, p.halfspaces);
    else
      s.polyhedron = MomentumPolyhedron::hull(s.rank, p.vertices, p.rays);
  } else if (!s.fixed_points.empty() && s.rank <= 2) {
    s.polyhedron = hull_from_fixed_points(s);
  }
  return s;
}

ExplicitStanza to_explicit(const SystemData& s) {
  ExplicitStanza e;
  e.rank = s.rank;
  e.dim = s.dim;
  e.fixed_points = s.fixed_points;
  e.rays = s.rays;
  e.mpc_prequantizable = s.mpc_prequantizable.value;
  e.action_free_on_regular_levels = s.action_free_on_regular_levels.value;
  if (s.polyhedron) {
    PolyhedronStanza p;
    p.vertices = s.polyhedron->vertices();
    p.rays = s.polyhedron->rays();
    p.halfspaces = s.polyhedron->halfspaces();
    e.polyhedron = std::move(p);
  }
  return e;
}

Window parse_window(std::string_view text) {
  Window w;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('x', start);
    std::string_view axis = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    auto trim = [](std::string_view v) {
      const auto b = v.find_first_not_of(" \t");
      if (b == std::string_view::npos) return std::string_view{};
      return v.substr(b, v.find_last_not_of(" \t") - b + 1);
    };
    auto comma = axis.find(',');
    if (comma == std::string_view::npos) throw Error(Errc::Schema, "--window: expected \"lo,hi\" per axis");
    try {
      auto lo = parse_rational(trim(axis.substr(0, comma)));
      auto hi = parse_rational(trim(axis.substr(comma + 1)));
      if (lo.get_den() != 1 || hi.get_den() != 1) throw Error(Errc::Schema, "--window: bounds must be integers");
      if (lo > hi) throw Error(Errc::Schema, "--window: lo exceeds hi");
      w.ranges.emplace_back(to_int64(lo.get_num()), to_int64(hi.get_num()));
    } catch (const Error& e) {
      if (e.code() == Errc::Parse) throw Error(Errc::Schema, std::string("--window: ") + e.what());
      throw;
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return w;
}

std::string to_string(const Window& w) {
  std::string out;
  for (std::size_t i = 0; i < w.ranges.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(w.ranges[i].first) + "," + std::to_string(w.ranges[i].second);
  }
  return out;
}

}  // namespace mpcq
