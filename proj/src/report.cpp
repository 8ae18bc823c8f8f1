#include "mpcq/report.hpp"

#include <cstdio>
#include <sstream>

#include "mpcq/document.hpp"

namespace mpcq {

using nlohmann::json;

ReductionEntry to_entry(const ReductionReport& r) {
  ReductionEntry e;
  e.level = r.level.point;
  e.reduced_dim = r.reduced_dim;
  e.statement = r.statement;
  if (r.successor) {
    e.successor_model = r.successor->model;
    e.successor_dim = static_cast<std::int64_t>(r.successor->dim);
    e.successor_kahler_scale = r.successor->kahler_scale;
    e.successor_mpc_prequantizable = r.successor->mpc_prequantizable.value;
    if (!r.successor->fixed_points.empty() && r.successor->mpc_prequantizable.value)
      e.successor_equivariant = check_equivariance(*r.successor).overall;
  }
  return e;
}

namespace {

Rational rat(const json& j) {
  if (!j.is_string()) throw Error(Errc::Schema, "report: expected rational string");
  return parse_rational(j.get<std::string>());
}

RatCovector cov(const json& j) {
  std::vector<Rational> e;
  for (const auto& x : j) e.push_back(rat(x));
  return RatCovector(std::move(e));
}

std::vector<RatCovector> covs(const json& j) {
  std::vector<RatCovector> out;
  for (const auto& x : j) out.push_back(cov(x));
  return out;
}

json covs_json(const std::vector<RatCovector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(covector_json(v));
  return a;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }
std::complex<double> complex_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json polyhedron_json(const MomentumPolyhedron& p) {
  json hs = json::array();
  for (const auto& h : p.halfspaces())
    hs.push_back({{"normal", covector_json(h.normal)}, {"offset", rational_json(h.offset)}});
  return {{"rank", p.rank()},
          {"vertices", covs_json(p.vertices())},
          {"rays", covs_json(p.rays())},
          {"halfspaces", hs},
          {"has_halfspaces", p.has_h_rep()},
          {"degenerate", p.degenerate()},
          {"bounded", p.bounded()}};
}

MomentumPolyhedron polyhedron_from(const json& j) {
  std::vector<Halfspace> hs;
  for (const auto& h : j.at("halfspaces")) hs.push_back({cov(h.at("normal")), rat(h.at("offset"))});
  return MomentumPolyhedron::from_parts(j.at("rank").get<std::size_t>(), covs(j.at("vertices")), covs(j.at("rays")),
                                        std::move(hs), j.at("has_halfspaces").get<bool>(),
                                        j.at("degenerate").get<bool>());
}

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

}  // namespace

json to_json(const Report& r) {
  json j = {{"command", r.command}, {"model", r.model}};
  if (r.verdict) j["verdict"] = *r.verdict;
  if (r.equivariance) {
    json pts = json::array();
    for (const auto& p : r.equivariance->points)
      pts.push_back({{"name", p.name}, {"half_sum", covector_json(p.half_sum)}, {"defect", covector_json(p.defect)}});
    json e = {{"fixed_points", pts}, {"overall", r.equivariance->overall}};
    if (r.equivariance->suggested_shift) e["suggested_shift"] = covector_json(*r.equivariance->suggested_shift);
    j["equivariance"] = e;
  }
  if (r.shift) j["shift"] = covector_json(*r.shift);
  j["shift_applied"] = r.shift_applied;
  if (r.polyhedron) j["polyhedron"] = polyhedron_json(*r.polyhedron);
  if (r.levels) {
    json ls = json::array();
    for (const auto& l : *r.levels) {
      json lj = {{"point", l.point}};
      if (!l.energies.empty()) {
        json es = json::array();
        for (const auto& e : l.energies) es.push_back(rational_json(e));
        lj["energies_over_hbar"] = es;
      }
      if (l.total_energy) lj["total_energy_over_hbar"] = rational_json(*l.total_energy);
      ls.push_back(lj);
    }
    j["levels"] = ls;
  }
  if (r.count) j["count"] = *r.count;
  json reds = json::array();
  for (const auto& e : r.reductions) {
    json ej = {{"level", e.level}, {"reduced_dim", e.reduced_dim}, {"statement", e.statement}};
    if (e.successor_model) {
      json s = {{"model", *e.successor_model}};
      put_optional(s, "dim", e.successor_dim);
      if (e.successor_kahler_scale) s["kahler_scale_over_hbar"] = rational_json(*e.successor_kahler_scale);
      put_optional(s, "mpc_prequantizable", e.successor_mpc_prequantizable);
      put_optional(s, "equivariant", e.successor_equivariant);
      ej["successor"] = s;
    }
    reds.push_back(ej);
  }
  j["reductions"] = reds;
  json hol = json::array();
  for (const auto& h : r.holonomy)
    hol.push_back({{"level", covector_json(h.level)},
                   {"xi", h.xi},
                   {"numeric", complex_json(h.numeric)},
                   {"closed_form", complex_json(h.closed_form)},
                   {"deviation", h.deviation},
                   {"trivial", h.trivial},
                   {"integral", h.integral}});
  j["holonomy"] = hol;
  j["messages"] = r.messages;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.model = j.at("model").get<std::string>();
    if (j.contains("verdict")) r.verdict = j["verdict"].get<bool>();
    if (j.contains("equivariance")) {
      EquivarianceReport e;
      for (const auto& p : j["equivariance"].at("fixed_points"))
        e.points.push_back({p.at("name").get<std::string>(), cov(p.at("half_sum")), cov(p.at("defect"))});
      e.overall = j["equivariance"].at("overall").get<bool>();
      if (j["equivariance"].contains("suggested_shift")) e.suggested_shift = cov(j["equivariance"]["suggested_shift"]);
      r.equivariance = std::move(e);
    }
    if (j.contains("shift")) r.shift = cov(j["shift"]);
    r.shift_applied = j.at("shift_applied").get<bool>();
    if (j.contains("polyhedron")) r.polyhedron = polyhedron_from(j["polyhedron"]);
    if (j.contains("levels")) {
      std::vector<LevelEntry> ls;
      for (const auto& l : j["levels"]) {
        LevelEntry e;
        e.point = l.at("point").get<LatticePoint>();
        if (l.contains("energies_over_hbar"))
          for (const auto& x : l["energies_over_hbar"]) e.energies.push_back(rat(x));
        if (l.contains("total_energy_over_hbar")) e.total_energy = rat(l["total_energy_over_hbar"]);
        ls.push_back(std::move(e));
      }
      r.levels = std::move(ls);
    }
    if (j.contains("count")) r.count = j["count"].get<std::uint64_t>();
    for (const auto& ej : j.at("reductions")) {
      ReductionEntry e;
      e.level = ej.at("level").get<LatticePoint>();
      e.reduced_dim = ej.at("reduced_dim").get<std::int64_t>();
      e.statement = ej.at("statement").get<std::string>();
      if (ej.contains("successor")) {
        const auto& s = ej["successor"];
        e.successor_model = s.at("model").get<std::string>();
        if (s.contains("dim")) e.successor_dim = s["dim"].get<std::int64_t>();
        if (s.contains("kahler_scale_over_hbar")) e.successor_kahler_scale = rat(s["kahler_scale_over_hbar"]);
        if (s.contains("mpc_prequantizable")) e.successor_mpc_prequantizable = s["mpc_prequantizable"].get<bool>();
        if (s.contains("equivariant")) e.successor_equivariant = s["equivariant"].get<bool>();
      }
      r.reductions.push_back(std::move(e));
    }
    for (const auto& h : j.at("holonomy"))
      r.holonomy.push_back({cov(h.at("level")), h.at("xi").get<Generator>(), complex_from(h.at("numeric")),
                            complex_from(h.at("closed_form")), h.at("deviation").get<double>(),
                            h.at("trivial").get<bool>(), h.at("integral").get<bool>()});
    r.messages = j.at("messages").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::Schema, std::string("report: ") + e.what());
  }
}

namespace {

std::string fmt_complex(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.12f%+.12fi", z.real(), z.imag());
  return buf;
}

}  // namespace

std::string render_human(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "model: " << r.model << "\n";
  if (r.equivariance) {
    for (const auto& p : r.equivariance->points)
      out << "fixed point " << p.name << ": half-sum of weights " << to_string(p.half_sum) << ", defect "
          << to_string(p.defect) << "\n";
    out << "equivariant: " << (r.equivariance->overall ? "yes" : "no") << "\n";
    if (r.equivariance->suggested_shift) out << "suggested shift: " << to_string(*r.equivariance->suggested_shift) << "\n";
  }
  if (r.shift) out << (r.shift_applied ? "applied shift: " : "shift: ") << to_string(*r.shift) << "\n";
  if (r.polyhedron) {
    out << "momentum image vertices:";
    for (const auto& v : r.polyhedron->vertices()) out << " " << to_string(v);
    out << "\n";
    if (!r.polyhedron->rays().empty()) {
      out << "recession rays:";
      for (const auto& v : r.polyhedron->rays()) out << " " << to_string(v);
      out << "\n";
    }
  }
  if (r.levels) {
    out << "quantized levels (units of h):\n";
    for (const auto& l : *r.levels) {
      out << "  " << to_string(l.point);
      if (l.total_energy) out << "  E/hbar = " << to_string(*l.total_energy);
      if (l.energies.size() > 1) {
        out << " (";
        for (std::size_t i = 0; i < l.energies.size(); ++i) out << (i ? ", " : "") << to_string(l.energies[i]);
        out << ")";
      }
      out << "\n";
    }
  }
  if (r.count) out << "count: " << *r.count << "\n";
  for (const auto& e : r.reductions) {
    out << "reduction at " << to_string(e.level) << ": " << e.statement;
    if (e.successor_mpc_prequantizable)
      out << "; successor mpc-prequantizable: " << (*e.successor_mpc_prequantizable ? "yes" : "no");
    if (e.successor_equivariant) out << ", equivariant: " << (*e.successor_equivariant ? "yes" : "no");
    out << "\n";
  }
  if (!r.holonomy.empty()) {
    out << "level  xi  numeric  closed-form  |difference|  trivial  integral\n";
    for (const auto& h : r.holonomy) {
      char dev[32];
      std::snprintf(dev, sizeof dev, "%.3e", h.deviation);
      out << to_string(h.level) << "  " << to_string(h.xi) << "  " << fmt_complex(h.numeric) << "  "
          << fmt_complex(h.closed_form) << "  " << dev << "  " << (h.trivial ? "yes" : "no") << "  "
          << (h.integral ? "yes" : "no") << "\n";
    }
  }
  for (const auto& m : r.messages) out << m << "\n";
  if (r.verdict) out << "verdict: " << (*r.verdict ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace mpcq
