#include "mpcq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "mpcq/document.hpp"
#include "mpcq/equivariance.hpp"
#include "mpcq/holonomy.hpp"
#include "mpcq/models.hpp"
#include "mpcq/render.hpp"
#include "mpcq/report.hpp"
#include "mpcq/spectrum.hpp"

namespace mpcq {

namespace {

struct Options {
  std::string input;
  std::string window;
  std::string output;
  std::string format = "human";
  int steps = 1000;
};

// A negative verdict discovered mid-command; carries the partial report.
struct Negative {
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw Error(Errc::Schema, "--input <file> is required");
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Schema, "cannot read input file " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::optional<Window> effective_window(const Options& opts, const InputDocument& doc) {
  if (!opts.window.empty()) return parse_window(opts.window);
  return doc.window;
}

// Applies the canonical shift when the momentum map is not yet equivariant.
SystemData equivariant_system(const SystemData& s, Report& r) {
  if (!s.mpc_prequantizable.value) throw Negative{"system is not metaplectic-c prequantizable"};
  const auto eq = check_equivariance(s);
  if (eq.overall) return s;
  const RatCovector c = solve_shift(s);
  r.shift = c;
  r.shift_applied = true;
  r.messages.push_back("momentum map shifted by " + to_string(c) + " (units of h) to make it equivariant");
  return s.shifted(c);
}

LevelEntry level_entry(const SystemData& s, const QuantizedLevel& q) {
  LevelEntry e{q.point, {}, std::nullopt};
  if (s.model == "oscillator_t1" || s.model == "oscillator_tn") {
    e.energies = oscillator_energies(s, RatCovector::from_integers(q.point));
    Rational total = 0;
    for (const auto& x : e.energies) total += x;
    e.total_energy = total;
  }
  return e;
}

int cmd_check(const SystemData& s, Report& r) {
  try {
    r.equivariance = check_equivariance(s);
  } catch (const Error& e) {
    if (e.code() != Errc::NotPrequantizable) throw;
    r.messages.push_back(e.what());
    r.verdict = false;
    return kExitNegative;
  }
  r.verdict = r.equivariance->overall;
  return *r.verdict ? kExitOk : kExitNegative;
}

int cmd_shift(const SystemData& s, Report& r) {
  try {
    r.shift = solve_shift(s);
    r.verdict = true;
    return kExitOk;
  } catch (const Error& e) {
    if (e.code() != Errc::InconsistentDefects) throw;
    EquivarianceReport eq;
    for (const auto& z : s.fixed_points) eq.points.push_back({z.name, half_sum(z), defect(z)});
    r.equivariance = std::move(eq);
    r.messages.push_back(e.what());
    r.verdict = false;
    return kExitNegative;
  }
}

int cmd_levels(const SystemData& input, const std::optional<Window>& window, Report& r) {
  const SystemData s = equivariant_system(input, r);
  if (!s.polyhedron) throw Error(Errc::NoPolyhedron, "system has no momentum polyhedron; supply one");
  r.polyhedron = s.polyhedron;
  std::vector<QuantizedLevel> levels;
  try {
    levels = quantized_levels(*s.polyhedron, window);
  } catch (const Error& e) {
    if (e.code() == Errc::UnboundedNeedsWindow)
      throw Error(Errc::UnboundedNeedsWindow, "the spectrum is infinite; restrict it with --window lo,hi[xlo,hi...]");
    throw;
  }
  std::vector<LevelEntry> entries;
  for (const auto& q : levels) {
    entries.push_back(level_entry(s, q));
    if (s.action_free_on_regular_levels.value)
      r.reductions.push_back(to_entry(reduction_report(s, RatCovector::from_integers(q.point))));
  }
  r.count = entries.size();
  r.levels = std::move(entries);
  r.verdict = true;
  return kExitOk;
}

std::vector<RatCovector> half_integer_grid(const Window& w) {
  std::vector<std::vector<Rational>> axes;
  for (const auto& [lo, hi] : w.ranges) {
    std::vector<Rational> axis;
    for (Rational x = static_cast<long>(lo); x <= Rational(static_cast<long>(hi)); x += Rational(1, 2)) axis.push_back(x);
    axes.push_back(std::move(axis));
  }
  std::vector<RatCovector> out{RatCovector{}};
  for (const auto& axis : axes) {
    std::vector<RatCovector> next;
    for (const auto& prefix : out)
      for (const auto& x : axis) {
        std::vector<Rational> e(prefix.begin(), prefix.end());
        e.push_back(x);
        next.emplace_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

int cmd_holonomy(const SystemData& input, const std::optional<Window>& window, const InputDocument& doc,
                 const Options& opts, Report& r) {
  if (input.model != "oscillator_t1" && input.model != "oscillator_tn")
    throw Error(Errc::UnsupportedModel, "holonomy is available for oscillator models only");
  const SystemData s = equivariant_system(input, r);
  Window w;
  if (window) {
    w = *window;
  } else {
    w.ranges.assign(s.rank, {-2, 2});
  }
  if (w.rank() != s.rank) throw Error(Errc::RankMismatch, "window rank differs from torus rank");
  const double h = doc.planck_constant();
  bool all_ok = true;
  for (const auto& x : half_integer_grid(w)) {
    if (classify_value(*s.polyhedron, x) != Location::Interior) continue;
    OrbitSpec spec{s, base_point_on_level(s, x, h), {}, x, opts.steps, h};
    for (std::size_t j = 0; j < s.rank; ++j) {
      spec.xi.assign(s.rank, 0);
      spec.xi[j] = 1;
      HolonomyRow row;
      row.level = x;
      row.xi = spec.xi;
      row.numeric = numeric_mpc_holonomy(spec);
      row.closed_form = closed_form_holonomy(x, spec.xi);
      row.deviation = std::abs(row.numeric - row.closed_form);
      row.trivial = std::abs(row.numeric - 1.0) < 1e-6;
      row.integral = pairing(x, spec.xi).get_den() == 1;
      all_ok = all_ok && row.deviation < 1e-9 && row.trivial == row.integral;
      r.holonomy.push_back(std::move(row));
    }
  }
  r.verdict = all_ok;
  return all_ok ? kExitOk : kExitNegative;
}

int cmd_render(const SystemData& input, const std::optional<Window>& window, const Options& opts, Report& r,
               std::ostream& out, bool& report_written) {
  if (input.rank != 2) throw Error(Errc::RankUnsupported, "render needs a rank-2 torus action");
  const SystemData s = equivariant_system(input, r);
  if (!s.polyhedron) throw Error(Errc::NoPolyhedron, "system has no momentum polyhedron; supply one");
  const auto levels = quantized_levels(*s.polyhedron, window);
  const std::string svg = render_svg(s, levels, window);
  if (opts.output.empty()) {
    out << svg;
    report_written = true;
  } else {
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) throw Error(Errc::Schema, "cannot write " + opts.output);
    file << svg;
    r.messages.push_back("wrote " + opts.output);
  }
  r.count = levels.size();
  r.verdict = true;
  return kExitOk;
}

const char* kCatalog =
    "oscillator_t1  {\"type\": \"oscillator_t1\", \"n\": <int>, \"shifted\": <bool>}\n"
    "               circle acting diagonally on C^n\n"
    "oscillator_tn  {\"type\": \"oscillator_tn\", \"n\": <int>, \"shifted\": <bool>}\n"
    "               n-torus acting componentwise on C^n\n"
    "projective     {\"type\": \"projective\", \"n\": <int>, \"N\": <int>, \"weight_basis\": [[...]], "
    "\"constant\": [\"p/q\", ...]}\n"
    "               CP^n with K = hbar(N + (n+1)/2) and a linear torus action\n";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Equivariant metaplectic-c quantization of torus actions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", opts.input, "input document (JSON), '-' for stdin");
  app.add_option("--window", opts.window, "integer window lo,hi per axis joined by 'x'");
  app.add_option("--steps", opts.steps, "quadrature steps for holonomy")->check(CLI::Range(16, 10000000));
  app.add_option("--output", opts.output, "output file for render");
  app.add_option("--format", opts.format, "report format")->check(CLI::IsMember({"human", "machine"}));
  auto* check = app.add_subcommand("check", "test the equivariance condition at every fixed point");
  auto* shift = app.add_subcommand("shift", "canonical momentum shift making the prequantization equivariant");
  auto* levels = app.add_subcommand("levels", "quantized energy levels");
  auto* holonomy = app.add_subcommand("holonomy", "orbit holonomy table for oscillator models");
  auto* render = app.add_subcommand("render", "SVG diagram of a rank-2 momentum image");
  auto* models = app.add_subcommand("models", "list models, or expand --input to explicit data");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Report r;
  bool report_written = false;
  int code = kExitOk;
  try {
    if (models->parsed() && opts.input.empty()) {
      if (opts.format == "machine") {
        out << nlohmann::json({"oscillator_t1", "oscillator_tn", "projective"}).dump() << "\n";
      } else {
        out << kCatalog;
      }
      return kExitOk;
    }
    const InputDocument doc = parse_document(read_input(opts.input));
    const auto window = effective_window(opts, doc);
    const SystemData s = doc.build();
    r.model = s.model;
    if (models->parsed()) {
      InputDocument expanded;
      expanded.explicit_system = to_explicit(s);
      expanded.planck_h = doc.planck_h;
      expanded.window = doc.window;
      out << serialize(expanded);
      return kExitOk;
    }
    if (check->parsed()) {
      r.command = "check";
      code = cmd_check(s, r);
    } else if (shift->parsed()) {
      r.command = "shift";
      code = cmd_shift(s, r);
    } else if (levels->parsed()) {
      r.command = "levels";
      code = cmd_levels(s, window, r);
    } else if (holonomy->parsed()) {
      r.command = "holonomy";
      code = cmd_holonomy(s, window, doc, opts, r);
    } else if (render->parsed()) {
      r.command = "render";
      code = cmd_render(s, window, opts, r, out, report_written);
    }
  } catch (const Negative& n) {
    r.messages.push_back(n.message);
    r.verdict = false;
    code = kExitNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!report_written) {
    if (opts.format == "machine")
      out << to_json(r).dump(2) << "\n";
    else
      out << render_human(r);
  }
  return code;
}

}  // namespace mpcq
