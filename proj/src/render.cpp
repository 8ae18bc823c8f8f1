#include "mpcq/render.hpp"

#include <cstdio>
#include <sstream>

#include "mpcq/exact_linalg.hpp"

namespace mpcq {

std::vector<RatCovector> clip_to_box(const MomentumPolyhedron& p, const Rational& x0, const Rational& x1,
                                     const Rational& y0, const Rational& y1) {
  std::vector<RatCovector> poly{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  for (const auto& h : p.halfspaces()) {
    std::vector<RatCovector> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const RatCovector& a = poly[i];
      const RatCovector& b = poly[(i + 1) % poly.size()];
      const Rational fa = linalg::dot(h.normal, a) - h.offset;
      const Rational fb = linalg::dot(h.normal, b) - h.offset;
      if (fa <= 0) next.push_back(a);
      if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
        const Rational t = fa / (fa - fb);
        next.push_back(a + t * (b - a));
      }
    }
    poly = std::move(next);
    if (poly.empty()) break;
  }
  return poly;
}

namespace {

struct Frame {
  Rational x0, y0;
  double scale = 1.0;

  double px(const Rational& x) const { return kSvgMargin + Rational(x - x0).get_d() * scale; }
  double py(const Rational& y) const { return kSvgSize - kSvgMargin - Rational(y - y0).get_d() * scale; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const SystemData& s, const std::vector<QuantizedLevel>& levels,
                       const std::optional<Window>& window) {
  if (s.rank != 2) throw Error(Errc::RankUnsupported, "diagrams are drawn for rank-2 momentum images only");
  if (!s.polyhedron) throw Error(Errc::NoPolyhedron, "system has no momentum polyhedron");
  const MomentumPolyhedron& p = *s.polyhedron;

  Rational lo[2], hi[2];
  if (window) {
    if (window->rank() != 2) throw Error(Errc::RankMismatch, "window rank differs from 2");
    for (int i = 0; i < 2; ++i) {
      lo[i] = static_cast<long>(window->ranges[i].first);
      hi[i] = static_cast<long>(window->ranges[i].second);
    }
  } else {
    if (!p.bounded()) throw Error(Errc::UnboundedNeedsWindow, "unbounded momentum image needs a window to draw");
    const auto verts = p.compute_vertices();
    for (int i = 0; i < 2; ++i) {
      lo[i] = hi[i] = verts.front()[i];
      for (const auto& v : verts) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
      lo[i] = Rational(floor_of(lo[i]));
      hi[i] = Rational(ceil_of(hi[i]));
    }
  }
  for (int i = 0; i < 2; ++i)
    if (lo[i] == hi[i]) {
      lo[i] -= 1;
      hi[i] += 1;
    }
  const Rational span = std::max(Rational(hi[0] - lo[0]), Rational(hi[1] - lo[1]));
  Frame f;
  f.scale = (kSvgSize - 2 * kSvgMargin) / span.get_d();
  // Center the shorter axis in the square drawing area.
  f.x0 = lo[0] - (span - (hi[0] - lo[0])) / 2;
  f.y0 = lo[1] - (span - (hi[1] - lo[1])) / 2;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgSize << "\" height=\"" << kSvgSize
      << "\" viewBox=\"0 0 " << kSvgSize << " " << kSvgSize << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kSvgSize << "\" height=\"" << kSvgSize << "\" fill=\"white\"/>\n";

  out << "<g id=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (Integer g = ceil_of(f.x0); Rational(g) <= f.x0 + span; ++g)
    out << "<line x1=\"" << num(f.px(Rational(g))) << "\" y1=\"" << num(f.py(f.y0)) << "\" x2=\""
        << num(f.px(Rational(g))) << "\" y2=\"" << num(f.py(f.y0 + span)) << "\"/>\n";
  for (Integer g = ceil_of(f.y0); Rational(g) <= f.y0 + span; ++g)
    out << "<line x1=\"" << num(f.px(f.x0)) << "\" y1=\"" << num(f.py(Rational(g))) << "\" x2=\""
        << num(f.px(f.x0 + span)) << "\" y2=\"" << num(f.py(Rational(g))) << "\"/>\n";
  out << "</g>\n";

  const auto outline = clip_to_box(p, lo[0], hi[0], lo[1], hi[1]);
  if (!outline.empty()) {
    out << "<polygon id=\"polytope\" fill=\"#cfe2f3\" fill-opacity=\"0.6\" stroke=\"#1c4587\" stroke-width=\"2\" "
           "points=\"";
    for (std::size_t i = 0; i < outline.size(); ++i)
      out << (i ? " " : "") << num(f.px(outline[i][0])) << "," << num(f.py(outline[i][1]));
    out << "\"/>\n";
  }

  out << "<g id=\"levels\" fill=\"#cc0000\">\n";
  for (const auto& l : levels)
    out << "<circle class=\"level\" cx=\"" << num(f.px(Rational(static_cast<long>(l.point[0])))) << "\" cy=\""
        << num(f.py(Rational(static_cast<long>(l.point[1])))) << "\" r=\"5\"/>\n";
  out << "</g>\n";

  out << "<g id=\"fixed-points\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (const auto& z : s.fixed_points) {
    const double x = f.px(z.momentum[0]), y = f.py(z.momentum[1]);
    out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6) << "\">" << escape(z.name) << " "
        << escape(to_string(z.momentum)) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace mpcq
