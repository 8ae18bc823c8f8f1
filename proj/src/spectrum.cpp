#include "mpcq/spectrum.hpp"

#include "mpcq/equivariance.hpp"
#include "mpcq/exact_linalg.hpp"
#include "mpcq/models.hpp"

namespace mpcq {

bool Window::contains(std::span<const std::int64_t> p) const {
  if (p.size() != ranges.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < ranges[i].first || p[i] > ranges[i].second) return false;
  return true;
}

MomentumPolyhedron hull_from_fixed_points(const SystemData& s) {
  s.validate();
  std::vector<RatCovector> images;
  for (const auto& z : s.fixed_points) images.push_back(z.momentum);
  return MomentumPolyhedron::hull(s.rank, images, s.rays);
}

namespace {

// Halfspaces scaled to integer coefficients for fast evaluation at lattice points.
struct IntegerHalfspace {
  std::vector<Integer> normal;
  Integer offset;
};

std::vector<IntegerHalfspace> integer_halfspaces(const MomentumPolyhedron& p) {
  std::vector<IntegerHalfspace> out;
  for (const auto& h : p.halfspaces()) {
    Integer l = h.offset.get_den();
    for (const auto& a : h.normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    IntegerHalfspace ih;
    for (const auto& a : h.normal) ih.normal.push_back(Integer(a * Rational(l)));
    ih.offset = Integer(h.offset * Rational(l));
    out.push_back(std::move(ih));
  }
  return out;
}

bool strictly_inside(const std::vector<IntegerHalfspace>& hs, const LatticePoint& x) {
  Integer acc;
  for (const auto& h : hs) {
    acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += h.normal[i] * static_cast<long>(x[i]);
    if (acc >= h.offset) return false;
  }
  return true;
}

void require_h_rep(const MomentumPolyhedron& p) {
  if (!p.has_h_rep()) throw Error(Errc::RankUnsupported, "polyhedron has no halfspace description");
}

}  // namespace

Location classify_value(const MomentumPolyhedron& p, const RatCovector& x) {
  require_h_rep(p);
  if (x.rank() != p.rank()) throw Error(Errc::RankMismatch, "value rank differs from polyhedron rank");
  bool tight = false;
  for (const auto& h : p.halfspaces()) {
    const Rational v = linalg::dot(h.normal, x);
    if (v > h.offset) return Location::Exterior;
    if (v == h.offset) tight = true;
  }
  return tight ? Location::Boundary : Location::Interior;
}

namespace {

// Integer box containing every interior lattice point, intersected with the window.
std::optional<Window> scan_box(const MomentumPolyhedron& p, const std::optional<Window>& window) {
  const std::size_t k = p.rank();
  if (window && window->rank() != k) throw Error(Errc::RankMismatch, "window rank differs from polyhedron rank");
  Window box;
  if (p.bounded()) {
    const auto verts = p.compute_vertices();
    if (verts.empty()) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i) {
      Rational lo = verts[0][i], hi = verts[0][i];
      for (const auto& v : verts) {
        lo = std::min(lo, v[i]);
        hi = std::max(hi, v[i]);
      }
      box.ranges.emplace_back(to_int64(floor_of(lo) + 1), to_int64(ceil_of(hi) - 1));
    }
    if (window)
      for (std::size_t i = 0; i < k; ++i) {
        box.ranges[i].first = std::max(box.ranges[i].first, window->ranges[i].first);
        box.ranges[i].second = std::min(box.ranges[i].second, window->ranges[i].second);
      }
  } else {
    if (!window)
      throw Error(Errc::UnboundedNeedsWindow, "momentum image is unbounded; supply an integer window");
    box = *window;
  }
  for (const auto& [lo, hi] : box.ranges)
    if (lo > hi) return std::nullopt;
  return box;
}

template <typename Visit>
void scan(const MomentumPolyhedron& p, const std::optional<Window>& window, Visit&& visit) {
  require_h_rep(p);
  auto box = scan_box(p, window);
  if (!box) return;
  const auto hs = integer_halfspaces(p);
  const std::size_t k = p.rank();
  LatticePoint x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = box->ranges[i].first;
  // Odometer with the last coordinate fastest gives lexicographic order.
  while (true) {
    if (strictly_inside(hs, x)) visit(x);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (x[i] < box->ranges[i].second) {
        ++x[i];
        for (std::size_t j = i + 1; j < k; ++j) x[j] = box->ranges[j].first;
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

std::vector<QuantizedLevel> quantized_levels(const MomentumPolyhedron& p, const std::optional<Window>& window) {
  std::vector<QuantizedLevel> out;
  scan(p, window, [&](const LatticePoint& x) { out.push_back(QuantizedLevel{x}); });
  return out;
}

std::uint64_t count_levels(const MomentumPolyhedron& p) {
  if (!p.bounded()) throw Error(Errc::Unbounded, "cannot count levels of an unbounded polyhedron");
  std::uint64_t n = 0;
  scan(p, std::nullopt, [&](const LatticePoint&) { ++n; });
  return n;
}

ReductionReport reduction_report(const SystemData& s, const RatCovector& x) {
  if (!s.polyhedron) throw Error(Errc::NoPolyhedron, "system has no momentum polyhedron");
  if (!is_integral(x)) throw Error(Errc::NotQuantized, to_string(x) + " is not in the integer lattice");
  if (classify_value(*s.polyhedron, x) != Location::Interior)
    throw Error(Errc::NotQuantized, to_string(x) + " is not a regular (interior) value");
  if (!check_equivariance(s).overall)
    throw Error(Errc::NotQuantized, "momentum map is not shifted to an equivariant one; apply the shift first");
  if (!s.action_free_on_regular_levels.value)
    throw Error(Errc::ActionNotFree, "torus action is not asserted free on regular level sets");

  ReductionReport r;
  r.level = QuantizedLevel{to_lattice_point(x)};
  r.reduced_dim = 2 * (static_cast<std::int64_t>(s.dim) - static_cast<std::int64_t>(s.rank));
  if (r.reduced_dim == 0) {
    r.statement = "reduced space at " + to_string(x) +
                  " is a point carrying a metaplectic-c prequantization; the level has multiplicity one";
  } else {
    r.statement = "reduced space at " + to_string(x) + " has dimension " + std::to_string(r.reduced_dim) +
                  " and acquires a metaplectic-c prequantization from the quotient";
  }

  if (s.model == "oscillator_t1" && s.dim >= 2) {
    const int n = static_cast<int>(s.dim);
    // Energy of the level set is K = hbar (c - x); the quotient is CP^{n-1} with form K i varpi_FS.
    const Rational k_over_hbar = s.fixed_points.front().momentum[0] - x[0];
    const Rational excess = k_over_hbar - ratio(n, 2);
    SystemData succ;
    if (excess.get_den() == 1 && k_over_hbar > 0) {
      succ = projective_space(standard_projective(n - 1, to_int64(excess.get_num())));
    } else {
      // Outside the criterion: no projective builder applies, report the bare data.
      succ.model = "projective";
      succ.rank = succ.dim = static_cast<std::size_t>(n - 1);
      succ.kahler_scale = k_over_hbar;
    }
    succ.mpc_prequantizable = Flag{projective_mpc_criterion(n - 1, k_over_hbar),
                                   "K/hbar - n/2 integral for CP^{n-1} with K = hbar*" + to_string(k_over_hbar)};
    r.statement += "; quotient is CP^" + std::to_string(n - 1) + " with K = hbar*" + to_string(k_over_hbar);
    r.successor = std::move(succ);
  }
  return r;
}

}  // namespace mpcq
