#include "mpcq/polyhedron.hpp"

#include <algorithm>
#include <functional>

#include "mpcq/exact_linalg.hpp"

namespace mpcq {

std::string_view to_string(Location loc) noexcept {
  switch (loc) {
    case Location::Interior: return "interior";
    case Location::Boundary: return "boundary";
    case Location::Exterior: return "exterior";
  }
  return "?";
}

namespace {

void push_unique(std::vector<RatCovector>& out, RatCovector v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
}

void check_rank(std::size_t rank, const std::vector<RatCovector>& vs, const char* what) {
  for (const auto& v : vs)
    if (v.rank() != rank) throw Error(Errc::RankMismatch, std::string(what) + " has wrong rank");
}

// Calls f on every size-m subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t m, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(m);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == m) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (m - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

MomentumPolyhedron MomentumPolyhedron::hull(std::size_t rank, const std::vector<RatCovector>& points,
                                            const std::vector<RatCovector>& rays) {
  if (rank == 0 || rank > 2)
    throw Error(Errc::RankUnsupported, "exact hull is implemented for rank 1 and 2 only; supply halfspaces");
  if (points.empty()) throw Error(Errc::Schema, "polyhedron needs at least one point");
  check_rank(rank, points, "hull point");
  check_rank(rank, rays, "recession ray");

  std::vector<RatCovector> pts, dirs_rays;
  for (const auto& p : points) push_unique(pts, p);
  for (const auto& r : rays)
    if (!r.is_zero()) push_unique(dirs_rays, linalg::primitive(r));

  std::vector<RatCovector> dirs;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) dirs.push_back(pts[j] - pts[i]);
  for (const auto& r : dirs_rays) dirs.push_back(r);
  for (std::size_t i = 0; i < rank; ++i) {
    RatCovector e = RatCovector::zero(rank);
    e[i] = 1;
    dirs.push_back(std::move(e));
  }

  std::vector<RatCovector> normals;
  for (const auto& d : dirs) {
    push_unique(normals, linalg::primitive(d));
    push_unique(normals, linalg::primitive(-d));
    if (rank == 2) {
      RatCovector perp{-d[1], d[0]};
      push_unique(normals, linalg::primitive(perp));
      push_unique(normals, linalg::primitive(-perp));
    }
  }

  std::vector<RatCovector> spread;
  for (std::size_t i = 1; i < pts.size(); ++i) spread.push_back(pts[i] - pts[0]);
  for (const auto& r : dirs_rays) spread.push_back(r);
  const bool degenerate = linalg::rank(spread) < rank;

  // Valid supporting halfspaces among the candidates.
  std::vector<Halfspace> valid;
  for (const auto& a : normals) {
    bool ok = true;
    for (const auto& r : dirs_rays)
      if (linalg::dot(a, r) > 0) ok = false;
    if (!ok) continue;
    Rational best = linalg::dot(a, pts[0]);
    for (const auto& p : pts) best = std::max(best, linalg::dot(a, p));
    valid.push_back({a, best});
  }

  MomentumPolyhedron out;
  out.rank_ = rank;
  out.degenerate_ = degenerate;
  out.h_rep_ = true;
  out.rays_ = dirs_rays;

  for (const auto& h : valid) {
    if (degenerate) {
      out.halfspaces_.push_back(h);
      continue;
    }
    std::size_t tight_points = 0;
    bool tight_ray = false;
    for (const auto& p : pts)
      if (linalg::dot(h.normal, p) == h.offset) ++tight_points;
    for (const auto& r : dirs_rays)
      if (linalg::dot(h.normal, r) == 0) tight_ray = true;
    const bool facet = rank == 1 ? tight_points >= 1 : (tight_points >= 2 || (tight_points >= 1 && tight_ray));
    if (facet) out.halfspaces_.push_back(h);
  }

  for (const auto& p : pts) {
    std::vector<RatCovector> tight;
    for (const auto& h : valid)
      if (linalg::dot(h.normal, p) == h.offset) tight.push_back(h.normal);
    if (linalg::rank(tight) == rank) out.vertices_.push_back(p);
  }
  if (out.vertices_.empty()) out.vertices_.push_back(pts[0]);
  return out;
}

MomentumPolyhedron MomentumPolyhedron::from_halfspaces(std::size_t rank, std::vector<Halfspace> halfspaces,
                                                       bool degenerate) {
  if (rank == 0) throw Error(Errc::Schema, "polyhedron rank must be positive");
  for (const auto& h : halfspaces) {
    if (h.normal.rank() != rank) throw Error(Errc::RankMismatch, "halfspace normal has wrong rank");
    if (h.normal.is_zero()) throw Error(Errc::Schema, "halfspace normal is zero");
  }
  MomentumPolyhedron out;
  out.rank_ = rank;
  out.halfspaces_ = std::move(halfspaces);
  out.h_rep_ = true;
  out.degenerate_ = degenerate;
  if (!degenerate && out.bounded()) {
    auto verts = out.compute_vertices();
    if (verts.empty()) throw Error(Errc::Schema, "halfspace description is empty");
    std::vector<RatCovector> spread;
    for (std::size_t i = 1; i < verts.size(); ++i) spread.push_back(verts[i] - verts[0]);
    out.degenerate_ = linalg::rank(spread) < rank;
  }
  return out;
}

MomentumPolyhedron MomentumPolyhedron::from_both(std::size_t rank, std::vector<RatCovector> vertices,
                                                 std::vector<RatCovector> rays, std::vector<Halfspace> halfspaces,
                                                 bool degenerate) {
  check_rank(rank, vertices, "vertex");
  check_rank(rank, rays, "recession ray");
  if (vertices.empty()) throw Error(Errc::Schema, "polyhedron needs at least one vertex");
  MomentumPolyhedron out;
  out.rank_ = rank;
  out.vertices_ = std::move(vertices);
  out.rays_ = std::move(rays);
  out.halfspaces_ = std::move(halfspaces);
  out.h_rep_ = true;
  out.degenerate_ = degenerate;
  return out;
}

MomentumPolyhedron MomentumPolyhedron::from_parts(std::size_t rank, std::vector<RatCovector> vertices,
                                                  std::vector<RatCovector> rays, std::vector<Halfspace> halfspaces,
                                                  bool has_h_rep, bool degenerate) {
  check_rank(rank, vertices, "vertex");
  check_rank(rank, rays, "recession ray");
  MomentumPolyhedron out;
  out.rank_ = rank;
  out.vertices_ = std::move(vertices);
  out.rays_ = std::move(rays);
  out.halfspaces_ = std::move(halfspaces);
  out.h_rep_ = has_h_rep;
  out.degenerate_ = degenerate;
  return out;
}

bool MomentumPolyhedron::bounded() const {
  if (has_v_rep()) return rays_.empty();
  std::vector<RatCovector> normals;
  for (const auto& h : halfspaces_) normals.push_back(h.normal);
  if (linalg::rank(normals) < rank_) return false;
  // The recession cone {d : <a, d> <= 0} is pointed; it is nonzero iff it has
  // an extreme ray, which is cut out by rank-1 tight constraints.
  bool unbounded = false;
  for_each_subset(normals.size(), rank_ - 1, [&](const std::vector<std::size_t>& idx) {
    if (unbounded) return;
    std::vector<RatCovector> rows;
    for (auto i : idx) rows.push_back(normals[i]);
    auto ns = linalg::null_space(rows, rank_);
    if (ns.size() != 1) return;
    for (const auto& d : {ns[0], -ns[0]}) {
      bool inside = true;
      for (const auto& a : normals)
        if (linalg::dot(a, d) > 0) inside = false;
      if (inside) unbounded = true;
    }
  });
  return !unbounded;
}

std::vector<RatCovector> MomentumPolyhedron::compute_vertices() const {
  if (has_v_rep()) return vertices_;
  std::vector<RatCovector> out;
  for_each_subset(halfspaces_.size(), rank_, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatCovector> rows;
    RatCovector rhs = RatCovector::zero(rank_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      rows.push_back(halfspaces_[idx[i]].normal);
      rhs[i] = halfspaces_[idx[i]].offset;
    }
    auto x = linalg::solve(rows, rhs);
    if (!x) return;
    for (const auto& h : halfspaces_)
      if (linalg::dot(h.normal, *x) > h.offset) return;
    push_unique(out, *x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

MomentumPolyhedron MomentumPolyhedron::translated(const RatCovector& c) const {
  MomentumPolyhedron out = *this;
  for (auto& v : out.vertices_) v += c;
  for (auto& h : out.halfspaces_) h.offset += linalg::dot(h.normal, c);
  return out;
}

MomentumPolyhedron MomentumPolyhedron::transformed(const UnimodularMatrix& b) const {
  MomentumPolyhedron out = *this;
  for (auto& v : out.vertices_) v = unimodular_transform(v, b);
  for (auto& r : out.rays_) r = unimodular_transform(r, b);
  const UnimodularMatrix inv = b.inverse();
  for (auto& h : out.halfspaces_) {
    RatCovector a = RatCovector::zero(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c) a[r] += Rational(static_cast<long>(inv(r, c))) * h.normal[c];
    h.normal = std::move(a);
  }
  return out;
}

}  // namespace mpcq
