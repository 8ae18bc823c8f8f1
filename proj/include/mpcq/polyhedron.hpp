#pragma once

#include <optional>
#include <vector>

#include "mpcq/lattice.hpp"

namespace mpcq {

/// <normal, x> <= offset.
struct Halfspace {
  RatCovector normal;
  Rational offset;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

enum class Location { Interior, Boundary, Exterior };
std::string_view to_string(Location loc) noexcept;

/// Rational convex polyhedron in t* (units of h).
///
/// Holds a vertex/ray description, a halfspace description, or both. The
/// halfspace description is always present after construction except for a
/// bare vertex description at rank >= 3, which cannot be converted.
class MomentumPolyhedron {
 public:
  /// Exact convex hull of points plus recession rays. Supported for rank 1 and
  /// 2; throws Errc::RankUnsupported otherwise. Affinely dependent input yields
  /// a polyhedron flagged degenerate.
  static MomentumPolyhedron hull(std::size_t rank, const std::vector<RatCovector>& points,
                                 const std::vector<RatCovector>& rays = {});
  /// Halfspace description of any rank.
  static MomentumPolyhedron from_halfspaces(std::size_t rank, std::vector<Halfspace> halfspaces,
                                            bool degenerate = false);
  /// Both descriptions, supplied by a caller that knows they agree.
  static MomentumPolyhedron from_both(std::size_t rank, std::vector<RatCovector> vertices,
                                      std::vector<RatCovector> rays, std::vector<Halfspace> halfspaces,
                                      bool degenerate = false);
  /// Reassembles a polyhedron from serialized fields without recomputation.
  static MomentumPolyhedron from_parts(std::size_t rank, std::vector<RatCovector> vertices,
                                       std::vector<RatCovector> rays, std::vector<Halfspace> halfspaces,
                                       bool has_h_rep, bool degenerate);

  std::size_t rank() const noexcept { return rank_; }
  bool has_v_rep() const noexcept { return !vertices_.empty(); }
  bool has_h_rep() const noexcept { return h_rep_; }
  bool degenerate() const noexcept { return degenerate_; }
  const std::vector<RatCovector>& vertices() const noexcept { return vertices_; }
  const std::vector<RatCovector>& rays() const noexcept { return rays_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }

  bool bounded() const;
  /// Vertices from the halfspace description when no vertex list is stored.
  std::vector<RatCovector> compute_vertices() const;

  MomentumPolyhedron translated(const RatCovector& c) const;
  /// Image under x -> x B on t*.
  MomentumPolyhedron transformed(const UnimodularMatrix& b) const;

  friend bool operator==(const MomentumPolyhedron&, const MomentumPolyhedron&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<RatCovector> vertices_;
  std::vector<RatCovector> rays_;
  std::vector<Halfspace> halfspaces_;
  bool h_rep_ = false;
  bool degenerate_ = false;
};

}  // namespace mpcq
