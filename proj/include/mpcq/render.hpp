#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpcq/spectrum.hpp"
#include "mpcq/system.hpp"

namespace mpcq {

inline constexpr int kSvgSize = 800;
inline constexpr int kSvgMargin = 80;  // 10% of the canvas

/// 800x800 SVG of a rank-2 momentum image: outline (clipped to the window if
/// unbounded), integer grid, quantized levels as filled markers and labelled
/// fixed-point images. Throws Errc::RankUnsupported unless rank == 2.
std::string render_svg(const SystemData& s, const std::vector<QuantizedLevel>& levels,
                       const std::optional<Window>& window);

/// Polygon of p intersected with the axis box [x0,x1] x [y0,y1].
std::vector<RatCovector> clip_to_box(const MomentumPolyhedron& p, const Rational& x0, const Rational& x1,
                                     const Rational& y0, const Rational& y1);

}  // namespace mpcq
