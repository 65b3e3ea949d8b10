#ifndef FLATBAND_HULL_HPP
#define FLATBAND_HULL_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace flatband {

using Point = std::vector<std::int64_t>;
using Point2 = std::array<std::int64_t, 2>;

/// Exact membership of `p` in conv(points) by a phase-one simplex over Q
/// with Bland's rule. Works in any dimension.
bool in_convex_hull(std::span<const std::int64_t> p, std::span<const Point> points);

/// Points of the input that are extreme in its convex hull, sorted and
/// deduplicated.
std::vector<Point> hull_vertices(std::span<const Point> points);

/// Convex hull of planar integer points, counter-clockwise from the
/// lexicographically smallest point, collinear points dropped. A single
/// point or a segment's two endpoints are returned for degenerate input.
std::vector<Point2> convex_hull_2d(std::vector<Point2> points);

}  // namespace flatband

#endif
