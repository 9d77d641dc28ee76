#pragma once

// Planar slices P ∩ {x3 = c} of the SU(3) GT polytope, as exact polygons in
// the (x1, x2) plane. Emitted as data for external plotting.

#include "gtprobe/gt_polytope.hpp"
#include "gtprobe/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtprobe {

using Point2 = std::pair<Rational, Rational>;

/// a*x + b*y >= c
struct HalfPlane {
    Rational a;
    Rational b;
    Rational c;
};

/// Vertices of the bounded intersection of half-planes, counter-clockwise,
/// starting at the lexicographically smallest vertex. A degenerate result
/// has one or two vertices; an empty one has none.
std::vector<Point2> polygon_from_halfplanes(const std::vector<HalfPlane>& halfplanes);

struct SliceOverlay {
    std::string name;
    std::vector<Point2> polygon; ///< closure of the open region
};

struct SliceResult {
    OrbitSpec orbit;
    Rational x3;
    std::vector<Point2> polygon;
    /// The W segment {(x1, -x1)} inside the slice; only at x3 = 0.
    std::optional<std::pair<Point2, Point2>> w_trace;
    std::vector<SliceOverlay> overlays;
    std::vector<std::string> warnings;
};

/// Throws std::invalid_argument for n != 3.
SliceResult slice_at_x3(const OrbitSpec& orbit, const Rational& x3);

} // namespace gtprobe
