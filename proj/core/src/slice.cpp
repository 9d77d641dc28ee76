#include "gtprobe/slice.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtprobe {

namespace {

bool inside(const HalfPlane& h, const Point2& p)
{
    return h.a * p.first + h.b * p.second >= h.c;
}

Rational cross(const Point2& o, const Point2& p, const Point2& q)
{
    return (p.first - o.first) * (q.second - o.second) - (p.second - o.second) * (q.first - o.first);
}

} // namespace

std::vector<Point2> polygon_from_halfplanes(const std::vector<HalfPlane>& halfplanes)
{
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < halfplanes.size(); ++i) {
        for (std::size_t j = i + 1; j < halfplanes.size(); ++j) {
            const auto& h = halfplanes[i];
            const auto& g = halfplanes[j];
            const Rational det = h.a * g.b - h.b * g.a;
            if (det.sign() == 0) continue;
            const Point2 p{(h.c * g.b - h.b * g.c) / det, (h.a * g.c - h.c * g.a) / det};
            if (std::all_of(halfplanes.begin(), halfplanes.end(), [&](const HalfPlane& k) { return inside(k, p); })) {
                pts.push_back(p);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;

    // Monotone chain; collinear points are dropped.
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

SliceResult slice_at_x3(const OrbitSpec& orbit, const Rational& x3)
{
    if (orbit.n() != 3) throw std::invalid_argument("slices are defined for SU(3) orbits only");
    const Rational& a = orbit.a();
    const Rational& b = orbit.b();
    const Rational zero(0);
    const Rational one(1);
    const Rational two(2);

    SliceResult out{orbit, x3, {}, std::nullopt, {}, {}};
    if (x3 < orbit.lambda().back() || x3 > orbit.lambda().front()) {
        out.warnings.push_back("x3 = " + x3.str() + " lies outside [" + orbit.lambda().back().str() + ", " +
                               orbit.lambda().front().str() + "]; slice is empty");
        return out;
    }

    const HPolytope p = su3_polytope(orbit);
    std::vector<HalfPlane> slice;
    for (const auto& h : p.halfspaces()) {
        const Rational na(h.normal[0]);
        const Rational nb(h.normal[1]);
        const Rational rest = h.offset - Rational(h.normal[2]) * x3;
        slice.push_back({na, nb, rest});
    }
    out.polygon = polygon_from_halfplanes(slice);
    if (out.polygon.empty()) {
        out.warnings.push_back("slice at x3 = " + x3.str() + " is empty");
        return out;
    }
    if (out.polygon.size() < 3) out.warnings.push_back("slice at x3 = " + x3.str() + " is degenerate");

    if (x3.sign() != 0) return out;

    if (const auto seg = w_set_segment(orbit)) {
        out.w_trace = std::make_pair(Point2{seg->lo, -seg->lo}, Point2{seg->hi, -seg->hi});
    }

    auto overlay = [&](const char* name, std::vector<HalfPlane> region) {
        region.insert(region.end(), slice.begin(), slice.end());
        auto poly = polygon_from_halfplanes(region);
        if (poly.size() >= 3) out.overlays.push_back({name, std::move(poly)});
    };
    if (b.sign() < 0) {
        // 0 < x1 < a, -a/2 < x2 < b
        overlay("fromf3", {{one, zero, zero}, {-one, zero, -a}, {zero, one, -a / two}, {zero, -one, -b}});
    }
    if (b.sign() > 0) {
        // b < x1 < (a+b)/2, -a-b < x2 < 0
        overlay("fromf2", {{one, zero, b}, {-one, zero, -(a + b) / two}, {zero, one, -a - b}, {zero, -one, zero}});
    }
    return out;
}

} // namespace gtprobe
