#include "gtprobe/probes.hpp"

#include <map>

namespace gtprobe {

namespace {

void require_facet(const HPolytope& p, std::size_t facet)
{
    if (facet >= p.size()) throw std::out_of_range("facet index out of range");
}

} // namespace

bool is_integrally_transverse(const HPolytope& p, std::size_t facet, const IntVector& alpha)
{
    require_facet(p, facet);
    if (alpha.size() != p.dim()) return false;
    return dot(p.halfspace(facet).normal, alpha) == 1;
}

Probe probe_from(const HPolytope& p, std::size_t facet, const RationalVector& w, const IntVector& alpha)
{
    require_facet(p, facet);
    if (!facet_relint_contains(p, facet, w)) {
        throw ProbeError("probe base " + w.str() + " is not in the relative interior of facet " + std::to_string(facet + 1));
    }
    if (!is_integrally_transverse(p, facet, alpha)) {
        throw ProbeError("direction " + alpha.str() + " is not integrally transverse to facet " + std::to_string(facet + 1));
    }
    std::optional<Rational> exit;
    for (const auto& h : p.halfspaces()) {
        const Integer rate = dot(h.normal, alpha);
        if (rate >= 0) continue;
        const Rational t = h.slack(w) / Rational(Integer(-rate));
        if (!exit || t < *exit) exit = t;
    }
    // A bounded polytope always has a halfspace the ray eventually leaves.
    if (!exit || exit->sign() <= 0) throw std::logic_error("probe has no positive exit parameter");
    return Probe{facet, w, alpha, *exit};
}

std::optional<Rational> ray_parameter(const Probe& probe, const RationalVector& u)
{
    if (u.size() != probe.base.size()) return std::nullopt;
    std::optional<Rational> t;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Rational diff = u[i] - probe.base[i];
        if (probe.direction[i] == 0) {
            if (diff.sign() != 0) return std::nullopt;
            continue;
        }
        const Rational ti = diff / Rational(probe.direction[i]);
        if (t && *t != ti) return std::nullopt;
        t = ti;
    }
    return t;
}

bool probe_displaces(const Probe& probe, const RationalVector& u)
{
    const auto t = ray_parameter(probe, u);
    if (!t) return false;
    return t->sign() > 0 && *t * Rational(2) < probe.t_exit;
}

bool validate_probe(const HPolytope& p, const Probe& probe)
{
    if (probe.facet >= p.size() || probe.base.size() != p.dim() || probe.direction.size() != p.dim()) return false;
    if (!facet_relint_contains(p, probe.facet, probe.base)) return false;
    if (!is_integrally_transverse(p, probe.facet, probe.direction)) return false;
    if (probe.t_exit.sign() <= 0) return false;
    // w is tight only on F and alpha leaves F, so with both endpoints in P the
    // open segment is interior. The exit point itself must be on the boundary.
    const auto exit_point = along(probe.base, probe.t_exit, probe.direction);
    const auto mid = along(probe.base, probe.t_exit / Rational(2), probe.direction);
    return contains(p, exit_point) && !interior_contains(p, exit_point) && interior_contains(p, mid);
}

std::pair<HPolytope, std::vector<Bound>> alpha_region(const HPolytope& p, std::size_t facet, const RationalVector& u)
{
    require_facet(p, facet);
    const Halfspace& f = p.halfspace(facet);
    const Rational t = f.slack(u);
    if (t.sign() <= 0) throw std::invalid_argument("alpha region needs a positive probe parameter");

    // (normal, offset) -> strict; a strict and a closed copy merge to strict.
    std::map<std::pair<IntVector, Rational>, bool> rows;
    std::vector<std::pair<IntVector, Rational>> order;
    auto add = [&](IntVector normal, Rational offset, bool strict) {
        auto key = std::make_pair(std::move(normal), std::move(offset));
        auto it = rows.find(key);
        if (it == rows.end()) {
            order.push_back(key);
            rows.emplace(std::move(key), strict);
        } else {
            it->second = it->second || strict;
        }
    };

    add(f.normal, Rational(1), false);
    add(-f.normal, Rational(-1), false);
    for (std::size_t g = 0; g < p.size(); ++g) {
        if (g == facet) continue;
        const Halfspace& h = p.halfspace(g);
        const Rational s = h.slack(u) / t;
        add(h.normal, -s, true);  // u + t*alpha strictly inside h
        add(-h.normal, -s, true); // u - t*alpha strictly inside h
    }

    std::vector<Halfspace> hs;
    std::vector<Bound> strictness;
    hs.reserve(order.size());
    for (const auto& key : order) {
        hs.push_back({key.first, key.second});
        strictness.push_back(rows.at(key) ? Bound::Strict : Bound::Closed);
    }
    return {HPolytope(p.dim(), std::move(hs), HPolytope::Shape::AllowDegenerate), std::move(strictness)};
}

std::vector<RationalVector> non_smooth_vertices(const HPolytope& p)
{
    std::vector<RationalVector> out;
    for (const auto& v : p.vertices()) {
        if (!is_smooth_vertex(p, v)) out.push_back(v);
    }
    return out;
}

FacetFeasibility facet_feasibility(const HPolytope& p, std::size_t facet, const RationalVector& u, bool stop_at_first)
{
    require_facet(p, facet);
    FacetFeasibility rec;
    rec.facet = facet;
    rec.t = p.halfspace(facet).slack(u);
    if (rec.t.sign() < 0) throw std::invalid_argument("point is outside the polytope");
    if (rec.t.sign() == 0) {
        rec.on_facet = true;
        return rec;
    }
    auto [region, strictness] = alpha_region(p, facet, u);
    rec.bbox = integer_bounding_box(region);
    for_each_lattice_point(region, strictness, [&](const IntVector& alpha) {
        rec.lattice_points.push_back(alpha);
        return !stop_at_first;
    });
    for (const auto& v : non_smooth_vertices(p)) {
        // alpha sending w = u - t*alpha or u + t*alpha onto v
        const RationalVector to_v = v - u;
        const RationalVector plus = (Rational(1) / rec.t) * to_v;
        const RationalVector minus = (Rational(-1) / rec.t) * to_v;
        if (contains(region, plus) || contains(region, minus)) {
            rec.touches_non_smooth_vertex = true;
        }
    }
    rec.region = std::move(region);
    rec.strictness = std::move(strictness);
    return rec;
}

std::optional<ProbeWitness> displacing_probe_search(const HPolytope& p, const RationalVector& u)
{
    if (!interior_contains(p, u)) throw std::invalid_argument("probe search needs a point in the interior: " + u.str());
    for (std::size_t f = 0; f < p.size(); ++f) {
        const Rational t = p.halfspace(f).slack(u);
        auto [region, strictness] = alpha_region(p, f, u);
        std::optional<IntVector> hit;
        for_each_lattice_point(region, strictness, [&](const IntVector& alpha) {
            hit = alpha;
            return false;
        });
        if (!hit) continue;
        const RationalVector w = along(u, -t, *hit);
        ProbeWitness witness{probe_from(p, f, w, *hit), u, t};
        if (!probe_displaces(witness.probe, u)) {
            throw std::logic_error("alpha region produced a non-displacing probe at " + u.str());
        }
        return witness;
    }
    return std::nullopt;
}

ProbeCertificate certify_not_probe_displaceable(const HPolytope& p, const RationalVector& u)
{
    if (!contains(p, u)) throw std::invalid_argument("point is not in the polytope: " + u.str());
    ProbeCertificate cert{u, {}};
    for (std::size_t f = 0; f < p.size(); ++f) {
        auto rec = facet_feasibility(p, f, u);
        if (!rec.lattice_points.empty()) throw std::invalid_argument("point is probe-displaceable");
        cert.facets.push_back(std::move(rec));
    }
    return cert;
}

} // namespace gtprobe
