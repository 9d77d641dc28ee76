#include "gtprobe/checker.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

namespace gtprobe {

namespace {

HPolytope polytope_of(const json& j)
{
    if (j.contains("polytope")) return polytope_from_json(j.at("polytope"));
    if (j.contains("lambda")) return resolve_polytope(orbit_from_json(j.at("lambda")));
    throw std::invalid_argument("document names neither \"lambda\" nor \"polytope\"");
}

using RegionRow = std::tuple<IntVector, Rational, bool>;

// Alpha-region constraints derived directly from the probe conditions:
// pairing 1 with the facet normal, u - t*alpha inside every other facet and
// u + t*alpha inside every facet, all strictly.
std::set<RegionRow> expected_region(const HPolytope& p, std::size_t facet, const RationalVector& u, const Rational& t)
{
    std::set<RegionRow> rows;
    auto add = [&](const IntVector& n, const Rational& c, bool strict) {
        // a closed and a strict copy of the same row intersect to the strict one
        if (strict) rows.erase({n, c, false});
        if (!strict && rows.count({n, c, true})) return;
        rows.insert({n, c, strict});
    };
    const auto& f = p.halfspace(facet);
    add(f.normal, Rational(1), false);
    add(-f.normal, Rational(-1), false);
    for (std::size_t g = 0; g < p.size(); ++g) {
        if (g == facet) continue;
        const auto& h = p.halfspace(g);
        const Rational s = h.slack(u) / t;
        add(h.normal, -s, true);
        add(-h.normal, -s, true);
    }
    return rows;
}

std::string where(const json& j)
{
    return j.contains("point") ? " at point " + j.at("point").dump() : std::string();
}

void check_facet_record(const HPolytope& p, const RationalVector& u, const json& rec, std::size_t facet,
                        CheckOutcome& out, const std::string& ctx)
{
    const std::string tag = ctx + " facet " + facet_name(facet) + ": ";
    const Rational t = rational_from_json(rec.at("t"));
    if (t != p.halfspace(facet).slack(u)) {
        out.errors.push_back(tag + "recorded t does not match the facet slack");
        return;
    }
    if (!rec.at("lattice_points").empty()) {
        out.errors.push_back(tag + "lattice point list is not empty");
        return;
    }
    if (t.sign() == 0) {
        if (!rec.value("on_facet", false)) out.errors.push_back(tag + "t = 0 but record is not marked on_facet");
        return;
    }
    const json& region_json = rec.at("alpha_region");
    if (region_json.is_null()) {
        out.errors.push_back(tag + "missing alpha region");
        return;
    }

    std::set<RegionRow> recorded;
    const auto& strict = region_json.at("strict");
    const auto& hs = region_json.at("halfspaces");
    if (strict.size() != hs.size()) {
        out.errors.push_back(tag + "strictness flags do not match halfspaces");
        return;
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
        recorded.insert({int_vector_from_json(hs[i].at("normal")), rational_from_json(hs[i].at("offset")),
                         strict[i].get<bool>()});
    }
    if (recorded != expected_region(p, facet, u, t)) {
        out.errors.push_back(tag + "alpha region differs from the one implied by the probe conditions");
        return;
    }

    // The box must cover the closed region.
    const HPolytope closure = polytope_from_json(region_json, HPolytope::Shape::AllowDegenerate);
    const auto& box_json = rec.at("bbox");
    if (closure.vertices().empty()) {
        return; // closed region empty: nothing to scan
    }
    std::vector<std::pair<Integer, Integer>> box;
    for (const auto& r : box_json) box.emplace_back(integer_from_json(r.at(0)), integer_from_json(r.at(1)));
    if (box.empty()) {
        // Empty box is valid only if some coordinate range has no integer.
        for (std::size_t k = 0; k < p.dim(); ++k) {
            Rational lo = closure.vertices().front()[k];
            Rational hi = lo;
            for (const auto& v : closure.vertices()) {
                lo = std::min(lo, v[k]);
                hi = std::max(hi, v[k]);
            }
            if (lo.ceil() > hi.floor()) return;
        }
        out.errors.push_back(tag + "empty bbox recorded for a region whose coordinate ranges contain integers");
        return;
    }
    if (box.size() != p.dim()) {
        out.errors.push_back(tag + "bbox has the wrong dimension");
        return;
    }
    for (const auto& v : closure.vertices()) {
        for (std::size_t k = 0; k < p.dim(); ++k) {
            if (v[k].ceil() < box[k].first) {
                out.errors.push_back(tag + "region vertex below the recorded box");
                return;
            }
            if (v[k].floor() > box[k].second) {
                out.errors.push_back(tag + "region vertex above the recorded box");
                return;
            }
        }
    }

    Integer volume = 1;
    for (const auto& [lo, hi] : box) {
        if (hi < lo) return;
        volume *= hi - lo + 1;
    }
    if (volume > Integer(static_cast<long>(kMaxCheckerBox))) {
        out.errors.push_back(tag + "bbox too large to re-scan (" + volume.get_str() + " points)");
        return;
    }

    // Try every integer direction in the box as an actual probe.
    const auto& normal = p.halfspace(facet).normal;
    IntVector alpha(p.dim());
    for (std::size_t k = 0; k < p.dim(); ++k) alpha[k] = box[k].first;
    while (true) {
        if (dot(normal, alpha) == 1) {
            const RationalVector w = along(u, -t, alpha);
            if (facet_relint_contains(p, facet, w)) {
                const Probe probe = probe_from(p, facet, w, alpha);
                if (probe_displaces(probe, u)) {
                    out.errors.push_back(tag + "direction " + alpha.str() + " gives a displacing probe");
                    return;
                }
            }
        }
        std::size_t k = p.dim();
        while (k > 0) {
            --k;
            if (alpha[k] < box[k].second) {
                ++alpha[k];
                for (std::size_t r = k + 1; r < p.dim(); ++r) alpha[r] = box[r].first;
                break;
            }
            if (k == 0) return;
        }
    }
}

} // namespace

void CheckOutcome::merge(const CheckOutcome& other)
{
    witnesses += other.witnesses;
    certificates += other.certificates;
    errors.insert(errors.end(), other.errors.begin(), other.errors.end());
}

CheckOutcome check_witness_json(const json& j)
{
    CheckOutcome out;
    out.witnesses = 1;
    const std::string ctx = "witness" + where(j);
    try {
        const HPolytope p = polytope_of(j);
        const RationalVector u = rational_vector_from_json(j.at("point"));
        const std::size_t facet = facet_index_from_name(j.at("facet").get<std::string>());
        const RationalVector w = rational_vector_from_json(j.at("w"));
        const IntVector alpha = int_vector_from_json(j.at("alpha"));
        const Rational t_exit = rational_from_json(j.at("t_exit"));
        const Rational t_u = rational_from_json(j.at("t_u"));
        if (facet >= p.size()) throw std::invalid_argument("facet index out of range");
        if (!interior_contains(p, u)) out.errors.push_back(ctx + ": point is not interior");
        const Probe probe = probe_from(p, facet, w, alpha);
        if (probe.t_exit != t_exit) out.errors.push_back(ctx + ": recorded t_exit " + t_exit.str() + " != " + probe.t_exit.str());
        if (!(along(w, t_u, alpha) == u)) out.errors.push_back(ctx + ": point is not w + t_u * alpha");
        if (!probe_displaces(probe, u)) out.errors.push_back(ctx + ": point is not less than halfway along the probe");
        if (!interior_contains(p, along(w, t_u * Rational(2), alpha))) {
            out.errors.push_back(ctx + ": doubled point is not interior");
        }
        if (!validate_probe(p, probe)) out.errors.push_back(ctx + ": probe invariants fail");
    } catch (const std::exception& e) {
        out.errors.push_back(ctx + ": " + e.what());
    }
    return out;
}

CheckOutcome check_certificate_json(const json& j)
{
    CheckOutcome out;
    out.certificates = 1;
    const std::string ctx = "certificate" + where(j);
    try {
        const HPolytope p = polytope_of(j);
        const RationalVector u = rational_vector_from_json(j.at("point"));
        if (!contains(p, u)) {
            out.errors.push_back(ctx + ": point is not in the polytope");
            return out;
        }
        std::vector<bool> seen(p.size(), false);
        for (const auto& rec : j.at("facets")) {
            const std::size_t facet = facet_index_from_name(rec.at("facet").get<std::string>());
            if (facet >= p.size()) throw std::invalid_argument("facet index out of range");
            if (seen[facet]) {
                out.errors.push_back(ctx + ": facet " + facet_name(facet) + " appears twice");
                continue;
            }
            seen[facet] = true;
            check_facet_record(p, u, rec, facet, out, ctx);
        }
        for (std::size_t f = 0; f < p.size(); ++f) {
            if (!seen[f]) out.errors.push_back(ctx + ": facet " + facet_name(f) + " has no record");
        }
    } catch (const std::exception& e) {
        out.errors.push_back(ctx + ": " + e.what());
    }
    return out;
}

CheckOutcome check_document(const json& j)
{
    CheckOutcome out;
    if (j.is_array()) {
        for (const auto& e : j) out.merge(check_document(e));
        return out;
    }
    const std::string kind = j.value("kind", "");
    if (kind == "probe-witness") return check_witness_json(j);
    if (kind == "probe-certificate") return check_certificate_json(j);
    if (kind == "sweep-report") {
        for (const auto& v : j.at("verdicts")) {
            if (v.contains("witness")) out.merge(check_witness_json(v.at("witness")));
            if (v.contains("certificate")) out.merge(check_certificate_json(v.at("certificate")));
        }
        return out;
    }
    if (kind == "reproduction-report") {
        const auto& artifacts = j.at("artifacts");
        for (const auto& w : artifacts.at("witnesses")) out.merge(check_witness_json(w));
        for (const auto& c : artifacts.at("certificates")) out.merge(check_certificate_json(c));
        return out;
    }
    out.errors.push_back("unrecognized document kind '" + kind + "'");
    return out;
}

} // namespace gtprobe
