#include "gtprobe/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace gtprobe {

namespace {

void attach_source(json& j, const PolytopeSource& src)
{
    if (src.orbit) {
        j["lambda"] = to_json(*src.orbit);
    } else if (src.polytope) {
        j["polytope"] = to_json(*src.polytope);
    } else {
        throw std::invalid_argument("polytope source is empty");
    }
}

json facet_record_to_json(const FacetFeasibility& rec)
{
    json r;
    r["facet"] = facet_name(rec.facet);
    r["t"] = to_json(rec.t);
    r["on_facet"] = rec.on_facet;
    if (rec.region) {
        r["alpha_region"] = region_to_json(*rec.region, rec.strictness);
    } else {
        r["alpha_region"] = nullptr;
    }
    json box = json::array();
    if (!rec.bbox.empty) {
        for (const auto& [lo, hi] : rec.bbox.ranges) box.push_back({to_json(lo), to_json(hi)});
    }
    r["bbox"] = box;
    json pts = json::array();
    for (const auto& p : rec.lattice_points) pts.push_back(to_json(p));
    r["lattice_points"] = pts;
    r["touches_non_smooth_vertex"] = rec.touches_non_smooth_vertex;
    return r;
}

} // namespace

json to_json(const Rational& r)
{
    return r.str();
}

json to_json(const RationalVector& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json to_json(const Integer& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json to_json(const IntVector& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const HPolytope& p)
{
    json hs = json::array();
    for (const auto& h : p.halfspaces()) hs.push_back({{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
    return {{"dim", p.dim()}, {"halfspaces", hs}};
}

json to_json(const OrbitSpec& orbit)
{
    json a = json::array();
    for (const auto& l : orbit.lambda()) a.push_back(l.str());
    return a;
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational string \"p/q\", got " + j.dump());
}

RationalVector rational_vector_from_json(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return RationalVector(std::move(out));
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        const Rational r = Rational::parse(j.get<std::string>());
        if (!r.is_integer()) throw std::invalid_argument("expected an integer, got " + j.dump());
        return r.numerator();
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

IntVector int_vector_from_json(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    std::vector<Integer> out;
    for (const auto& e : j) out.push_back(integer_from_json(e));
    return IntVector(std::move(out));
}

HPolytope polytope_from_json(const json& j, HPolytope::Shape shape)
{
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<Halfspace> hs;
    for (const auto& h : j.at("halfspaces")) {
        hs.push_back({int_vector_from_json(h.at("normal")), rational_from_json(h.at("offset"))});
    }
    return HPolytope(dim, std::move(hs), shape);
}

OrbitSpec orbit_from_json(const json& j)
{
    const json& values = j.is_object() ? j.at("lambda") : j;
    return OrbitSpec(rational_vector_from_json(values).entries());
}

json region_to_json(const HPolytope& region, const std::vector<Bound>& strictness)
{
    json j = to_json(region);
    json s = json::array();
    for (auto b : strictness) s.push_back(b == Bound::Strict);
    j["strict"] = s;
    return j;
}

std::string facet_name(std::size_t index)
{
    return "F" + std::to_string(index + 1);
}

std::size_t facet_index_from_name(const std::string& name)
{
    if (name.size() < 2 || name[0] != 'F') throw std::invalid_argument("bad facet name: " + name);
    const long k = std::stol(name.substr(1));
    if (k < 1) throw std::invalid_argument("bad facet name: " + name);
    return static_cast<std::size_t>(k - 1);
}

HPolytope resolve_polytope(const OrbitSpec& orbit)
{
    return orbit.n() == 3 ? su3_polytope(orbit) : build_gt_polytope(orbit);
}

json witness_to_json(const ProbeWitness& w, const PolytopeSource& src)
{
    json j;
    j["kind"] = "probe-witness";
    attach_source(j, src);
    j["point"] = to_json(w.point);
    j["facet"] = facet_name(w.probe.facet);
    j["w"] = to_json(w.probe.base);
    j["alpha"] = to_json(w.probe.direction);
    j["t_exit"] = to_json(w.probe.t_exit);
    j["t_u"] = to_json(w.t_u);
    return j;
}

json certificate_to_json(const ProbeCertificate& c, const PolytopeSource& src)
{
    json j;
    j["kind"] = "probe-certificate";
    attach_source(j, src);
    j["point"] = to_json(c.point);
    json facets = json::array();
    for (const auto& rec : c.facets) facets.push_back(facet_record_to_json(rec));
    j["facets"] = facets;
    return j;
}

json verdict_to_json(const FiberVerdict& v, const OrbitSpec& orbit)
{
    const auto src = PolytopeSource::of_orbit(orbit);
    json j;
    j["point"] = to_json(v.point);
    j["status"] = to_string(v.status);
    if (v.sphere) j["sphere"] = to_string(*v.sphere);
    if (v.permutation) {
        json img = json::array();
        for (auto i : v.permutation->image) img.push_back(i + 1);
        j["permutation"] = {{"image", img}, {"cycles", v.permutation->cycle_notation()}};
    }
    if (v.witness) j["witness"] = witness_to_json(*v.witness, src);
    if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate, src);
    if (v.annotation) j["annotation"] = {{"known_non_displaceable", true}, {"source", v.annotation->source}};
    j["basis"] = v.basis;
    return j;
}

json sweep_to_json(const SweepReport& r, bool emit_intervals)
{
    json j;
    j["kind"] = "sweep-report";
    j["lambda"] = to_json(r.orbit);
    j["denominator"] = r.denominator;
    j["segment"] = {{"closed", {to_json(r.segment.lo), to_json(r.segment.hi)}}};
    if (r.segment.interior) {
        j["segment"]["open"] = {to_json(r.segment.interior->first), to_json(r.segment.interior->second)};
    }
    json entries = json::array();
    for (const auto& e : r.entries) {
        json v = verdict_to_json(e.verdict, r.orbit);
        v["x1"] = to_json(e.x1);
        entries.push_back(std::move(v));
    }
    j["verdicts"] = entries;

    json summary;
    summary["counts"] = r.counts;
    json npd = json::array();
    for (const auto& x : r.not_probe_displaceable) npd.push_back(to_json(x));
    summary["not_probe_displaceable"] = npd;
    json runs = json::array();
    for (const auto& [lo, hi] : r.certified_runs) runs.push_back({to_json(lo), to_json(hi)});
    summary["certified_runs"] = runs;
    summary["candidate_range"] = {{"lo", to_json(r.candidates.lo)},
                                  {"hi", to_json(r.candidates.hi)},
                                  {"lo_closed", r.candidates.lo_closed},
                                  {"hi_closed", r.candidates.hi_closed},
                                  {"extends_outside_polytope", r.candidates.extends_outside_polytope}};
    j["summary"] = summary;
    if (emit_intervals) {
        json iv = json::array();
        for (const auto& li : r.lemma_intervals) {
            iv.push_back({{"lemma", li.lemma}, {"open_interval", {to_json(li.lo), to_json(li.hi)}}});
        }
        j["lemma_intervals"] = iv;
    }
    j["notes"] = r.notes;
    return j;
}

} // namespace gtprobe
