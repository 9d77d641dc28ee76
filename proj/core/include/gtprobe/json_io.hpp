#pragma once

// JSON schemas. Rationals are always strings ("p" or "p/q") so no value ever
// passes through a double. Integer vectors are plain JSON integers.
//
//   polytope:    {"dim": d, "halfspaces": [{"normal": [..], "offset": "p/q"}]}
//   region:      polytope + {"strict": [bool, ...]}
//   witness:     {"kind": "probe-witness", "lambda" | "polytope", "point",
//                 "facet": "F4", "w", "alpha", "t_exit", "t_u"}
//   certificate: {"kind": "probe-certificate", "lambda" | "polytope", "point",
//                 "facets": [{"facet", "t", "on_facet", "alpha_region",
//                             "bbox": [[lo, hi], ...], "lattice_points": [],
//                             "touches_non_smooth_vertex"}]}

#include "gtprobe/classifier.hpp"
#include "gtprobe/gt_polytope.hpp"
#include "gtprobe/polytope.hpp"
#include "gtprobe/probes.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace gtprobe {

using json = nlohmann::json;

json to_json(const Rational& r);
json to_json(const RationalVector& v);
json to_json(const IntVector& v);
json to_json(const Integer& v);
json to_json(const HPolytope& p);
json to_json(const OrbitSpec& orbit);

Rational rational_from_json(const json& j);
RationalVector rational_vector_from_json(const json& j);
IntVector int_vector_from_json(const json& j);
Integer integer_from_json(const json& j);
HPolytope polytope_from_json(const json& j, HPolytope::Shape shape = HPolytope::Shape::FullDimensional);
OrbitSpec orbit_from_json(const json& j);

json region_to_json(const HPolytope& region, const std::vector<Bound>& strictness);

std::string facet_name(std::size_t index);
std::size_t facet_index_from_name(const std::string& name);

/// Where a witness or certificate lives: a GT orbit (rebuilt on read) or an
/// explicit polytope.
struct PolytopeSource {
    std::optional<OrbitSpec> orbit;
    std::optional<HPolytope> polytope;

    static PolytopeSource of_orbit(const OrbitSpec& o) { return {o, std::nullopt}; }
    static PolytopeSource of_polytope(const HPolytope& p) { return {std::nullopt, p}; }
};

/// SU(3) orbits resolve to the F1..F6 catalog polytope; other n to the
/// general GT builder.
HPolytope resolve_polytope(const OrbitSpec& orbit);

json witness_to_json(const ProbeWitness& w, const PolytopeSource& src);
json certificate_to_json(const ProbeCertificate& c, const PolytopeSource& src);
json verdict_to_json(const FiberVerdict& v, const OrbitSpec& orbit);
json sweep_to_json(const SweepReport& r, bool emit_intervals);

} // namespace gtprobe
