#pragma once

// McDuff's method of probes as an exact decision procedure.
//
// A probe from facet F with primitive inward normal n_F starts at a point w
// in the relative interior of F and runs along an integer direction alpha
// with <n_F, alpha> = 1. The ray parameter is then the affine length. A fiber
// over an interior point u is displaced by the probe when u = w + t*alpha with
// 0 < t < t_exit / 2.
//
// For a fixed u and F the parameter is forced: t = <n_F, u> - c_F. So u is
// displaceable from F iff some integer alpha satisfies
//
//     <n_F, alpha> = 1
//     u - t*alpha  strictly inside every other halfspace   (w in relint F)
//     u + t*alpha  strictly inside every halfspace          (2t < t_exit)
//
// Writing s_G = slack_G(u) / t, the last two lines are |<n_G, alpha>| < s_G
// for every G != F. That region is a bounded polytope in alpha-space and we
// enumerate its lattice points exactly.
//
// Nothing here special-cases non-smooth vertices. On the SU(3) GT polytope
// the preimage of every probe lies in the smooth locus of the toric chart, so
// the polytopal criterion is the one that applies; certificates record when a
// feasibility region's closure reaches a non-smooth vertex.

#include "gtprobe/polytope.hpp"
#include "gtprobe/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gtprobe {

class ProbeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Probe {
    std::size_t facet = 0;
    RationalVector base;
    IntVector direction;
    Rational t_exit;
};

/// <n_F, alpha> == 1 for the facet's primitive inward normal.
bool is_integrally_transverse(const HPolytope& p, std::size_t facet, const IntVector& alpha);

/// Throws ProbeError if w is not in the relative interior of the facet or
/// alpha is not integrally transverse to it.
Probe probe_from(const HPolytope& p, std::size_t facet, const RationalVector& w, const IntVector& alpha);

/// t with u = base + t * direction, if u is on the probe's line.
std::optional<Rational> ray_parameter(const Probe& probe, const RationalVector& u);

/// u = base + t * direction with 0 < t < t_exit / 2 (strict).
bool probe_displaces(const Probe& probe, const RationalVector& u);

/// Re-checks every Probe invariant against p from scratch.
bool validate_probe(const HPolytope& p, const Probe& probe);

struct ProbeWitness {
    Probe probe;
    RationalVector point;
    Rational t_u;
};

/// Feasibility of displacing `point` by probes from one facet.
struct FacetFeasibility {
    std::size_t facet = 0;
    Rational t;
    /// t == 0: the point lies on this facet and no probe from it reaches the point.
    bool on_facet = false;
    /// Closure of the alpha region (absent when on_facet).
    std::optional<HPolytope> region;
    std::vector<Bound> strictness;
    LatticeBox bbox;
    std::vector<IntVector> lattice_points;
    /// Some alpha in the closed region sends the probe base or the doubled
    /// point onto a non-smooth vertex of the polytope.
    bool touches_non_smooth_vertex = false;
};

/// The alpha region for facet `facet` at `u`, with t = slack_F(u) > 0.
/// Halfspaces come with strictness flags; duplicates are merged.
std::pair<HPolytope, std::vector<Bound>> alpha_region(const HPolytope& p, std::size_t facet, const RationalVector& u);

/// Full per-facet record. `stop_at_first` ends the lattice scan at the first hit.
FacetFeasibility facet_feasibility(const HPolytope& p, std::size_t facet, const RationalVector& u,
                                   bool stop_at_first = false);

/// First displacing probe in facet order, then lexicographic alpha order.
/// Throws std::invalid_argument if u is not in the interior of p.
std::optional<ProbeWitness> displacing_probe_search(const HPolytope& p, const RationalVector& u);

struct ProbeCertificate {
    RationalVector point;
    std::vector<FacetFeasibility> facets;
};

/// Per-facet emptiness records for every facet of p. Accepts any u in p;
/// on the boundary the regions are empty for trivial reasons and facets
/// through u are recorded as on_facet.
/// Throws std::invalid_argument("point is probe-displaceable") if a witness exists.
ProbeCertificate certify_not_probe_displaceable(const HPolytope& p, const RationalVector& u);

/// Non-smooth vertices of p.
std::vector<RationalVector> non_smooth_vertices(const HPolytope& p);

} // namespace gtprobe
