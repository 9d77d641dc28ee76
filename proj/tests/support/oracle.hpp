#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library's algorithms: brute-force subsets for vertices, box scans for
// lattice points, definition-level probe checks.

#include "gtprobe/polytope.hpp"
#include "gtprobe/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using gtprobe::HPolytope;
using gtprobe::IntVector;
using gtprobe::Integer;
using gtprobe::Rational;
using gtprobe::RationalVector;

/// Unique solution of the square system rows * x = rhs, if any (Gauss-Jordan).
std::optional<RationalVector> solve(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs);

/// Vertices by trying every d-subset of halfspaces, sorted and deduplicated.
std::vector<RationalVector> brute_force_vertices(std::size_t dim, const std::vector<IntVector>& normals,
                                                 const std::vector<Rational>& offsets);
std::vector<RationalVector> brute_force_vertices(const HPolytope& p);

/// All integer points in [lo, hi]^d satisfying every (normal, offset, strict) row.
struct Row {
    IntVector normal;
    Rational offset;
    bool strict = false;
};
std::vector<IntVector> box_scan(std::size_t dim, long lo, long hi, const std::vector<Row>& rows);

/// Probe from `facet` at w along alpha displaces u, straight from the
/// definition: w in the open facet, pairing 1, u = w + t alpha with
/// 0 < t < t_exit / 2, t_exit = first time the ray leaves the polytope.
bool probe_displaces_by_definition(const HPolytope& p, std::size_t facet, const RationalVector& w,
                                   const IntVector& alpha, const RationalVector& u);

/// Some probe with |alpha|_inf <= bound displaces u.
struct NaiveResult {
    bool found = false;
    std::size_t facet = 0;
    IntVector alpha;
};
NaiveResult naive_probe_search(const HPolytope& p, const RationalVector& u, long bound = 12);

/// True when every vertex of every facet's closed direction region lies in
/// [-bound, bound]^d; regions computed here by brute force.
bool feasibility_regions_within(const HPolytope& p, const RationalVector& u, long bound = 12);

/// Random bounded full-dimensional 3D polytope with integer normals and
/// offsets in [-max_abs, max_abs], containing the origin in its interior.
HPolytope random_polytope(std::mt19937_64& rng, long max_abs = 8);

/// Interior point: positive integer combination of the vertices.
RationalVector random_interior_point(std::mt19937_64& rng, const HPolytope& p);

} // namespace oracle
