#pragma once

// Halfspace-presented convex polytopes over exact rationals.
//
// Vertices are enumerated once, at construction, by intersecting every
// linearly independent d-subset of halfspace boundaries. That is brute force,
// but the largest polytope we care about has 20 halfspaces in dimension 10.

#include "gtprobe/rational.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gtprobe {

/// <normal, x> >= offset, with a primitive nonzero normal.
struct Halfspace {
    IntVector normal;
    Rational offset;

    Rational slack(const RationalVector& x) const { return dot(normal, x) - offset; }

    friend bool operator==(const Halfspace& a, const Halfspace& b)
    {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

/// Builds <normal, x> >= offset from an arbitrary nonzero integer normal,
/// rescaling both sides so the normal becomes primitive.
Halfspace make_halfspace(const IntVector& normal, const Rational& offset);

enum class Bound { Closed, Strict };

class UnboundedError : public std::invalid_argument {
public:
    UnboundedError() : std::invalid_argument("unbounded") {}
};

class HPolytope {
public:
    enum class Shape {
        FullDimensional, ///< construction fails unless the polytope has nonempty interior
        AllowDegenerate  ///< empty and lower-dimensional polytopes accepted
    };

    HPolytope(std::size_t dim, std::vector<Halfspace> halfspaces, Shape shape = Shape::FullDimensional);

    std::size_t dim() const { return data_->dim; }
    std::size_t size() const { return data_->halfspaces.size(); }
    const std::vector<Halfspace>& halfspaces() const { return data_->halfspaces; }
    const Halfspace& halfspace(std::size_t i) const { return data_->halfspaces.at(i); }

    /// Exact vertex set, sorted lexicographically.
    const std::vector<RationalVector>& vertices() const { return data_->vertices; }
    bool empty() const { return data_->vertices.empty(); }
    bool full_dimensional() const { return data_->full_dimensional; }
    Shape shape() const { return data_->shape; }

private:
    struct Data {
        std::size_t dim = 0;
        std::vector<Halfspace> halfspaces;
        std::vector<RationalVector> vertices;
        bool full_dimensional = false;
        Shape shape = Shape::FullDimensional;
    };
    std::shared_ptr<const Data> data_;
};

bool contains(const HPolytope& p, const RationalVector& x);
bool interior_contains(const HPolytope& p, const RationalVector& x);

/// True iff w is on the boundary hyperplane of halfspace `facet` and strictly
/// inside every other halfspace.
bool facet_relint_contains(const HPolytope& p, std::size_t facet, const RationalVector& w);

/// Indices of halfspaces with zero slack at x.
std::vector<std::size_t> tight_halfspaces(const HPolytope& p, const RationalVector& x);

/// Simple vertex whose tight primitive normals form a unimodular matrix.
/// Throws std::invalid_argument if v is not a vertex of p.
bool is_smooth_vertex(const HPolytope& p, const RationalVector& v);

/// Drops halfspaces that do not define a facet (tight vertex set of affine
/// dimension < d-1). Requires a full-dimensional polytope.
HPolytope remove_redundant(const HPolytope& p);

bool satisfies(const Halfspace& h, Bound bound, const RationalVector& x);

Integer determinant(const std::vector<IntVector>& rows);
std::size_t rank(const std::vector<RationalVector>& rows);
std::size_t affine_rank(const std::vector<RationalVector>& points);

/// Integer box [lo_i, hi_i] covering the polytope. Empty when the polytope is
/// empty or contains no integer value in some coordinate range.
struct LatticeBox {
    std::vector<std::pair<Integer, Integer>> ranges;
    bool empty = true;
};

LatticeBox integer_bounding_box(const HPolytope& p);

/// Visits integer points satisfying each halfspace with its strictness, in
/// lexicographic order. The first d-1 coordinates are scanned over the
/// bounding box; the last is solved as an exact interval. Returning false from
/// `visit` stops the scan.
void for_each_lattice_point(const HPolytope& p, std::span<const Bound> strictness,
                            const std::function<bool(const IntVector&)>& visit);

std::vector<IntVector> lattice_points(const HPolytope& p, std::span<const Bound> strictness);

} // namespace gtprobe
