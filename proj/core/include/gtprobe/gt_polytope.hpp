#pragma once

// Gelfand-Tsetlin polytopes of regular SU(n) coadjoint orbits.
//
// Coordinate order: level n-1 first, then n-2, ..., 1; inside a level the
// eigenvalues go from largest (j = 1) to smallest (j = k). For n = 3 this is
//
//     (x1, x2, x3) = (lambda^(2)_1, lambda^(2)_2, lambda^(1)_1)
//
// which is the order that makes the SU(3) system read
//     a >= x1 >= b,   b >= x2 >= -a-b,   x1 >= x3 >= x2
// and puts the zero fiber of the projection at W = {(x1, -x1, 0)}.

#include "gtprobe/polytope.hpp"
#include "gtprobe/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gtprobe {

/// Regular orbit through diag(lambda): lambda strictly decreasing, zero sum.
class OrbitSpec {
public:
    /// Throws std::invalid_argument when n < 2, lambda is not strictly
    /// decreasing, or the entries do not sum to zero.
    explicit OrbitSpec(std::vector<Rational> lambda);

    std::size_t n() const { return lambda_.size(); }
    const std::vector<Rational>& lambda() const { return lambda_; }
    const Rational& operator[](std::size_t i) const { return lambda_[i]; }

    // SU(3) parameters for lambda = (a, b, -a-b).
    const Rational& a() const { return lambda_.at(0); }
    const Rational& b() const { return lambda_.at(1); }

    std::string str() const;

private:
    std::vector<Rational> lambda_;
};

struct GTIndex {
    int k = 1; ///< level, 1..n-1
    int j = 1; ///< position within the level, 1..k
    friend auto operator<=>(const GTIndex&, const GTIndex&) = default;
};

std::size_t gt_dimension(std::size_t n);
std::size_t gt_coordinate(std::size_t n, GTIndex idx);
GTIndex gt_index_at(std::size_t n, std::size_t coordinate);

class GTPoint {
public:
    /// Throws std::invalid_argument unless every index of level 1..n-1 is present.
    GTPoint(std::size_t n, const std::map<GTIndex, Rational>& values);
    GTPoint(std::size_t n, RationalVector coordinates);

    std::size_t n() const { return n_; }
    const Rational& at(GTIndex idx) const;
    const RationalVector& coordinates() const { return coords_; }

private:
    std::size_t n_;
    RationalVector coords_;
};

/// One halfspace per interlacing inequality, redundant ones removed.
HPolytope build_gt_polytope(const OrbitSpec& orbit);

struct NamedFacet {
    std::string name;
    Halfspace halfspace;
};

/// F1: x1 <= a   F2: x1 >= b   F3: x2 <= b
/// F4: x2 >= -a-b   F5: x3 <= x1   F6: x3 >= x2
std::vector<NamedFacet> su3_facet_catalog(const OrbitSpec& orbit);

/// The SU(3) polytope with halfspaces in catalog order F1..F6.
HPolytope su3_polytope(const OrbitSpec& orbit);

/// Standard-torus momentum image of a GT point: entry k is the level-k sum
/// minus the level-(k-1) sum, with level 0 empty and level n = sum(lambda).
RationalVector projection_pr(const OrbitSpec& orbit, const GTPoint& p);
RationalVector projection_pr(const OrbitSpec& orbit, const RationalVector& coordinates);

/// W intersected with P for SU(3): the x1 values with (x1, -x1, 0) in P.
struct WSegment {
    Rational lo;
    Rational hi;
    /// Open subinterval with (x1, -x1, 0) in int P, if any.
    std::optional<std::pair<Rational, Rational>> interior;
};

std::optional<WSegment> w_set_segment(const OrbitSpec& orbit);

RationalVector w_point(const Rational& x1);

} // namespace gtprobe
