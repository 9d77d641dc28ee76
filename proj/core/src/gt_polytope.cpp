#include "gtprobe/gt_polytope.hpp"

#include <sstream>
#include <stdexcept>

namespace gtprobe {

namespace {

void require_su3(const OrbitSpec& orbit)
{
    if (orbit.n() != 3) throw std::invalid_argument("operation requires an SU(3) orbit (n = 3)");
}

IntVector unit(std::size_t dim, std::size_t i, long value)
{
    IntVector v(dim);
    v[i] = value;
    return v;
}

} // namespace

OrbitSpec::OrbitSpec(std::vector<Rational> lambda) : lambda_(std::move(lambda))
{
    if (lambda_.size() < 2) throw std::invalid_argument("orbit needs n >= 2 eigenvalues");
    Rational sum;
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        if (i > 0 && !(lambda_[i - 1] > lambda_[i])) {
            throw std::invalid_argument("lambda must be strictly decreasing (regular orbit)");
        }
        sum += lambda_[i];
    }
    if (sum.sign() != 0) throw std::invalid_argument("lambda must sum to zero");
}

std::string OrbitSpec::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < lambda_.size(); ++i) os << (i ? "," : "") << lambda_[i];
    os << ')';
    return os.str();
}

std::size_t gt_dimension(std::size_t n)
{
    return n * (n - 1) / 2;
}

std::size_t gt_coordinate(std::size_t n, GTIndex idx)
{
    const int top = static_cast<int>(n) - 1;
    if (idx.k < 1 || idx.k > top || idx.j < 1 || idx.j > idx.k) {
        throw std::out_of_range("GT index out of range");
    }
    // levels top, top-1, ..., k+1 come first
    std::size_t offset = 0;
    for (int level = top; level > idx.k; --level) offset += static_cast<std::size_t>(level);
    return offset + static_cast<std::size_t>(idx.j - 1);
}

GTIndex gt_index_at(std::size_t n, std::size_t coordinate)
{
    std::size_t offset = 0;
    for (int level = static_cast<int>(n) - 1; level >= 1; --level) {
        if (coordinate < offset + static_cast<std::size_t>(level)) {
            return {level, static_cast<int>(coordinate - offset) + 1};
        }
        offset += static_cast<std::size_t>(level);
    }
    throw std::out_of_range("GT coordinate out of range");
}

GTPoint::GTPoint(std::size_t n, const std::map<GTIndex, Rational>& values) : n_(n), coords_(gt_dimension(n))
{
    if (n < 2) throw std::invalid_argument("GT point needs n >= 2");
    std::size_t seen = 0;
    for (const auto& [idx, value] : values) {
        coords_[gt_coordinate(n, idx)] = value;
        ++seen;
    }
    if (seen != gt_dimension(n)) throw std::invalid_argument("incomplete GT point");
}

GTPoint::GTPoint(std::size_t n, RationalVector coordinates) : n_(n), coords_(std::move(coordinates))
{
    if (n < 2 || coords_.size() != gt_dimension(n)) throw std::invalid_argument("incomplete GT point");
}

const Rational& GTPoint::at(GTIndex idx) const
{
    return coords_[gt_coordinate(n_, idx)];
}

HPolytope build_gt_polytope(const OrbitSpec& orbit)
{
    const std::size_t n = orbit.n();
    const std::size_t d = gt_dimension(n);
    std::vector<Halfspace> hs;
    // lambda^(l+1)_j >= lambda^(l)_j >= lambda^(l+1)_(j+1), with level n fixed to lambda.
    for (int l = static_cast<int>(n) - 1; l >= 1; --l) {
        for (int j = 1; j <= l; ++j) {
            const std::size_t x = gt_coordinate(n, {l, j});
            if (l + 1 == static_cast<int>(n)) {
                hs.push_back({unit(d, x, -1), -orbit[static_cast<std::size_t>(j - 1)]});
                hs.push_back({unit(d, x, 1), orbit[static_cast<std::size_t>(j)]});
            } else {
                IntVector upper = unit(d, x, -1);
                upper[gt_coordinate(n, {l + 1, j})] = 1;
                hs.push_back({upper, Rational(0)});
                IntVector lower = unit(d, x, 1);
                lower[gt_coordinate(n, {l + 1, j + 1})] = -1;
                hs.push_back({lower, Rational(0)});
            }
        }
    }
    return remove_redundant(HPolytope(d, std::move(hs)));
}

std::vector<NamedFacet> su3_facet_catalog(const OrbitSpec& orbit)
{
    require_su3(orbit);
    const Rational& a = orbit.a();
    const Rational& b = orbit.b();
    return {
        {"F1", {IntVector{-1, 0, 0}, -a}},
        {"F2", {IntVector{1, 0, 0}, b}},
        {"F3", {IntVector{0, -1, 0}, -b}},
        {"F4", {IntVector{0, 1, 0}, -a - b}},
        {"F5", {IntVector{1, 0, -1}, Rational(0)}},
        {"F6", {IntVector{0, -1, 1}, Rational(0)}},
    };
}

HPolytope su3_polytope(const OrbitSpec& orbit)
{
    std::vector<Halfspace> hs;
    for (auto& f : su3_facet_catalog(orbit)) hs.push_back(std::move(f.halfspace));
    return HPolytope(3, std::move(hs));
}

RationalVector projection_pr(const OrbitSpec& orbit, const GTPoint& p)
{
    if (p.n() != orbit.n()) throw std::invalid_argument("GT point does not match orbit size");
    const std::size_t n = orbit.n();
    RationalVector out(n);
    Rational previous;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational level_sum;
        if (k == n) {
            for (const auto& l : orbit.lambda()) level_sum += l;
        } else {
            for (int j = 1; j <= static_cast<int>(k); ++j) level_sum += p.at({static_cast<int>(k), j});
        }
        out[k - 1] = level_sum - previous;
        previous = level_sum;
    }
    return out;
}

RationalVector projection_pr(const OrbitSpec& orbit, const RationalVector& coordinates)
{
    return projection_pr(orbit, GTPoint(orbit.n(), coordinates));
}

std::optional<WSegment> w_set_segment(const OrbitSpec& orbit)
{
    require_su3(orbit);
    const auto P = su3_polytope(orbit);
    // Along s -> (s, -s, 0) each halfspace reads k*s >= c.
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool closed_ok = true;
    bool open_ok = true;
    for (const auto& h : P.halfspaces()) {
        const Integer k = h.normal[0] - h.normal[1];
        if (k == 0) {
            closed_ok &= h.offset.sign() <= 0;
            open_ok &= h.offset.sign() < 0;
            continue;
        }
        const Rational bound = h.offset / Rational(k);
        if (k > 0) {
            if (!lo || bound > *lo) lo = bound;
        } else {
            if (!hi || bound < *hi) hi = bound;
        }
    }
    if (!closed_ok || !lo || !hi || *lo > *hi) return std::nullopt;
    WSegment seg{*lo, *hi, std::nullopt};
    if (open_ok && *lo < *hi) seg.interior = std::make_pair(*lo, *hi);
    return seg;
}

RationalVector w_point(const Rational& x1)
{
    return RationalVector{x1, -x1, Rational(0)};
}

} // namespace gtprobe
