#include "gtprobe/polytope.hpp"

#include <algorithm>
#include <set>

namespace gtprobe {

namespace {

// One row of an incrementally built echelon system. Each row is reduced
// against all earlier rows, so it is zero in their pivot columns.
struct EchelonRow {
    std::vector<mpq_class> coef;
    mpq_class rhs;
    std::size_t pivot = 0;
};

// Returns false if `row` is linearly dependent on `stack`.
bool reduce_into(std::vector<mpq_class>& coef, mpq_class& rhs, const std::vector<EchelonRow>& stack,
                 std::size_t& pivot)
{
    for (const auto& r : stack) {
        const mpq_class& c = coef[r.pivot];
        if (sgn(c) == 0) continue;
        const mpq_class factor = c / r.coef[r.pivot];
        for (std::size_t j = 0; j < coef.size(); ++j) {
            if (sgn(r.coef[j]) != 0) coef[j] -= factor * r.coef[j];
        }
        rhs -= factor * r.rhs;
    }
    for (std::size_t j = 0; j < coef.size(); ++j) {
        if (sgn(coef[j]) != 0) {
            pivot = j;
            return true;
        }
    }
    return false;
}

// Enumerates all linearly independent `target`-subsets of halfspace
// boundaries, calling `leaf` with the echelon stack for each.
class SubsetWalker {
public:
    SubsetWalker(const std::vector<Halfspace>& hs, std::size_t dim, std::size_t target,
                 std::function<void(const std::vector<EchelonRow>&)> leaf)
        : hs_(hs), dim_(dim), target_(target), leaf_(std::move(leaf))
    {
        stack_.reserve(target);
    }

    void run() { walk(0); }

private:
    void walk(std::size_t start)
    {
        if (stack_.size() == target_) {
            leaf_(stack_);
            return;
        }
        const std::size_t need = target_ - stack_.size();
        for (std::size_t i = start; i + need <= hs_.size(); ++i) {
            EchelonRow row;
            row.coef.resize(dim_);
            for (std::size_t j = 0; j < dim_; ++j) row.coef[j] = hs_[i].normal[j];
            row.rhs = hs_[i].offset.raw();
            if (!reduce_into(row.coef, row.rhs, stack_, row.pivot)) continue;
            stack_.push_back(std::move(row));
            walk(i + 1);
            stack_.pop_back();
        }
    }

    const std::vector<Halfspace>& hs_;
    std::size_t dim_;
    std::size_t target_;
    std::function<void(const std::vector<EchelonRow>&)> leaf_;
    std::vector<EchelonRow> stack_;
};

// Back substitution on a square echelon system (every column is a pivot).
std::vector<mpq_class> solve_full(const std::vector<EchelonRow>& rows, std::size_t dim)
{
    std::vector<mpq_class> x(dim, 0);
    for (std::size_t k = rows.size(); k-- > 0;) {
        const auto& r = rows[k];
        mpq_class acc = r.rhs;
        for (std::size_t j = 0; j < dim; ++j) {
            if (j != r.pivot && sgn(r.coef[j]) != 0) acc -= r.coef[j] * x[j];
        }
        x[r.pivot] = acc / r.coef[r.pivot];
    }
    return x;
}

// Kernel vector of a (dim-1)-row echelon system of full row rank.
std::vector<mpq_class> kernel_vector(const std::vector<EchelonRow>& rows, std::size_t dim)
{
    std::vector<bool> is_pivot(dim, false);
    for (const auto& r : rows) is_pivot[r.pivot] = true;
    std::vector<mpq_class> y(dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
        if (!is_pivot[j]) y[j] = 1;
    }
    for (std::size_t k = rows.size(); k-- > 0;) {
        const auto& r = rows[k];
        mpq_class acc = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            if (j != r.pivot && sgn(r.coef[j]) != 0) acc -= r.coef[j] * y[j];
        }
        y[r.pivot] = acc / r.coef[r.pivot];
    }
    return y;
}

std::size_t normal_rank(const std::vector<Halfspace>& hs)
{
    std::vector<RationalVector> rows;
    rows.reserve(hs.size());
    for (const auto& h : hs) rows.emplace_back(h.normal);
    return rows.empty() ? 0 : rank(rows);
}

// The recession cone {y : Ny >= 0} is trivial iff N has full column rank and
// no extreme ray exists; extreme rays of a pointed cone are kernels of
// (d-1)-subsets of independent rows.
bool is_bounded(const std::vector<Halfspace>& hs, std::size_t dim)
{
    if (dim == 0) return true;
    if (normal_rank(hs) < dim) return false;
    bool bounded = true;
    SubsetWalker walker(hs, dim, dim - 1, [&](const std::vector<EchelonRow>& rows) {
        if (!bounded) return;
        const auto y = kernel_vector(rows, dim);
        bool any_pos = false;
        bool any_neg = false;
        for (const auto& h : hs) {
            mpq_class s = 0;
            for (std::size_t j = 0; j < dim; ++j) {
                if (h.normal[j] != 0) s += h.normal[j] * y[j];
            }
            const int sg = sgn(s);
            any_pos |= sg > 0;
            any_neg |= sg < 0;
        }
        if (!any_pos || !any_neg) bounded = false;
    });
    walker.run();
    return bounded;
}

std::vector<RationalVector> enumerate_vertices(const std::vector<Halfspace>& hs, std::size_t dim)
{
    std::set<RationalVector> found;
    SubsetWalker walker(hs, dim, dim, [&](const std::vector<EchelonRow>& rows) {
        const auto sol = solve_full(rows, dim);
        RationalVector x(dim);
        for (std::size_t j = 0; j < dim; ++j) x[j] = Rational(sol[j]);
        for (const auto& h : hs) {
            if (h.slack(x).sign() < 0) return;
        }
        found.insert(std::move(x));
    });
    walker.run();
    return {found.begin(), found.end()};
}

} // namespace

Halfspace make_halfspace(const IntVector& normal, const Rational& offset)
{
    const Integer g = gcd_of(normal);
    if (g == 0) throw std::invalid_argument("zero vector has no primitive form");
    return Halfspace{primitive(normal), offset / Rational(g)};
}

HPolytope::HPolytope(std::size_t dim, std::vector<Halfspace> halfspaces, Shape shape)
{
    if (dim == 0) throw std::invalid_argument("polytope dimension must be positive");
    auto data = std::make_shared<Data>();
    data->dim = dim;
    data->shape = shape;
    for (std::size_t i = 0; i < halfspaces.size(); ++i) {
        const auto& h = halfspaces[i];
        if (h.normal.size() != dim) throw std::invalid_argument("halfspace dimension mismatch");
        if (h.normal.is_zero()) throw std::invalid_argument("halfspace normal is zero");
        if (gcd_of(h.normal) != 1) throw std::invalid_argument("halfspace normal is not primitive: " + h.normal.str());
        for (std::size_t j = 0; j < i; ++j) {
            if (halfspaces[j] == h) throw std::invalid_argument("duplicate halfspace " + std::to_string(i));
        }
    }
    if (!is_bounded(halfspaces, dim)) throw UnboundedError();
    data->vertices = enumerate_vertices(halfspaces, dim);
    data->full_dimensional = !data->vertices.empty() && affine_rank(data->vertices) == dim;
    if (shape == Shape::FullDimensional && !data->full_dimensional) {
        throw std::invalid_argument("polytope is not full-dimensional");
    }
    data->halfspaces = std::move(halfspaces);
    data_ = std::move(data);
}

bool contains(const HPolytope& p, const RationalVector& x)
{
    if (x.size() != p.dim()) throw std::invalid_argument("dimension mismatch");
    for (const auto& h : p.halfspaces()) {
        if (h.slack(x).sign() < 0) return false;
    }
    return true;
}

bool interior_contains(const HPolytope& p, const RationalVector& x)
{
    if (x.size() != p.dim()) throw std::invalid_argument("dimension mismatch");
    for (const auto& h : p.halfspaces()) {
        if (h.slack(x).sign() <= 0) return false;
    }
    return true;
}

bool facet_relint_contains(const HPolytope& p, std::size_t facet, const RationalVector& w)
{
    if (facet >= p.size()) throw std::out_of_range("facet index out of range");
    if (w.size() != p.dim()) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < p.size(); ++i) {
        const int s = p.halfspace(i).slack(w).sign();
        if (i == facet ? s != 0 : s <= 0) return false;
    }
    return true;
}

std::vector<std::size_t> tight_halfspaces(const HPolytope& p, const RationalVector& x)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.halfspace(i).slack(x).sign() == 0) out.push_back(i);
    }
    return out;
}

bool is_smooth_vertex(const HPolytope& p, const RationalVector& v)
{
    const auto& vs = p.vertices();
    if (!std::binary_search(vs.begin(), vs.end(), v)) {
        throw std::invalid_argument("not a vertex: " + v.str());
    }
    const auto tight = tight_halfspaces(p, v);
    if (tight.size() != p.dim()) return false;
    std::vector<IntVector> rows;
    for (auto i : tight) rows.push_back(p.halfspace(i).normal);
    const Integer det = determinant(rows);
    return det == 1 || det == -1;
}

HPolytope remove_redundant(const HPolytope& p)
{
    if (!p.full_dimensional()) throw std::invalid_argument("redundancy removal needs a full-dimensional polytope");
    std::vector<Halfspace> kept;
    for (const auto& h : p.halfspaces()) {
        std::vector<RationalVector> on;
        for (const auto& v : p.vertices()) {
            if (h.slack(v).sign() == 0) on.push_back(v);
        }
        if (!on.empty() && affine_rank(on) + 1 == p.dim()) kept.push_back(h);
    }
    return HPolytope(p.dim(), std::move(kept), p.shape());
}

bool satisfies(const Halfspace& h, Bound bound, const RationalVector& x)
{
    const int s = h.slack(x).sign();
    return bound == Bound::Strict ? s > 0 : s >= 0;
}

Integer determinant(const std::vector<IntVector>& rows)
{
    const std::size_t n = rows.size();
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("determinant needs a square matrix");
    }
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::size_t rank(const std::vector<RationalVector>& rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<EchelonRow> stack;
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("dimension mismatch");
        EchelonRow row;
        row.coef.resize(cols);
        for (std::size_t j = 0; j < cols; ++j) row.coef[j] = r[j].raw();
        row.rhs = 0;
        if (reduce_into(row.coef, row.rhs, stack, row.pivot)) stack.push_back(std::move(row));
        if (stack.size() == cols) break;
    }
    return stack.size();
}

std::size_t affine_rank(const std::vector<RationalVector>& points)
{
    if (points.size() <= 1) return 0;
    std::vector<RationalVector> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    return rank(diffs);
}

LatticeBox integer_bounding_box(const HPolytope& p)
{
    LatticeBox box;
    const auto& vs = p.vertices();
    if (vs.empty()) return box;
    box.ranges.resize(p.dim());
    box.empty = false;
    for (std::size_t j = 0; j < p.dim(); ++j) {
        Rational lo = vs.front()[j];
        Rational hi = vs.front()[j];
        for (const auto& v : vs) {
            lo = std::min(lo, v[j]);
            hi = std::max(hi, v[j]);
        }
        box.ranges[j] = {lo.ceil(), hi.floor()};
        if (box.ranges[j].first > box.ranges[j].second) box.empty = true;
    }
    return box;
}

void for_each_lattice_point(const HPolytope& p, std::span<const Bound> strictness,
                            const std::function<bool(const IntVector&)>& visit)
{
    if (strictness.size() != p.size()) throw std::invalid_argument("strictness flags do not match halfspaces");
    const LatticeBox box = integer_bounding_box(p);
    if (box.empty) return;
    const std::size_t d = p.dim();
    if (d == 0) return;
    const std::size_t last = d - 1;
    const auto& hs = p.halfspaces();

    IntVector point(d);
    for (std::size_t j = 0; j < last; ++j) point[j] = box.ranges[j].first;

    while (true) {
        // Interval for the last coordinate given the prefix.
        Integer lo = box.ranges[last].first;
        Integer hi = box.ranges[last].second;
        bool feasible = true;
        for (std::size_t i = 0; i < hs.size() && feasible; ++i) {
            mpq_class rest = hs[i].offset.raw();
            for (std::size_t j = 0; j < last; ++j) {
                if (hs[i].normal[j] != 0) rest -= hs[i].normal[j] * point[j];
            }
            const Integer& k = hs[i].normal[last];
            const bool strict = strictness[i] == Bound::Strict;
            if (k == 0) {
                // need 0 >= rest (or > when strict)
                const int s = sgn(rest);
                feasible = strict ? s < 0 : s <= 0;
                continue;
            }
            const Rational bound(mpq_class(rest / k));
            if (k > 0) {
                Integer b = strict ? bound.floor() + 1 : bound.ceil();
                if (b > lo) lo = b;
            } else {
                Integer b = strict ? bound.ceil() - 1 : bound.floor();
                if (b < hi) hi = b;
            }
            if (lo > hi) feasible = false;
        }
        if (feasible) {
            for (Integer v = lo; v <= hi; ++v) {
                point[last] = v;
                if (!visit(point)) return;
            }
        }
        // Odometer over the prefix, last prefix coordinate fastest.
        std::size_t j = last;
        while (j > 0) {
            --j;
            if (point[j] < box.ranges[j].second) {
                ++point[j];
                for (std::size_t r = j + 1; r < last; ++r) point[r] = box.ranges[r].first;
                break;
            }
            if (j == 0) return;
        }
        if (last == 0) return;
    }
}

std::vector<IntVector> lattice_points(const HPolytope& p, std::span<const Bound> strictness)
{
    std::vector<IntVector> out;
    for_each_lattice_point(p, strictness, [&](const IntVector& v) {
        out.push_back(v);
        return true;
    });
    return out;
}

} // namespace gtprobe
