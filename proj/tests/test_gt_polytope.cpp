#include "fixtures.hpp"
#include "oracle.hpp"

#include "gtprobe/gt_polytope.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gtprobe;
using fixtures::orbit;
using fixtures::pt;
using fixtures::q;

namespace {

// Interlacing written out directly: for each level k < n and j <= k,
// lambda^(k+1)_j >= lambda^(k)_j >= lambda^(k+1)_(j+1).
void raw_interlacing(const OrbitSpec& o, std::vector<IntVector>& normals, std::vector<Rational>& offsets)
{
    const std::size_t n = o.n();
    const std::size_t d = gt_dimension(n);
    auto unit = [&](GTIndex idx, long s) {
        IntVector v(d);
        v[gt_coordinate(n, idx)] = s;
        return v;
    };
    for (int k = 1; k < static_cast<int>(n); ++k) {
        for (int j = 1; j <= k; ++j) {
            const GTIndex here{k, j};
            if (k + 1 == static_cast<int>(n)) {
                normals.push_back(unit(here, -1));
                offsets.push_back(Rational(0) - o[j - 1]);
                normals.push_back(unit(here, 1));
                offsets.push_back(o[j]);
            } else {
                IntVector upper = unit({k + 1, j}, 1);
                upper[gt_coordinate(n, here)] = -1;
                normals.push_back(upper);
                offsets.push_back(Rational(0));
                IntVector lower = unit(here, 1);
                lower[gt_coordinate(n, {k + 1, j + 1})] = -1;
                normals.push_back(lower);
                offsets.push_back(Rational(0));
            }
        }
    }
}

std::set<std::pair<IntVector, Rational>> as_set(const HPolytope& p)
{
    std::set<std::pair<IntVector, Rational>> s;
    for (const auto& h : p.halfspaces()) s.insert({h.normal, h.offset});
    return s;
}

} // namespace

TEST(OrbitSpec, Validation)
{
    EXPECT_NO_THROW(orbit({3, -1, -2}));
    EXPECT_THROW(orbit({1, 1, -2}), std::invalid_argument);
    EXPECT_THROW(orbit({3, 1, -3}), std::invalid_argument);
    EXPECT_THROW(orbit({-1, 1}), std::invalid_argument);
    EXPECT_THROW(orbit({0}), std::invalid_argument);
    const OrbitSpec o = orbit({3, 1, -4});
    EXPECT_EQ(o.a(), Rational(3));
    EXPECT_EQ(o.b(), Rational(1));
}

TEST(GTCoordinates, OrderAndRoundTrip)
{
    EXPECT_EQ(gt_dimension(3), 3u);
    EXPECT_EQ(gt_dimension(5), 10u);
    EXPECT_EQ(gt_coordinate(3, {2, 1}), 0u);
    EXPECT_EQ(gt_coordinate(3, {2, 2}), 1u);
    EXPECT_EQ(gt_coordinate(3, {1, 1}), 2u);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t c = 0; c < gt_dimension(n); ++c) EXPECT_EQ(gt_coordinate(n, gt_index_at(n, c)), c);
    }
}

TEST(GTPoint, MapAndCoordinates)
{
    const GTPoint p(3, {{{2, 1}, q("2")}, {{2, 2}, q("-1")}, {{1, 1}, q("1")}});
    EXPECT_EQ(p.coordinates(), pt("2,-1,1"));
    EXPECT_EQ(p.at({1, 1}), q("1"));
    EXPECT_THROW(GTPoint(3, std::map<GTIndex, Rational>{{{2, 1}, q("2")}}), std::invalid_argument);
}

TEST(SU3Polytope, CatalogInequalities)
{
    const OrbitSpec o = orbit({3, 1, -4});
    const auto cat = su3_facet_catalog(o);
    ASSERT_EQ(cat.size(), 6u);
    // F1: x1 <= a ... F6: x3 >= x2, as inward normals
    EXPECT_EQ(cat[0].halfspace, (Halfspace{IntVector{-1, 0, 0}, q("-3")}));
    EXPECT_EQ(cat[1].halfspace, (Halfspace{IntVector{1, 0, 0}, q("1")}));
    EXPECT_EQ(cat[2].halfspace, (Halfspace{IntVector{0, -1, 0}, q("-1")}));
    EXPECT_EQ(cat[3].halfspace, (Halfspace{IntVector{0, 1, 0}, q("-4")}));
    EXPECT_EQ(cat[4].halfspace, (Halfspace{IntVector{1, 0, -1}, q("0")}));
    EXPECT_EQ(cat[5].halfspace, (Halfspace{IntVector{0, -1, 1}, q("0")}));
    EXPECT_EQ(cat[0].name, "F1");
    EXPECT_EQ(as_set(su3_polytope(o)), as_set(build_gt_polytope(o)));
}

TEST(SU3Polytope, VerticesIncludeSingularVertex)
{
    for (const auto& o : {fixtures::b_neg(), fixtures::b_pos(), fixtures::monotone()}) {
        const HPolytope p = su3_polytope(o);
        EXPECT_EQ(p.vertices(), oracle::brute_force_vertices(p)) << o.str();
        EXPECT_EQ(p.vertices().size(), 7u);
        const RationalVector bbb{o.b(), o.b(), o.b()};
        EXPECT_TRUE(std::find(p.vertices().begin(), p.vertices().end(), bbb) != p.vertices().end());
    }
}

TEST(GTPolytope, MatchesRawInterlacingForSmallN)
{
    for (const auto& o : {orbit({1, -1}), orbit({3, -1, -2}), orbit({3, 1, 0, -4}), orbit({4, 2, -1, -2, -3})}) {
        std::vector<IntVector> normals;
        std::vector<Rational> offsets;
        raw_interlacing(o, normals, offsets);
        const HPolytope p = build_gt_polytope(o);
        EXPECT_EQ(p.dim(), gt_dimension(o.n()));
        if (o.n() <= 4) EXPECT_EQ(p.vertices(), oracle::brute_force_vertices(p.dim(), normals, offsets)) << o.str();
        EXPECT_TRUE(p.full_dimensional());
    }
}

TEST(GTPolytope, SegmentForN2)
{
    const HPolytope p = build_gt_polytope(orbit({1, -1}));
    EXPECT_EQ(p.dim(), 1u);
    EXPECT_EQ(p.vertices(), (std::vector<RationalVector>{pt("-1"), pt("1")}));
}

TEST(Projection, SU3Formula)
{
    const OrbitSpec o = fixtures::b_neg();
    // (x3, x1 + x2 - x3, -x1 - x2)
    EXPECT_EQ(projection_pr(o, pt("2,-1,1")), pt("1,0,-1"));
    EXPECT_EQ(projection_pr(o, pt("-1,-1,-1")), pt("-1,-1,2"));
    EXPECT_EQ(projection_pr(o, w_point(q("3/2"))), pt("0,0,0"));
    const GTPoint g(3, pt("2,-1,1"));
    EXPECT_EQ(projection_pr(o, g), pt("1,0,-1"));
}

TEST(Projection, SumsToTrace)
{
    const OrbitSpec o = orbit({3, 1, 0, -4});
    const HPolytope p = build_gt_polytope(o);
    for (const auto& v : p.vertices()) {
        Rational s(0);
        for (const auto& c : projection_pr(o, v)) s = s + c;
        EXPECT_EQ(s, Rational(0));
    }
}

TEST(WSegment, DefaultOrbits)
{
    const auto neg = w_set_segment(fixtures::b_neg());
    ASSERT_TRUE(neg);
    EXPECT_EQ(neg->lo, q("1"));
    EXPECT_EQ(neg->hi, q("2"));
    ASSERT_TRUE(neg->interior);
    EXPECT_EQ(neg->interior->first, q("1"));
    EXPECT_EQ(neg->interior->second, q("2"));

    const auto pos = w_set_segment(fixtures::b_pos());
    ASSERT_TRUE(pos);
    EXPECT_EQ(pos->lo, q("1"));
    EXPECT_EQ(pos->hi, q("3"));

    const auto mono = w_set_segment(fixtures::monotone());
    ASSERT_TRUE(mono);
    EXPECT_EQ(mono->lo, q("0"));
    EXPECT_EQ(mono->hi, q("2"));
}
