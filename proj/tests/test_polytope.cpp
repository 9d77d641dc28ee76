#include "fixtures.hpp"
#include "oracle.hpp"

#include "gtprobe/polytope.hpp"

#include <gtest/gtest.h>

using namespace gtprobe;
using fixtures::pt;
using fixtures::q;

namespace {

Halfspace hs(IntVector n, const char* c)
{
    return {std::move(n), q(c)};
}

// [0, k]^3
HPolytope cube(const char* k = "1")
{
    const std::string neg = std::string("-") + k;
    return HPolytope(3, {hs({1, 0, 0}, "0"), hs({-1, 0, 0}, neg.c_str()), hs({0, 1, 0}, "0"),
                         hs({0, -1, 0}, neg.c_str()), hs({0, 0, 1}, "0"), hs({0, 0, -1}, neg.c_str())});
}

} // namespace

TEST(HPolytope, CubeVerticesMatchBruteForce)
{
    const HPolytope c = cube();
    EXPECT_EQ(c.vertices().size(), 8u);
    EXPECT_EQ(c.vertices(), oracle::brute_force_vertices(c));
    EXPECT_TRUE(c.full_dimensional());
}

TEST(HPolytope, RejectsBadInput)
{
    EXPECT_THROW(HPolytope(3, {hs({1, 0, 0}, "0"), hs({0, 1, 0}, "0"), hs({0, 0, 1}, "0")}), UnboundedError);
    EXPECT_THROW(HPolytope(2, {hs({0, 0}, "0"), hs({1, 0}, "0")}), std::invalid_argument);
    EXPECT_THROW(HPolytope(2, {hs({2, 0}, "0"), hs({-1, 0}, "-1"), hs({0, 1}, "0"), hs({0, -1}, "-1")}),
                 std::invalid_argument);
    EXPECT_THROW(HPolytope(2, {hs({1, 0}, "0"), hs({1, 0}, "0"), hs({-1, 0}, "-1"), hs({0, 1}, "0"),
                               hs({0, -1}, "-1")}),
                 std::invalid_argument);
    EXPECT_THROW(HPolytope(2, {hs({1, 0, 0}, "0")}), std::invalid_argument);
    EXPECT_THROW(HPolytope(0, {}), std::invalid_argument);
}

TEST(HPolytope, ShapePolicy)
{
    // x >= 1 and x <= 0: empty
    const std::vector<Halfspace> empty{hs({1}, "1"), hs({-1}, "0")};
    EXPECT_THROW(HPolytope(1, empty), std::invalid_argument);
    const HPolytope e(1, empty, HPolytope::Shape::AllowDegenerate);
    EXPECT_TRUE(e.empty());

    // a segment in the plane
    const std::vector<Halfspace> seg{hs({1, 0}, "0"), hs({-1, 0}, "-2"), hs({0, 1}, "1"), hs({0, -1}, "-1")};
    EXPECT_THROW(HPolytope(2, seg), std::invalid_argument);
    const HPolytope s(2, seg, HPolytope::Shape::AllowDegenerate);
    EXPECT_FALSE(s.full_dimensional());
    EXPECT_EQ(s.vertices(), (std::vector<RationalVector>{pt("0,1"), pt("2,1")}));
}

TEST(HPolytope, MakeHalfspaceRescales)
{
    const Halfspace h = make_halfspace(IntVector{2, -4, 0}, q("3"));
    EXPECT_EQ(h.normal, (IntVector{1, -2, 0}));
    EXPECT_EQ(h.offset, q("3/2"));
}

TEST(HPolytope, Membership)
{
    const HPolytope c = cube();
    EXPECT_TRUE(contains(c, pt("0,1/2,1")));
    EXPECT_FALSE(interior_contains(c, pt("0,1/2,1")));
    EXPECT_TRUE(interior_contains(c, pt("1/2,1/2,1/2")));
    EXPECT_FALSE(contains(c, pt("0,1/2,11/10")));
    EXPECT_TRUE(facet_relint_contains(c, 0, pt("0,1/2,1/2")));
    EXPECT_FALSE(facet_relint_contains(c, 0, pt("0,0,1/2")));  // on an edge
    EXPECT_FALSE(facet_relint_contains(c, 1, pt("0,1/2,1/2"))); // other facet
    EXPECT_EQ(tight_halfspaces(c, pt("0,0,1/2")), (std::vector<std::size_t>{0, 2}));
}

TEST(HPolytope, SmoothVertices)
{
    // x >= 0, y >= 0, x + 2y <= 2: the vertex (0,1) has determinant 2.
    const HPolytope t(2, {hs({1, 0}, "0"), hs({0, 1}, "0"), hs({-1, -2}, "-2")});
    EXPECT_TRUE(is_smooth_vertex(t, pt("0,0")));
    EXPECT_TRUE(is_smooth_vertex(t, pt("2,0")));
    EXPECT_FALSE(is_smooth_vertex(t, pt("0,1")));
    EXPECT_THROW(is_smooth_vertex(t, pt("1/2,1/2")), std::invalid_argument);

    // square pyramid: apex is not simple
    const HPolytope pyr(3, {hs({0, 0, 1}, "0"), hs({1, 0, -1}, "-1"), hs({-1, 0, -1}, "-1"), hs({0, 1, -1}, "-1"),
                            hs({0, -1, -1}, "-1")});
    EXPECT_EQ(pyr.vertices().size(), 5u);
    EXPECT_FALSE(is_smooth_vertex(pyr, pt("0,0,1")));
    EXPECT_TRUE(is_smooth_vertex(cube(), pt("1,1,1")));
}

TEST(HPolytope, RemoveRedundant)
{
    std::vector<Halfspace> h = cube().halfspaces();
    h.push_back(hs({1, 1, 0}, "-5"));
    h.push_back(hs({1, 1, 1}, "0")); // touches only the vertex 0
    const HPolytope p(3, h);
    const HPolytope r = remove_redundant(p);
    EXPECT_EQ(r.size(), 6u);
    EXPECT_EQ(r.vertices(), p.vertices());
}

TEST(HPolytope, RankHelpers)
{
    EXPECT_EQ(rank({pt("1,2,3"), pt("2,4,6")}), 1u);
    EXPECT_EQ(affine_rank({pt("0,0"), pt("1,1"), pt("2,2")}), 1u);
    EXPECT_EQ(determinant({IntVector{2, 1}, IntVector{1, 1}}), 1);
    EXPECT_EQ(determinant({IntVector{1, 2, 3}, IntVector{4, 5, 6}, IntVector{7, 8, 10}}), -3);
}

TEST(LatticePoints, MatchBoxScanWithStrictness)
{
    // 2x + 3y >= 1, x - y <= 5/2, y <= 7/3, x >= -3
    const HPolytope p(2, {hs({2, 3}, "1"), hs({-1, 1}, "-5/2"), hs({0, -1}, "-7/3"), hs({1, 0}, "-3")});
    std::vector<oracle::Row> rows;
    for (const auto& h : p.halfspaces()) rows.push_back({h.normal, h.offset, false});
    const std::vector<Bound> closed(p.size(), Bound::Closed);
    EXPECT_EQ(lattice_points(p, closed), oracle::box_scan(2, -20, 20, rows));

    std::vector<Bound> strict(p.size(), Bound::Strict);
    for (auto& r : rows) r.strict = true;
    EXPECT_EQ(lattice_points(p, strict), oracle::box_scan(2, -20, 20, rows));
}

TEST(LatticePoints, BoundingBoxAndEarlyStop)
{
    const HPolytope thin(2, {hs({1, 0}, "1/3"), hs({-1, 0}, "-2/3"), hs({0, 1}, "0"), hs({0, -1}, "-5")});
    const LatticeBox box = integer_bounding_box(thin);
    EXPECT_TRUE(box.empty);
    const std::vector<Bound> closed(thin.size(), Bound::Closed);
    EXPECT_TRUE(lattice_points(thin, closed).empty());

    const HPolytope c = cube("3");
    const LatticeBox cb = integer_bounding_box(c);
    ASSERT_FALSE(cb.empty);
    EXPECT_EQ(cb.ranges[0], std::make_pair(Integer(0), Integer(3)));
    std::size_t seen = 0;
    for_each_lattice_point(c, std::vector<Bound>(c.size(), Bound::Closed), [&](const IntVector& v) {
        ++seen;
        return !(v == IntVector{0, 1, 0});
    });
    EXPECT_EQ(seen, 5u); // (0,0,0..3) then (0,1,0)
}
