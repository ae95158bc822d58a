#include "doctest.h"

#include <random>

#include "kcross/geom.hpp"
#include "testutil.hpp"

using namespace kcross;
using namespace testutil;

namespace {

Point pt(long long x, long long y) { return {BigInt(x), BigInt(y)}; }

} // namespace

TEST_CASE("orientation signs") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
    CHECK(orientation(pt(0, 0), pt(2, 1), pt(4, 2)) == 0);
    CHECK(orientation(pt(-3, -3), pt(5, 1), pt(0, 7)) == 1);
}

TEST_CASE("orientation is antisymmetric in the first two points") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> coord(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        Point a = pt(coord(rng), coord(rng));
        Point b = pt(coord(rng), coord(rng));
        Point c = pt(coord(rng), coord(rng));
        CHECK(orientation(a, b, c) == -orientation(b, a, c));
        CHECK(orientation(a, b, c) == orientation(b, c, a));
    }
}

TEST_CASE("side of a directed line") {
    CHECK(side_of_directed_line(pt(0, 0), pt(4, 0), pt(1, 3)) == Side::Left);
    CHECK(side_of_directed_line(pt(0, 0), pt(4, 0), pt(1, -3)) == Side::Right);
    CHECK(side_of_directed_line(pt(4, 0), pt(0, 0), pt(1, 3)) == Side::Right);
    CHECK_THROWS_AS(side_of_directed_line(pt(0, 0), pt(4, 0), pt(2, 0)),
                    std::invalid_argument);
    CHECK(opposite(Side::Left) == Side::Right);
    CHECK(opposite(Side::Right) == Side::Left);
}

TEST_CASE("segment constructor canonicalizes and rejects loops") {
    Segment s(5, 2);
    CHECK(s.a == 2);
    CHECK(s.b == 5);
    CHECK(s == Segment(2, 5));
    CHECK_THROWS_AS(Segment(3, 3), std::invalid_argument);
    CHECK(Segment(0, 1).disjoint(Segment(2, 3)));
    CHECK_FALSE(Segment(0, 1).disjoint(Segment(1, 2)));
}

TEST_CASE("segments_cross on the unit square") {
    PointSet P;
    P.pts = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
    CHECK(segments_cross(P, Segment(0, 2), Segment(1, 3)));
    CHECK_FALSE(segments_cross(P, Segment(0, 1), Segment(2, 3)));
    CHECK_FALSE(segments_cross(P, Segment(0, 3), Segment(1, 2)));
    CHECK_THROWS_AS(segments_cross(P, Segment(0, 1), Segment(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("crossing pairing of a quadruple") {
    // convex quadrilateral in index order: the first-last pairing crosses
    Point a = pt(0, 0), b = pt(4, 0), c = pt(5, 4), d = pt(1, 5);
    auto pairing = crossing_pairing(a, b, c, d);
    REQUIRE(pairing.has_value());
    CHECK(*pairing == 1); // ac x bd for this cyclic order

    // point inside the triangle of the others: no two disjoint edges cross
    CHECK_FALSE(crossing_pairing(pt(0, 0), pt(8, 1), pt(3, 7), pt(4, 3)).has_value());

    CHECK_THROWS_AS(crossing_pairing(pt(0, 0), pt(1, 1), pt(2, 2), pt(5, 0)),
                    std::invalid_argument);
}

TEST_CASE("crossing pairing agrees with explicit segment tests") {
    std::mt19937_64 rng(23);
    PointSet P = random_points(8, rng);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            for (std::size_t u = j + 1; u < 8; ++u)
                for (std::size_t v = u + 1; v < 8; ++v) {
                    auto pairing = crossing_pairing(P[i], P[j], P[u], P[v]);
                    bool e0 = segments_cross(P, Segment(i, j), Segment(u, v));
                    bool e1 = segments_cross(P, Segment(i, u), Segment(j, v));
                    bool e2 = segments_cross(P, Segment(i, v), Segment(j, u));
                    CHECK(e0 + e1 + e2 == (pairing.has_value() ? 1 : 0));
                    if (pairing)
                        CHECK((*pairing == 0 ? e0 : *pairing == 1 ? e1 : e2));
                }
}

TEST_CASE("general position validation") {
    PointSet ok;
    ok.pts = {pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 3)};
    CHECK_NOTHROW(validate_general_position(ok));

    PointSet bad;
    bad.pts = {pt(0, 0), pt(5, 5), pt(2, 2), pt(1, 0)};
    try {
        validate_general_position(bad);
        FAIL("expected a general position error");
    } catch (const GeneralPositionError& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 1);
        CHECK(e.l == 2);
    }

    PointSet dup;
    dup.pts = {pt(0, 0), pt(1, 2), pt(1, 2)};
    CHECK_THROWS(validate_general_position(dup));
}

TEST_CASE("crossings of convex point sets") {
    // n points in convex position cross once per 4-point subset
    for (std::size_t n = 4; n <= 7; ++n) {
        PointSet P = parabola(n);
        auto crossings = enumerate_crossings(P);
        BigInt expected = BigInt(n) * (n - 1) * (n - 2) * (n - 3) / 24;
        CHECK(BigInt(crossings.size()) == expected);
    }
    // triangle with an interior point has none
    PointSet tri;
    tri.pts = {pt(0, 0), pt(8, 1), pt(3, 7), pt(4, 3)};
    CHECK(enumerate_crossings(tri).empty());
}

TEST_CASE("crossing count equals the number of convex quadruples") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 5; ++trial) {
        PointSet P = random_points(7, rng);
        std::size_t convex = 0;
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = i + 1; j < 7; ++j)
                for (std::size_t u = j + 1; u < 7; ++u)
                    for (std::size_t v = u + 1; v < 7; ++v)
                        if (convex_quadruple(P[i], P[j], P[u], P[v])) ++convex;
        CHECK(enumerate_crossings(P).size() == convex);
    }
}

TEST_CASE("crossings are invariant under translation and scaling") {
    std::mt19937_64 rng(41);
    PointSet P = random_points(8, rng);
    std::size_t base = enumerate_crossings(P).size();
    PointSet Q = P;
    for (Point& p : Q.pts) {
        p.x = p.x * 7 + 1000;
        p.y = p.y * 7 - 500;
    }
    CHECK(enumerate_crossings(Q).size() == base);
}
