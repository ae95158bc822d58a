#pragma once

#include "kcross/numeric.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace kcross {

struct Point {
    BigInt x;
    BigInt y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Straight-line drawing of K_n: vertex i sits at pts[i].
struct PointSet {
    std::vector<Point> pts;

    std::size_t size() const { return pts.size(); }
    const Point& operator[](std::size_t i) const { return pts[i]; }
};

/// Edge of K_n as a canonical unordered pair a < b of vertex indices.
struct Segment {
    std::size_t a;
    std::size_t b;

    Segment(std::size_t i, std::size_t j) : a(i), b(j) {
        if (a > b) std::swap(a, b);
        if (a == b) throw std::invalid_argument("Segment: degenerate pair");
    }
    bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
    bool disjoint(const Segment& o) const {
        return a != o.a && a != o.b && b != o.a && b != o.b;
    }
};

enum class Side { Left, Right };

inline Side opposite(Side d) { return d == Side::Left ? Side::Right : Side::Left; }

/// Thrown when three drawing vertices are collinear.
struct GeneralPositionError : std::runtime_error {
    std::size_t i, j, l;
    GeneralPositionError(std::size_t a, std::size_t b, std::size_t c)
        : std::runtime_error("general position violated: vertices " + std::to_string(a) +
                             ", " + std::to_string(b) + ", " + std::to_string(c) +
                             " are collinear"),
          i(a), j(b), l(c) {}
};

/// Sign of the signed area of triangle pqr: +1 counterclockwise, -1
/// clockwise, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

/// Side of r relative to the line through p directed toward q.
/// Left is positive orientation. Collinear input is rejected.
Side side_of_directed_line(const Point& p, const Point& q, const Point& r);

/// True iff the open segments s and t intersect. Segments sharing an
/// endpoint are rejected (such pairs never count as crossings).
bool segments_cross(const PointSet& P, const Segment& s, const Segment& t);

/// Which pairing of four distinct vertices crosses. Returns the pairing as
/// indices into {(ab|cd), (ac|bd), (ad|bc)}, or nullopt when the four points
/// are not in convex position. Exactly one pairing crosses otherwise.
std::optional<int> crossing_pairing(const Point& a, const Point& b, const Point& c,
                                    const Point& d);

/// Throws GeneralPositionError on the first collinear vertex triple.
void validate_general_position(const PointSet& P);

/// All unordered pairs of endpoint-disjoint segments that cross, via direct
/// pairwise segment tests (independent of crossing_pairing).
std::vector<std::pair<Segment, Segment>> enumerate_crossings(const PointSet& P);

} // namespace kcross
