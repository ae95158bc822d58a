#include "kcross/geom.hpp"

namespace kcross {

namespace {

BigInt cross(const BigInt& ux, const BigInt& uy, const BigInt& vx, const BigInt& vy) {
    return ux * vy - uy * vx;
}

int sgn(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

int orientation(const Point& p, const Point& q, const Point& r) {
    return sgn(cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y));
}

Side side_of_directed_line(const Point& p, const Point& q, const Point& r) {
    int o = orientation(p, q, r);
    if (o == 0) throw std::invalid_argument("side_of_directed_line: collinear input");
    return o > 0 ? Side::Left : Side::Right;
}

bool segments_cross(const PointSet& P, const Segment& s, const Segment& t) {
    if (!s.disjoint(t))
        throw std::invalid_argument("segments_cross: segments share an endpoint");
    const Point& a = P[s.a];
    const Point& b = P[s.b];
    const Point& c = P[t.a];
    const Point& d = P[t.b];
    return orientation(a, b, c) * orientation(a, b, d) < 0 &&
           orientation(c, d, a) * orientation(c, d, b) < 0;
}

std::optional<int> crossing_pairing(const Point& a, const Point& b, const Point& c,
                                    const Point& d) {
    // With s1 = o(a,b,c), s2 = o(a,b,d), s3 = o(a,c,d), s4 = o(b,c,d):
    //   ab x cd  iff  s1 != s2 and s3 != s4
    //   ac x bd  iff  s1 == s3 and s2 == s4
    //   ad x bc  iff  s2 != s3 and s1 != s4
    // Exactly one of these holds iff the quadruple is in convex position.
    int s1 = orientation(a, b, c);
    int s2 = orientation(a, b, d);
    int s3 = orientation(a, c, d);
    int s4 = orientation(b, c, d);
    if (s1 == 0 || s2 == 0 || s3 == 0 || s4 == 0)
        throw std::invalid_argument("crossing_pairing: collinear triple");
    if (s1 != s2 && s3 != s4) return 0;
    if (s1 == s3 && s2 == s4) return 1;
    if (s2 != s3 && s1 != s4) return 2;
    return std::nullopt;
}

void validate_general_position(const PointSet& P) {
    std::size_t n = P.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                if (orientation(P[i], P[j], P[l]) == 0)
                    throw GeneralPositionError(i, j, l);
}

std::vector<std::pair<Segment, Segment>> enumerate_crossings(const PointSet& P) {
    validate_general_position(P);
    std::size_t n = P.size();
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) segs.emplace_back(i, j);

    std::vector<std::pair<Segment, Segment>> out;
    for (std::size_t s = 0; s < segs.size(); ++s)
        for (std::size_t t = s + 1; t < segs.size(); ++t)
            if (segs[s].disjoint(segs[t]) && segments_cross(P, segs[s], segs[t]))
                out.emplace_back(segs[s], segs[t]);
    return out;
}

} // namespace kcross
