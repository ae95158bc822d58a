#include "kcross/doubling.hpp"

#include <algorithm>

namespace kcross {

namespace {

BigInt cross(const BigInt& ux, const BigInt& uy, const BigInt& vx, const BigInt& vy) {
    return ux * vy - uy * vx;
}

int sgn(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

struct Vec {
    BigInt x, y;
};

} // namespace

void Matching::validate(std::size_t n) const {
    if (target.size() != n) throw std::invalid_argument("Matching: wrong size");
    for (std::size_t p = 0; p < n; ++p) {
        if (target[p] >= n) throw std::invalid_argument("Matching: target out of range");
        if (target[p] == p) throw std::invalid_argument("Matching: fixed point");
        if (target[target[p]] == p) throw std::invalid_argument("Matching: 2-cycle");
    }
}

long long SideCounts::total() const {
    long long t = 0;
    for (const auto& row : table) t += row[0] + row[1];
    return t;
}

EnvOffsets env_offsets(const VertexDetails& det, int matched_color, int k) {
    if (det.c_prime < 1 || det.c_prime > k || matched_color < 1 || matched_color > k)
        throw std::invalid_argument("env_offsets: color out of range");
    EnvOffsets e(k);
    int cp = det.c_prime;
    int m = matched_color;
    auto inc = [](std::vector<std::array<int, 2>>& off, int c, Side d) {
        ++off[c][d == Side::Left ? 0 : 1];
    };
    // First child: its two new local edges are the sibling and one copy of
    // the old matching edge, except with a sibling target both copies of the
    // old matching edge remain, one per side.
    switch (det.m1) {
        case M1::Sibling:
            inc(e.off1, m, Side::Left);
            inc(e.off1, m, Side::Right);
            break;
        case M1::Left:
            inc(e.off1, cp, Side::Right);
            inc(e.off1, m, Side::Right);
            break;
        case M1::Right:
            inc(e.off1, cp, Side::Left);
            inc(e.off1, m, Side::Left);
            break;
    }
    // Second child: sibling plus the unmatched copy of the old matching edge.
    switch (det.m2) {
        case M2::Left:
            inc(e.off2, cp, Side::Left);
            inc(e.off2, m, Side::Right);
            break;
        case M2::Right:
            inc(e.off2, cp, Side::Right);
            inc(e.off2, m, Side::Left);
            break;
    }
    return e;
}

SideCounts side_counts(const PointSet& P, const EdgeColoring& chi, std::size_t p,
                       std::size_t q) {
    if (p == q || p >= P.size() || q >= P.size())
        throw std::invalid_argument("side_counts: bad vertex pair");
    SideCounts sc(chi.k);
    for (std::size_t r = 0; r < P.size(); ++r) {
        if (r == p || r == q) continue;
        Side d = side_of_directed_line(P[p], P[q], P[r]);
        ++sc.at(chi.at(p, r), d);
    }
    return sc;
}

SideCounts side_counts(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                       std::size_t p) {
    return side_counts(P, chi, p, m(p));
}

namespace {

void validate_inputs(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                     const std::vector<VertexDetails>& details) {
    std::size_t n = P.size();
    if (n < 3) throw std::invalid_argument("double_once: need at least 3 points");
    if (chi.n != n) throw std::invalid_argument("double_once: coloring size mismatch");
    chi.validate();
    m.validate(n);
    if (details.size() != n) throw std::invalid_argument("double_once: details size mismatch");
    for (const auto& d : details)
        if (d.c_prime < 1 || d.c_prime > chi.k)
            throw std::invalid_argument("double_once: sibling color out of range");
    validate_general_position(P);
}

} // namespace

DoubledDrawing double_once(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                           const std::vector<VertexDetails>& details) {
    validate_inputs(P, chi, m, details);
    std::size_t n = P.size();
    std::size_t N = 2 * n;

    std::vector<Vec> w(n);
    for (std::size_t v = 0; v < n; ++v)
        w[v] = {P[m(v)].x - P[v].x, P[m(v)].y - P[v].y};

    // The orientation of any triple of children is d0 + d1*eps + d2*eps^2 in
    // the placement parameter eps. Pick eps = 2^-s so every realized sign
    // equals its eps -> 0+ limit: with the first nonzero coefficient
    // dominating, |d0| 4^s > |d1| 2^s + |d2| (or |d1| 2^s > |d2| when d0 = 0).
    unsigned s = 1;
    auto parent_of = [](std::size_t c) { return c >> 1; };
    auto sign_of = [](std::size_t c) { return (c & 1) ? 1 : -1; };
    for (std::size_t A = 0; A < N; ++A) {
        std::size_t va = parent_of(A);
        int sa = sign_of(A);
        for (std::size_t B = A + 1; B < N; ++B) {
            std::size_t vb = parent_of(B);
            int sb = sign_of(B);
            Vec d0v{P[vb].x - P[va].x, P[vb].y - P[va].y};
            Vec d1v{sb * w[vb].x - sa * w[va].x, sb * w[vb].y - sa * w[va].y};
            for (std::size_t C = B + 1; C < N; ++C) {
                std::size_t vc = parent_of(C);
                int sc = sign_of(C);
                Vec g0v{P[vc].x - P[va].x, P[vc].y - P[va].y};
                Vec g1v{sc * w[vc].x - sa * w[va].x, sc * w[vc].y - sa * w[va].y};
                BigInt d0 = cross(d0v.x, d0v.y, g0v.x, g0v.y);
                BigInt d1 = cross(d0v.x, d0v.y, g1v.x, g1v.y) +
                            cross(d1v.x, d1v.y, g0v.x, g0v.y);
                BigInt d2 = cross(d1v.x, d1v.y, g1v.x, g1v.y);
                if (d0 != 0) {
                    BigInt a0 = abs(d0), a1 = abs(d1), a2 = abs(d2);
                    while ((a0 << (2 * s)) <= (a1 << s) + a2) ++s;
                } else if (d1 != 0) {
                    BigInt a1 = abs(d1), a2 = abs(d2);
                    while ((a1 << s) <= a2) ++s;
                } else if (d2 == 0) {
                    throw std::logic_error("double_once: degenerate child triple");
                }
            }
        }
    }

    DoubledDrawing D;
    BigInt scale = BigInt(1) << s;
    D.points.pts.resize(N);
    for (std::size_t v = 0; v < n; ++v) {
        D.points.pts[2 * v] = {P[v].x * scale - w[v].x, P[v].y * scale - w[v].y};
        D.points.pts[2 * v + 1] = {P[v].x * scale + w[v].x, P[v].y * scale + w[v].y};
    }

    D.coloring = EdgeColoring(chi.k, N);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            int c = chi.at(u, v);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) D.coloring.set(2 * u + i, 2 * v + j, c);
        }
    for (std::size_t v = 0; v < n; ++v) D.coloring.set(2 * v, 2 * v + 1, details[v].c_prime);

    D.matching.target.assign(N, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t q = m(v);
        int o2 = sgn(cross(P[q].x - P[v].x, P[q].y - P[v].y, w[q].x, w[q].y));
        if (o2 == 0) throw std::logic_error("double_once: target children on the line");
        std::size_t left_child = o2 > 0 ? 2 * q + 1 : 2 * q;
        std::size_t right_child = o2 > 0 ? 2 * q : 2 * q + 1;
        switch (details[v].m1) {
            case M1::Left: D.matching.target[2 * v] = left_child; break;
            case M1::Right: D.matching.target[2 * v] = right_child; break;
            case M1::Sibling: D.matching.target[2 * v] = 2 * v + 1; break;
        }
        D.matching.target[2 * v + 1] =
            details[v].m2 == M2::Left ? left_child : right_child;
    }
    D.matching.validate(N);

    D.parent.resize(N);
    D.slot.resize(N);
    D.details.resize(N);
    for (std::size_t v = 0; v < n; ++v) {
        D.parent[2 * v] = v;
        D.parent[2 * v + 1] = v;
        D.slot[2 * v] = 1;
        D.slot[2 * v + 1] = 2;
        D.details[2 * v] = details[v];
        D.details[2 * v + 1] = details[v];
    }
    return D;
}

DoubledDrawing double_iterate(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                              const std::vector<VertexDetails>& details, unsigned t) {
    if (t < 1) throw std::invalid_argument("double_iterate: t must be >= 1");
    DoubledDrawing D = double_once(P, chi, m, details);
    for (unsigned i = 1; i < t; ++i)
        D = double_once(D.points, D.coloring, D.matching, D.details);
    return D;
}

OffsetPair extract_offsets(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                           const std::vector<VertexDetails>& details, std::size_t p, int c,
                           Side d) {
    SideCounts sp = side_counts(P, chi, m, p);
    DoubledDrawing D = double_once(P, chi, m, details);
    SideCounts s1 = side_counts(D.points, D.coloring, D.matching, 2 * p);
    SideCounts s2 = side_counts(D.points, D.coloring, D.matching, 2 * p + 1);
    OffsetPair o{static_cast<int>(s1.at(c, d) - 2 * sp.at(c, d)),
                 static_cast<int>(s2.at(c, d) - 2 * sp.at(c, d))};
    o.validate();
    return o;
}

std::array<BigInt, 5> count_by_class(const DoubledDrawing& D,
                                     const Matching& parent_matching) {
    const PointSet& P = D.points;
    const EdgeColoring& chi = D.coloring;
    std::size_t N = P.size();
    std::array<BigInt, 5> out{};

    auto classify = [&](std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
        std::size_t pa1 = D.parent[a1], pa2 = D.parent[a2];
        std::size_t pb1 = D.parent[b1], pb2 = D.parent[b2];
        if (pa1 == pa2 || pb1 == pb2) return QuadClass::Degenerate; // sibling edge
        bool same_edge = (pa1 == pb1 && pa2 == pb2) || (pa1 == pb2 && pa2 == pb1);
        if (same_edge) return QuadClass::EdgeCopies;
        std::size_t shared;
        std::size_t other_a, other_b;
        if (pa1 == pb1) { shared = pa1; other_a = pa2; other_b = pb2; }
        else if (pa1 == pb2) { shared = pa1; other_a = pa2; other_b = pb1; }
        else if (pa2 == pb1) { shared = pa2; other_a = pa1; other_b = pb2; }
        else if (pa2 == pb2) { shared = pa2; other_a = pa1; other_b = pb1; }
        else return QuadClass::Inherited;
        if (parent_matching(shared) == other_a || parent_matching(shared) == other_b)
            return QuadClass::LocalMatched;
        return QuadClass::LocalSameSide;
    };

    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            for (std::size_t u = j + 1; u < N; ++u)
                for (std::size_t v = u + 1; v < N; ++v) {
                    auto pairing = crossing_pairing(P[i], P[j], P[u], P[v]);
                    if (!pairing) continue;
                    std::size_t a1, a2, b1, b2;
                    if (*pairing == 0) { a1 = i; a2 = j; b1 = u; b2 = v; }
                    else if (*pairing == 1) { a1 = i; a2 = u; b1 = j; b2 = v; }
                    else { a1 = i; a2 = v; b1 = j; b2 = u; }
                    if (chi.at(a1, a2) != chi.at(b1, b2)) continue;
                    out[static_cast<int>(classify(a1, a2, b1, b2))] += 1;
                }
    return out;
}

} // namespace kcross
