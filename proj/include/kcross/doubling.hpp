#pragma once

#include "kcross/coloring.hpp"

#include <array>
#include <optional>

namespace kcross {

/// Vertex-to-vertex map hhat with no fixed points and no 2-cycles. The
/// matching edge of p is {p, hhat(p)}; its color is p's matched color.
struct Matching {
    std::vector<std::size_t> target;

    std::size_t operator()(std::size_t p) const { return target[p]; }
    std::size_t size() const { return target.size(); }
    void validate(std::size_t n) const;
};

/// Matching target of the first child: left/right child of the parent's
/// target, or the sibling.
enum class M1 { Left, Right, Sibling };
/// Matching target of the second child: left/right child of the parent's
/// target (the sibling is disallowed here).
enum class M2 { Left, Right };

/// Per-vertex choices consumed by one doubling step: the color of the new
/// sibling edge plus the matching targets of both children.
struct VertexDetails {
    int c_prime = 1;
    M1 m1 = M1::Left;
    M2 m2 = M2::Left;
};

/// Per-vertex table S^d_c: edges at p of color c strictly on side d of p's
/// directed matching line. The matching edge itself is counted nowhere, so
/// the entries sum to n-2.
struct SideCounts {
    int k = 0;
    std::vector<std::array<long long, 2>> table; // [color][side]

    explicit SideCounts(int k_) : k(k_), table(k_ + 1, {0, 0}) {}
    long long& at(int c, Side d) { return table[c][d == Side::Left ? 0 : 1]; }
    long long at(int c, Side d) const { return table[c][d == Side::Left ? 0 : 1]; }
    long long total() const;
};

/// Offsets of the side-count recurrence S -> 2S + o across one doubling:
/// o1 for the first child, o2 for the second.
struct OffsetPair {
    int o1 = 0;
    int o2 = 0;
    void validate() const {
        if (o1 < 0 || o1 > 2 || o2 < 0 || o2 > 1 || (o1 == 2 && o2 == 0))
            throw std::logic_error("OffsetPair: constraint violated");
    }
};

/// Offset increments per (color, side) cell for one environment. An
/// environment is determined by the matched color at the vertex being split;
/// the sibling color and the m1/m2 choices come from the details.
struct EnvOffsets {
    int k = 0;
    std::vector<std::array<int, 2>> off1, off2;

    explicit EnvOffsets(int k_) : k(k_), off1(k_ + 1, {0, 0}), off2(k_ + 1, {0, 0}) {}
    int o1(int c, Side d) const { return off1[c][d == Side::Left ? 0 : 1]; }
    int o2(int c, Side d) const { return off2[c][d == Side::Left ? 0 : 1]; }
    OffsetPair pair(int c, Side d) const { return {o1(c, d), o2(c, d)}; }
};

/// The combinatorial offset rule: where the two new local edges of each
/// child land. matched_color is the color of the matching edge of the vertex
/// being split (the environment); the rule is independent of everything else
/// about the drawing.
EnvOffsets env_offsets(const VertexDetails& det, int matched_color, int k);

/// One doubling step: 2n points with children of vertex v at indices 2v
/// (first child, farther from the target) and 2v+1, plus the inherited
/// coloring, the new matching, and the replicated details.
struct DoubledDrawing {
    PointSet points;
    EdgeColoring coloring;
    Matching matching;
    std::vector<std::size_t> parent; // child index -> parent index
    std::vector<int> slot;           // child index -> 1 or 2
    std::vector<VertexDetails> details;
};

/// Side counts of p with the matching line directed toward an explicit
/// target q (the edge pq is excluded). Used for hypothetical targets.
SideCounts side_counts(const PointSet& P, const EdgeColoring& chi, std::size_t p,
                       std::size_t q);

SideCounts side_counts(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                       std::size_t p);

/// Replaces every point p by two points p +- eps*(hhat(p)-p) with a dyadic
/// eps = 2^-s chosen so that the realized order type equals the limit order
/// type for eps -> 0+ (coordinates are rescaled by 2^s to stay integral).
/// Colors, matching and details are assembled from the inputs.
DoubledDrawing double_once(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                           const std::vector<VertexDetails>& details);

/// t >= 1 doubling steps, details replicated down the tree.
DoubledDrawing double_iterate(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                              const std::vector<VertexDetails>& details, unsigned t);

/// Offsets measured on an explicit doubling step:
/// (S^d_c(p1) - 2 S^d_c(p), S^d_c(p2) - 2 S^d_c(p)). The result always
/// satisfies the OffsetPair constraints; a violation throws.
OffsetPair extract_offsets(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                           const std::vector<VertexDetails>& details, std::size_t p, int c,
                           Side d);

/// Crossing classes of a doubled drawing, by how the two crossing segments
/// relate to the parent drawing. Used by verification diagnostics.
enum class QuadClass {
    Inherited,     // four distinct parents
    EdgeCopies,    // both segments copy the same parent edge
    LocalSameSide, // shared parent, both segments copy non-matching edges
    LocalMatched,  // shared parent, one segment copies its matching edge
    Degenerate     // involves a sibling edge (never crosses anything)
};

/// Monochromatic crossing counts of D grouped by class. parents/slots and
/// the parent-level matching identify the classes.
std::array<BigInt, 5> count_by_class(const DoubledDrawing& D, const Matching& parent_matching);

} // namespace kcross
