#pragma once

#include <cstddef>
#include <vector>

#include "kcross/coloring.hpp"
#include "kcross/doubling.hpp"
#include "kcross/geom.hpp"
#include "kcross/numeric.hpp"

/// Closed forms for the monochromatic crossing count of the iterated doubled
/// drawing. The count after t rounds is an exact combination of 16^t, 8^t,
/// 4^t, 2^t and 1; everything here is derived mechanically from the level
/// recurrences of the per-vertex side-count trees, with rational arithmetic
/// throughout.

namespace kcross {

/// Exact coefficients over the basis {2^{4t}, 2^{3t}, 2^{2t}, 2^t, 1}.
struct TermCoeffs {
    Rat c4, c3, c2, c1, c0;

    Rat eval(unsigned t) const;
    TermCoeffs& operator+=(const TermCoeffs& o);
    TermCoeffs operator+(const TermCoeffs& o) const;
};

/// Growth decomposition cr(t) = alpha 16^t + beta 8^t + gamma 4^t +
/// delta 2^t + residual. The residual vanishes unless some vertex matches
/// its first child to the sibling with a sibling color different from its
/// matched color.
struct AsymptoticCoeffs {
    Rat alpha, beta, gamma, delta, residual;
};

/// Value of the j-th node (1-based, left to right) at depth i of the
/// side-count tree with root value x and child offsets (o1, o2):
/// 2^i x + o1 (2^i - j) + o2 (j - 1). Throws unless 1 <= j <= 2^i.
BigInt tree_value(long long x, int o1, int o2, unsigned i, unsigned long long j);

/// Crossing pairs among copies of distinct edges of the same parent edge,
/// summed over all levels: the term independent of matching and details.
TermCoeffs global_term(std::size_t n);

/// Same-cell pair count sum_i 16^{t-1-i} sum_j C(f_ij, 2) for one uniform
/// offset pair, without the crossing multiplicity.
TermCoeffs quad_term(long long x, int o1, int o2);

/// Cell value sum sum_i 16^{t-1-i} sum_j f_ij for one uniform offset pair.
TermCoeffs lin_term(long long x, int o1, int o2);

/// Full contribution of one vertex and its detail to the count: quadratic
/// terms over all cells plus linear terms at the matched-color cells, with
/// spine and off-spine environments tracked separately.
TermCoeffs vertex_terms(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                        std::size_t p, const VertexDetails& det);

/// Same, from precomputed side counts of the vertex and the color of its
/// matching edge. Depends on nothing else, which is what makes per-vertex
/// weights well defined before a matching is chosen.
TermCoeffs vertex_terms(const SideCounts& sc, int matched_color,
                        const VertexDetails& det);

/// Exact monochromatic crossing count of the t-fold doubled drawing,
/// evaluated without constructing it. t = 0 gives the base count.
BigInt formula_count(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                     const std::vector<VertexDetails>& details, unsigned t);

/// All five growth coefficients of cr(t).
AsymptoticCoeffs growth_coefficients(const PointSet& P, const EdgeColoring& chi,
                                     const Matching& m,
                                     const std::vector<VertexDetails>& details);

/// The 16^t coefficient contributed by vertex p alone. The leading
/// coefficient of the whole drawing is the base count plus the global
/// term's leading part plus the sum of these over all vertices.
Rat local_alpha(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                std::size_t p, const VertexDetails& det);

/// Upper bound 24 alpha / n^4 on the k-colored crossing constant.
Rat bound_from_alpha(const Rat& alpha, std::size_t n);

/// Solve sum_j c_j bases[j]^t = values[t] for t = 0..len-1 by exact
/// elimination. Used to cross-check the closed forms against raw counts.
std::vector<Rat> fit_powers(const std::vector<Rat>& values,
                            const std::vector<int>& bases);

} // namespace kcross
