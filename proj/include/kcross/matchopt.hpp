#pragma once

#include <cstddef>
#include <vector>

#include "kcross/asymptotics.hpp"
#include "kcross/coloring.hpp"
#include "kcross/doubling.hpp"
#include "kcross/geom.hpp"
#include "kcross/numeric.hpp"

/// Choice of the matching and per-vertex details that minimise the leading
/// growth coefficient. The coefficient splits into a part fixed by the
/// drawing and a per-vertex weight that depends only on the vertex, its
/// target and its detail, so the search is a degree-constrained
/// assignment over precomputed weights.

namespace kcross {

/// Best detail for one (vertex, target) choice together with its weight,
/// the vertex contribution to the 16^t coefficient.
struct WeightEntry {
    Rat weight;
    VertexDetails det;
};

/// entry[p][q] for p != q; diagonal entries are unused.
struct WeightTable {
    std::size_t n = 0;
    std::vector<std::vector<WeightEntry>> entry;
};

/// Minimise over sibling colors and child target choices per pair.
WeightTable build_weights(const PointSet& P, const EdgeColoring& chi);

struct MatchPlan {
    Matching matching;
    std::vector<VertexDetails> details;
    Rat weight_sum;
};

/// Minimum-weight target assignment without fixed points or 2-cycles,
/// as min-cost flow with one capacity-1 node per unordered pair.
MatchPlan optimal_matching(const WeightTable& weights);
MatchPlan optimal_matching(const PointSet& P, const EdgeColoring& chi);

/// Reference solver: exhaustive scan in lexicographic target order,
/// keeping the first optimum. Rejects n > 7.
MatchPlan brute_force_matching(const WeightTable& weights);
MatchPlan brute_force_matching(const PointSet& P, const EdgeColoring& chi);

/// Weight of a given valid matching under the table, with the per-vertex
/// optimal details filled in.
MatchPlan plan_for_matching(const WeightTable& weights, const Matching& m);

/// 16^t coefficient of the drawing under a plan: base crossing count plus
/// the leading part of the global term plus the plan's weight sum.
Rat total_alpha(const PointSet& P, const EdgeColoring& chi, const MatchPlan& plan);

} // namespace kcross
