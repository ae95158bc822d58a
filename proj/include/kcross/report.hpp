#pragma once

#include <cstddef>
#include <string>

#include "kcross/asymptotics.hpp"
#include "kcross/matchopt.hpp"
#include "kcross/numeric.hpp"

namespace kcross {

/// Certified upper bound on the k-colored crossing constant from one
/// drawing and plan, with the reference values it is judged against:
/// the bound from convex position with a balanced book coloring, and the
/// known lower bound for the constant as a sanity floor.
struct BoundReport {
    std::size_t n = 0;
    int k = 1;
    BigInt base_crossings;
    AsymptoticCoeffs coeffs;
    Rat bound;      // 24 alpha / n^4
    Rat book_bound; // 2/k^2 - 1/k^3
    Rat lower_gate; // 3 / (29 k^2)
    bool improves_book = false;
    bool above_gate = false;
};

BoundReport make_bound_report(const PointSet& P, const EdgeColoring& chi,
                              const MatchPlan& plan);

std::string render(const BoundReport& r);

} // namespace kcross
