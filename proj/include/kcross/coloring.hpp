#pragma once

#include "kcross/geom.hpp"

#include <cstdint>
#include <vector>

namespace kcross {

/// k-edge-coloring of K_n: one color in 1..k per unordered vertex pair,
/// stored over the lexicographic pair listing (see pair_index).
struct EdgeColoring {
    int k = 1;
    std::size_t n = 0;
    std::vector<int> color; // size n*(n-1)/2

    EdgeColoring() = default;
    EdgeColoring(int k_, std::size_t n_, int fill = 1)
        : k(k_), n(n_), color(n_ * (n_ - 1) / 2, fill) {}

    int at(std::size_t i, std::size_t j) const { return color[pair_index(i, j, n)]; }
    void set(std::size_t i, std::size_t j, int c) { color[pair_index(i, j, n)] = c; }
    void validate() const;
};

/// Graph on the C(n,2) segments of a drawing, adjacent iff they cross.
struct CrossingGraph {
    std::size_t n = 0;                           // drawing vertices
    std::vector<std::vector<std::size_t>> adj;   // indexed by pair_index
    std::size_t edge_count = 0;
};

struct SearchConfig {
    int restarts = 8;
    int max_stale_iterations = 3;
    int perturbation_radius = 2;
    std::uint64_t rng_seed = 1;
};

/// Number of crossing segment pairs whose two segments share a color.
BigInt count_monochromatic(const PointSet& P, const EdgeColoring& chi);

CrossingGraph build_crossing_graph(const PointSet& P);

/// Best-of-restarts greedy + first-improvement local search: the returned
/// coloring admits no single-segment recolor that lowers the monochromatic
/// adjacency count. Deterministic for a fixed seed.
EdgeColoring max_k_cut_local_search(const CrossingGraph& G, int k, const SearchConfig& cfg);

/// Monochromatic adjacency count of chi on G (equals count_monochromatic on
/// the underlying drawing).
BigInt monochromatic_adjacencies(const CrossingGraph& G, const EdgeColoring& chi);

/// Repeated single-point integer moves within a Chebyshev radius; accepts
/// only strictly improving, general-position preserving moves. Returns the
/// input when no improving move exists.
PointSet perturb_points(const PointSet& P, const EdgeColoring& chi, const SearchConfig& cfg);

/// Alternates recoloring (max_k_cut_local_search) and perturbation until the
/// monochromatic count stops improving. The count never increases between
/// rounds.
std::pair<PointSet, EdgeColoring> alternate_search(const PointSet& P0, int k,
                                                   const SearchConfig& cfg);

/// n distinct points sampled uniformly from the [0, 4n]^2 grid, resampling
/// any point that lands on a line through two earlier ones.
PointSet random_general_position(std::size_t n, std::uint64_t seed);

} // namespace kcross
