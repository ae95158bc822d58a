#include "doctest.h"

#include <algorithm>
#include <random>

#include "kcross/coloring.hpp"
#include "kcross/geom.hpp"
#include "testutil.hpp"

using namespace kcross;
using namespace testutil;

namespace {

// Count equal-colored crossing pairs straight from the segment-pair
// enumeration; shares no code with the quadruple-based counter.
BigInt mono_by_enumeration(const PointSet& P, const EdgeColoring& chi) {
    BigInt total = 0;
    for (const auto& [s, t] : enumerate_crossings(P))
        if (chi.at(s.a, s.b) == chi.at(t.a, t.b)) ++total;
    return total;
}

BigInt exhaustive_min_mono(const CrossingGraph& G, int k) {
    std::size_t edges = G.n * (G.n - 1) / 2;
    EdgeColoring chi(k, G.n);
    BigInt best = -1;
    while (true) {
        BigInt cur = monochromatic_adjacencies(G, chi);
        if (best < 0 || cur < best) best = cur;
        std::size_t pos = 0;
        while (pos < edges && chi.color[pos] == k) chi.color[pos++] = 1;
        if (pos == edges) break;
        ++chi.color[pos];
    }
    return best;
}

} // namespace

TEST_CASE("coloring validation") {
    EdgeColoring chi(2, 5);
    CHECK_NOTHROW(chi.validate());
    chi.set(1, 3, 2);
    CHECK(chi.at(3, 1) == 2);
    chi.color[0] = 3;
    CHECK_THROWS_AS(chi.validate(), std::invalid_argument);
    chi.color[0] = 0;
    CHECK_THROWS_AS(chi.validate(), std::invalid_argument);
}

TEST_CASE("monochromatic count on the square") {
    PointSet P;
    P.pts = {{BigInt(0), BigInt(0)},
             {BigInt(4), BigInt(1)},
             {BigInt(5), BigInt(5)},
             {BigInt(1), BigInt(4)}};
    EdgeColoring chi(2, 4);
    chi.set(0, 2, 2);
    chi.set(1, 3, 2); // both diagonals color 2
    CHECK(count_monochromatic(P, chi) == 1);
    chi.set(1, 3, 1); // now the only crossing is bichromatic
    CHECK(count_monochromatic(P, chi) == 0);
}

TEST_CASE("one color counts every crossing") {
    PointSet P = parabola(6);
    EdgeColoring chi(1, 6);
    CHECK(count_monochromatic(P, chi) == 15);
    CHECK(enumerate_crossings(P).size() == 15);
}

TEST_CASE("quadruple count matches segment-pair enumeration") {
    std::mt19937_64 rng(101);
    for (std::size_t n : {5, 6, 7})
        for (int k : {1, 2, 3}) {
            PointSet P = random_points(n, rng);
            EdgeColoring chi = random_coloring(k, n, rng);
            CHECK(count_monochromatic(P, chi) == mono_by_enumeration(P, chi));
        }
}

TEST_CASE("count is invariant under color relabeling") {
    std::mt19937_64 rng(103);
    PointSet P = random_points(7, rng);
    EdgeColoring chi = random_coloring(3, 7, rng);
    EdgeColoring swapped = chi;
    for (int& c : swapped.color) c = c == 1 ? 3 : c == 3 ? 1 : c;
    CHECK(count_monochromatic(P, chi) == count_monochromatic(P, swapped));
}

TEST_CASE("refining a coloring never adds monochromatic crossings") {
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<int> bit(0, 1);
    PointSet P = random_points(8, rng);
    EdgeColoring coarse = random_coloring(2, 8, rng);
    EdgeColoring fine(4, 8);
    for (std::size_t e = 0; e < coarse.color.size(); ++e)
        fine.color[e] = coarse.color[e] + 2 * bit(rng);
    CHECK(count_monochromatic(P, fine) <= count_monochromatic(P, coarse));
}

TEST_CASE("crossing graph mirrors the crossing enumeration") {
    std::mt19937_64 rng(109);
    PointSet P = random_points(7, rng);
    CrossingGraph G = build_crossing_graph(P);
    CHECK(G.edge_count == enumerate_crossings(P).size());
    for (std::size_t u = 0; u < G.adj.size(); ++u)
        for (std::size_t v : G.adj[u])
            CHECK(std::count(G.adj[v].begin(), G.adj[v].end(), u) == 1);
    EdgeColoring chi = random_coloring(2, 7, rng);
    CHECK(monochromatic_adjacencies(G, chi) == count_monochromatic(P, chi));
}

TEST_CASE("local search reaches the exhaustive optimum on small instances") {
    SearchConfig cfg;
    cfg.restarts = 8;
    cfg.rng_seed = 5;

    PointSet square;
    square.pts = {{BigInt(0), BigInt(0)},
                  {BigInt(4), BigInt(1)},
                  {BigInt(5), BigInt(5)},
                  {BigInt(1), BigInt(4)}};
    CrossingGraph G4 = build_crossing_graph(square);
    EdgeColoring best4 = max_k_cut_local_search(G4, 2, cfg);
    CHECK(monochromatic_adjacencies(G4, best4) == exhaustive_min_mono(G4, 2));

    CrossingGraph G5 = build_crossing_graph(parabola(5));
    for (int k : {2, 3}) {
        EdgeColoring found = max_k_cut_local_search(G5, k, cfg);
        CHECK(monochromatic_adjacencies(G5, found) == exhaustive_min_mono(G5, k));
    }
}

TEST_CASE("local search results cannot be improved by one recoloring") {
    std::mt19937_64 rng(113);
    PointSet P = random_points(8, rng);
    CrossingGraph G = build_crossing_graph(P);
    SearchConfig cfg;
    cfg.rng_seed = 7;
    EdgeColoring chi = max_k_cut_local_search(G, 2, cfg);
    BigInt cur = monochromatic_adjacencies(G, chi);
    for (std::size_t e = 0; e < chi.color.size(); ++e) {
        int old = chi.color[e];
        for (int c = 1; c <= 2; ++c) {
            if (c == old) continue;
            chi.color[e] = c;
            CHECK(monochromatic_adjacencies(G, chi) >= cur);
        }
        chi.color[e] = old;
    }
}

TEST_CASE("search is deterministic for a fixed seed") {
    std::mt19937_64 rng(127);
    PointSet P = random_points(8, rng);
    CrossingGraph G = build_crossing_graph(P);
    SearchConfig cfg;
    cfg.rng_seed = 99;
    EdgeColoring a = max_k_cut_local_search(G, 3, cfg);
    EdgeColoring b = max_k_cut_local_search(G, 3, cfg);
    CHECK(a.color == b.color);
}

TEST_CASE("enough colors remove every monochromatic crossing") {
    CrossingGraph G = build_crossing_graph(parabola(5));
    SearchConfig cfg;
    EdgeColoring chi = max_k_cut_local_search(G, 10, cfg);
    CHECK(monochromatic_adjacencies(G, chi) == 0);
}

TEST_CASE("perturbation keeps general position and never hurts") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 3; ++trial) {
        PointSet P = random_points(7, rng);
        EdgeColoring chi = random_coloring(2, 7, rng);
        BigInt before = count_monochromatic(P, chi);
        SearchConfig cfg;
        cfg.rng_seed = rng();
        PointSet Q = perturb_points(P, chi, cfg);
        CHECK_NOTHROW(validate_general_position(Q));
        CHECK(count_monochromatic(Q, chi) <= before);
    }
}

TEST_CASE("alternating search improves on the single-color start") {
    std::mt19937_64 rng(137);
    PointSet P = random_points(8, rng);
    EdgeColoring all_one(2, 8);
    BigInt start = count_monochromatic(P, all_one);
    SearchConfig cfg;
    cfg.rng_seed = 3;
    auto [bestP, bestChi] = alternate_search(P, 2, cfg);
    CHECK_NOTHROW(validate_general_position(bestP));
    CHECK(count_monochromatic(bestP, bestChi) <= start);
}

TEST_CASE("random point sets are in general position") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        PointSet P = random_general_position(12, seed);
        CHECK(P.size() == 12);
        CHECK_NOTHROW(validate_general_position(P));
    }
}
