#include "kcross/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace kcross {

void EdgeColoring::validate() const {
    if (k < 1) throw std::invalid_argument("EdgeColoring: k < 1");
    if (color.size() != n * (n - 1) / 2)
        throw std::invalid_argument("EdgeColoring: wrong number of edge colors");
    for (int c : color)
        if (c < 1 || c > k) throw std::invalid_argument("EdgeColoring: color out of range");
}

namespace {

// 1 if the crossing pairing of the quadruple (i,j,u,v) exists and is
// monochromatic, else 0. Colors are checked first: quadruples in which no
// pairing is monochromatic need no geometry.
int mono_quad(const PointSet& P, const EdgeColoring& chi, std::size_t i, std::size_t j,
              std::size_t u, std::size_t v) {
    int c0a = chi.at(i, j), c0b = chi.at(u, v);
    int c1a = chi.at(i, u), c1b = chi.at(j, v);
    int c2a = chi.at(i, v), c2b = chi.at(j, u);
    bool m0 = c0a == c0b, m1 = c1a == c1b, m2 = c2a == c2b;
    if (!m0 && !m1 && !m2) return 0;
    auto pairing = crossing_pairing(P[i], P[j], P[u], P[v]);
    if (!pairing) return 0;
    switch (*pairing) {
        case 0: return m0 ? 1 : 0;
        case 1: return m1 ? 1 : 0;
        default: return m2 ? 1 : 0;
    }
}

// Monochromatic crossings among quadruples containing vertex p.
BigInt mono_at_point(const PointSet& P, const EdgeColoring& chi, std::size_t p) {
    std::size_t n = P.size();
    BigInt total = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (a == p) continue;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (b == p) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (c == p) continue;
                std::size_t q[4] = {p, a, b, c};
                std::sort(q, q + 4);
                total += mono_quad(P, chi, q[0], q[1], q[2], q[3]);
            }
        }
    }
    return total;
}

} // namespace

BigInt count_monochromatic(const PointSet& P, const EdgeColoring& chi) {
    std::size_t n = P.size();
    if (chi.n != n) throw std::invalid_argument("count_monochromatic: size mismatch");
    chi.validate();
    BigInt total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t u = j + 1; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v)
                    total += mono_quad(P, chi, i, j, u, v);
    return total;
}

CrossingGraph build_crossing_graph(const PointSet& P) {
    validate_general_position(P);
    std::size_t n = P.size();
    CrossingGraph G;
    G.n = n;
    G.adj.assign(n * (n - 1) / 2, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t u = j + 1; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v) {
                    auto pairing = crossing_pairing(P[i], P[j], P[u], P[v]);
                    if (!pairing) continue;
                    std::size_t e, f;
                    if (*pairing == 0) {
                        e = pair_index(i, j, n);
                        f = pair_index(u, v, n);
                    } else if (*pairing == 1) {
                        e = pair_index(i, u, n);
                        f = pair_index(j, v, n);
                    } else {
                        e = pair_index(i, v, n);
                        f = pair_index(j, u, n);
                    }
                    G.adj[e].push_back(f);
                    G.adj[f].push_back(e);
                    ++G.edge_count;
                }
    return G;
}

BigInt monochromatic_adjacencies(const CrossingGraph& G, const EdgeColoring& chi) {
    BigInt twice = 0;
    for (std::size_t v = 0; v < G.adj.size(); ++v)
        for (std::size_t w : G.adj[v])
            if (chi.color[v] == chi.color[w]) ++twice;
    return twice / 2;
}

namespace {

// One greedy construction followed by first-improvement moves.
void local_search_round(const CrossingGraph& G, int k, std::mt19937_64& rng,
                        std::vector<int>& color) {
    std::size_t m = G.adj.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    color.assign(m, 0); // 0 = uncolored during greedy
    std::vector<std::size_t> cnt(k + 1);
    for (std::size_t v : order) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::size_t w : G.adj[v])
            if (color[w] != 0) ++cnt[color[w]];
        int best = 1;
        for (int c = 2; c <= k; ++c)
            if (cnt[c] < cnt[best]) best = c;
        color[v] = best;
    }

    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t v = 0; v < m; ++v) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (std::size_t w : G.adj[v]) ++cnt[color[w]];
            int cur = color[v];
            for (int c = 1; c <= k; ++c) {
                if (c != cur && cnt[c] < cnt[cur]) {
                    color[v] = c;
                    improved = true;
                    break;
                }
            }
        }
    }
}

} // namespace

EdgeColoring max_k_cut_local_search(const CrossingGraph& G, int k, const SearchConfig& cfg) {
    if (k < 1) throw std::invalid_argument("max_k_cut_local_search: k < 1");
    std::mt19937_64 rng(cfg.rng_seed);
    EdgeColoring best(k, G.n);
    BigInt best_cost = -1;
    std::vector<int> color;
    for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
        local_search_round(G, k, rng, color);
        EdgeColoring cand(k, G.n);
        cand.color = color;
        BigInt cost = monochromatic_adjacencies(G, cand);
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best = std::move(cand);
        }
    }
    return best;
}

namespace {

bool keeps_general_position(const PointSet& P, std::size_t p, const Point& cand) {
    std::size_t n = P.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (a == p) continue;
        if (P[a] == cand) return false;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (b == p) continue;
            if (orientation(cand, P[a], P[b]) == 0) return false;
        }
    }
    return true;
}

} // namespace

PointSet perturb_points(const PointSet& P, const EdgeColoring& chi, const SearchConfig& cfg) {
    PointSet cur = P;
    std::size_t n = cur.size();
    int r = std::max(1, cfg.perturbation_radius);
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t p = 0; p < n; ++p) {
            BigInt before = mono_at_point(cur, chi, p);
            Point orig = cur.pts[p];
            for (int dx = -r; dx <= r; ++dx) {
                bool moved = false;
                for (int dy = -r; dy <= r; ++dy) {
                    if (dx == 0 && dy == 0) continue;
                    Point cand{orig.x + dx, orig.y + dy};
                    if (!keeps_general_position(cur, p, cand)) continue;
                    cur.pts[p] = cand;
                    BigInt after = mono_at_point(cur, chi, p);
                    if (after < before) {
                        improved = true;
                        moved = true;
                        break;
                    }
                    cur.pts[p] = orig;
                }
                if (moved) break;
            }
        }
    }
    return cur;
}

std::pair<PointSet, EdgeColoring> alternate_search(const PointSet& P0, int k,
                                                   const SearchConfig& cfg) {
    validate_general_position(P0);
    PointSet P = P0;
    EdgeColoring chi(k, P.size());
    BigInt cur = count_monochromatic(P, chi);

    PointSet best_P = P;
    EdgeColoring best_chi = chi;
    BigInt best = cur;

    int stale = 0;
    std::uint64_t round_seed = cfg.rng_seed;
    while (stale < std::max(1, cfg.max_stale_iterations)) {
        SearchConfig round_cfg = cfg;
        round_cfg.rng_seed = round_seed++;
        CrossingGraph G = build_crossing_graph(P);
        EdgeColoring cand = max_k_cut_local_search(G, k, round_cfg);
        if (monochromatic_adjacencies(G, cand) > count_monochromatic(P, chi))
            cand = chi; // never let a recoloring round move backwards
        chi = std::move(cand);
        P = perturb_points(P, chi, round_cfg);
        cur = count_monochromatic(P, chi);
        if (cur < best) {
            best = cur;
            best_P = P;
            best_chi = chi;
            stale = 0;
        } else {
            ++stale;
        }
        if (best == 0) break;
    }
    return {best_P, best_chi};
}

PointSet random_general_position(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_general_position: empty set");
    std::mt19937_64 rng(seed);
    long long hi = 4 * static_cast<long long>(n);
    PointSet P;
    P.pts.reserve(n);
    int attempts = 0;
    while (P.size() < n) {
        std::uniform_int_distribution<long long> coord(0, hi);
        Point cand{BigInt(coord(rng)), BigInt(coord(rng))};
        bool ok = true;
        for (std::size_t i = 0; ok && i < P.size(); ++i) {
            if (P[i] == cand) ok = false;
            for (std::size_t j = i + 1; ok && j < P.size(); ++j)
                if (orientation(P[i], P[j], cand) == 0) ok = false;
        }
        if (ok) {
            P.pts.push_back(cand);
            attempts = 0;
        } else if (++attempts > 1000) {
            hi *= 2; // grid too tight for this many points; widen and go on
            attempts = 0;
        }
    }
    return P;
}

} // namespace kcross
