#include "kcross/matchopt.hpp"

#include <queue>
#include <stdexcept>
#include <utility>

namespace kcross {

namespace {

struct FlowEdge {
    std::size_t to;
    int cap;
    BigInt cost;
    std::size_t rev;
};

struct FlowGraph {
    std::vector<std::vector<FlowEdge>> adj;

    explicit FlowGraph(std::size_t nodes) : adj(nodes) {}

    void add_edge(std::size_t from, std::size_t to, int cap, const BigInt& cost) {
        adj[from].push_back({to, cap, cost, adj[to].size()});
        adj[to].push_back({from, 0, -cost, adj[from].size() - 1});
    }
};

} // namespace

WeightTable build_weights(const PointSet& P, const EdgeColoring& chi) {
    std::size_t n = P.size();
    if (n < 3) throw std::invalid_argument("build_weights: need at least 3 points");
    if (chi.n != n) throw std::invalid_argument("build_weights: coloring size mismatch");
    chi.validate();
    validate_general_position(P);
    WeightTable weights;
    weights.n = n;
    weights.entry.assign(n, std::vector<WeightEntry>(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (q == p) continue;
            SideCounts sc = side_counts(P, chi, p, q);
            int mu = chi.at(p, q);
            bool first = true;
            WeightEntry best{};
            for (int cp = 1; cp <= chi.k; ++cp)
                for (M1 m1 : {M1::Left, M1::Right, M1::Sibling})
                    for (M2 m2 : {M2::Left, M2::Right}) {
                        VertexDetails det{cp, m1, m2};
                        Rat a = vertex_terms(sc, mu, det).c4;
                        if (first || a < best.weight) {
                            best = {a, det};
                            first = false;
                        }
                    }
            weights.entry[p][q] = best;
        }
    return weights;
}

MatchPlan plan_for_matching(const WeightTable& weights, const Matching& m) {
    m.validate(weights.n);
    MatchPlan plan;
    plan.matching = m;
    plan.details.resize(weights.n);
    plan.weight_sum = 0;
    for (std::size_t p = 0; p < weights.n; ++p) {
        const WeightEntry& e = weights.entry[p][m(p)];
        plan.details[p] = e.det;
        plan.weight_sum += e.weight;
    }
    return plan;
}

MatchPlan optimal_matching(const WeightTable& weights) {
    std::size_t n = weights.n;
    if (n < 3) throw std::invalid_argument("optimal_matching: need at least 3 points");

    BigInt lcm_den = 1;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (q != p) lcm_den = lcm(lcm_den, denominator(weights.entry[p][q].weight));
    auto scaled = [&](const Rat& w) {
        return numerator(w) * (lcm_den / denominator(w));
    };

    // source -> one node per vertex -> one capacity-1 node per unordered
    // pair -> sink. The pair capacity is what rules out 2-cycles.
    std::size_t pairs = n * (n - 1) / 2;
    std::size_t src = 0;
    std::size_t sink = 1 + n + pairs;
    FlowGraph graph(sink + 1);
    std::vector<std::pair<std::size_t, std::size_t>> pair_vertices(pairs);
    for (std::size_t p = 0; p < n; ++p) graph.add_edge(src, 1 + p, 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t node = 1 + n + pair_index(i, j, n);
            pair_vertices[pair_index(i, j, n)] = {i, j};
            graph.add_edge(1 + i, node, 1, scaled(weights.entry[i][j].weight));
            graph.add_edge(1 + j, node, 1, scaled(weights.entry[j][i].weight));
            graph.add_edge(node, sink, 1, 0);
        }

    // Weights may be negative; the layered graph is acyclic with node
    // indices in layer order, so one forward pass yields exact initial
    // potentials, after which reduced costs stay nonnegative.
    std::vector<BigInt> phi(sink + 1);
    {
        std::vector<bool> has(sink + 1, false);
        has[src] = true;
        for (std::size_t u = 0; u <= sink; ++u) {
            if (!has[u]) continue;
            for (const FlowEdge& e : graph.adj[u]) {
                if (e.cap <= 0) continue;
                BigInt nd = phi[u] + e.cost;
                if (!has[e.to] || nd < phi[e.to]) {
                    has[e.to] = true;
                    phi[e.to] = nd;
                }
            }
        }
        for (std::size_t u = 0; u <= sink; ++u)
            if (!has[u]) throw std::logic_error("optimal_matching: disconnected node");
    }

    std::vector<BigInt> dist(sink + 1);
    std::vector<bool> seen(sink + 1), done(sink + 1);
    std::vector<std::size_t> prev_node(sink + 1), prev_edge(sink + 1);
    for (std::size_t round = 0; round < n; ++round) {
        std::fill(seen.begin(), seen.end(), false);
        std::fill(done.begin(), done.end(), false);
        using Item = std::pair<BigInt, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        seen[src] = true;
        dist[src] = 0;
        pq.push({BigInt(0), src});
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (done[u] || du != dist[u]) continue;
            done[u] = true;
            for (std::size_t idx = 0; idx < graph.adj[u].size(); ++idx) {
                const FlowEdge& e = graph.adj[u][idx];
                if (e.cap <= 0) continue;
                BigInt nd = dist[u] + e.cost + phi[u] - phi[e.to];
                if (!seen[e.to] || nd < dist[e.to]) {
                    seen[e.to] = true;
                    dist[e.to] = nd;
                    prev_node[e.to] = u;
                    prev_edge[e.to] = idx;
                    pq.push({nd, e.to});
                }
            }
        }
        if (!done[sink]) throw std::logic_error("optimal_matching: no augmenting path");
        for (std::size_t u = 0; u <= sink; ++u)
            if (done[u]) phi[u] += dist[u];
        std::size_t v = sink;
        while (v != src) {
            FlowEdge& e = graph.adj[prev_node[v]][prev_edge[v]];
            e.cap -= 1;
            graph.adj[v][e.rev].cap += 1;
            v = prev_node[v];
        }
    }

    Matching m;
    m.target.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        bool found = false;
        for (const FlowEdge& e : graph.adj[1 + p]) {
            if (e.to <= n || e.to >= sink || e.cap != 0) continue;
            auto [i, j] = pair_vertices[e.to - 1 - n];
            m.target[p] = i == p ? j : i;
            found = true;
            break;
        }
        if (!found) throw std::logic_error("optimal_matching: vertex left unmatched");
    }
    return plan_for_matching(weights, m);
}

MatchPlan optimal_matching(const PointSet& P, const EdgeColoring& chi) {
    return optimal_matching(build_weights(P, chi));
}

MatchPlan brute_force_matching(const WeightTable& weights) {
    std::size_t n = weights.n;
    if (n < 3) throw std::invalid_argument("brute_force_matching: need at least 3 points");
    if (n > 7) throw std::invalid_argument("brute_force_matching: instance too large");
    std::vector<std::size_t> cur(n), best;
    Rat best_weight;
    bool have = false;
    auto rec = [&](auto&& self, std::size_t p, const Rat& acc) -> void {
        if (p == n) {
            if (!have || acc < best_weight) {
                best_weight = acc;
                best = cur;
                have = true;
            }
            return;
        }
        for (std::size_t q = 0; q < n; ++q) {
            if (q == p) continue;
            if (q < p && cur[q] == p) continue;
            cur[p] = q;
            self(self, p + 1, acc + weights.entry[p][q].weight);
        }
    };
    rec(rec, 0, Rat(0));
    Matching m;
    m.target = best;
    return plan_for_matching(weights, m);
}

MatchPlan brute_force_matching(const PointSet& P, const EdgeColoring& chi) {
    return brute_force_matching(build_weights(P, chi));
}

Rat total_alpha(const PointSet& P, const EdgeColoring& chi, const MatchPlan& plan) {
    return Rat(count_monochromatic(P, chi)) + global_term(P.size()).c4 + plan.weight_sum;
}

} // namespace kcross
