#ifndef SHADOW_TEST_SUPPORT_HPP
#define SHADOW_TEST_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "shadow/graph.hpp"

namespace shadow::testsupport {

// Independent 2-coloring check (never shares code with find_odd_cycle):
// greedy BFS over an adjacency refreshed from the edge list.
inline bool independently_two_colorable(const Graph &g) {
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(g.order()));
    for (const Edge &e : g.edges()) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> color(static_cast<size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Brute-force: does g contain an odd cycle of length at most max_len?
// Simple DFS cycle enumeration, adequate for small fixtures.
inline bool has_odd_cycle_brute(const Graph &g, int max_len) {
    std::vector<Vertex> path;
    std::vector<char> on_path(static_cast<size_t>(g.order()), 0);
    bool found = false;
    auto dfs = [&](auto &&self, Vertex v, Vertex start) -> void {
        if (found) return;
        path.push_back(v);
        on_path[static_cast<size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) {
            if (found) break;
            if (w == start && path.size() >= 3 && path.size() % 2 == 1) {
                found = true;
                break;
            }
            if (!on_path[static_cast<size_t>(w)] && w > start &&
                static_cast<int>(path.size()) < max_len)
                self(self, w, start);
        }
        on_path[static_cast<size_t>(v)] = 0;
        path.pop_back();
    };
    for (Vertex s = 0; s < g.order() && !found; ++s) dfs(dfs, s, s);
    return found;
}

inline Graph random_graph(int n, double p, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Random connected bipartite cactus on up to max_n vertices, grown by
// attaching pendant vertices and pendant even cycles anywhere.
inline Graph random_bipartite_cactus(int max_n, std::mt19937_64 &rng) {
    int n = 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (n < max_n) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        Vertex at = pick(rng);
        if (coin(rng) < 0.45) {
            edges.emplace_back(at, n);
            n += 1;
        } else {
            std::uniform_int_distribution<int> half(2, 4);
            int len = 2 * half(rng); // even cycle, order 4..8
            if (n + len - 1 > max_n) {
                edges.emplace_back(at, n);
                n += 1;
                continue;
            }
            Vertex prev = at;
            for (int i = 0; i < len - 1; ++i) {
                edges.emplace_back(prev, n);
                prev = n;
                n += 1;
            }
            edges.emplace_back(prev, at);
        }
    }
    return Graph(n, edges);
}

// Random edge-subgraph of g on the same vertex set.
inline Graph random_edge_subgraph(const Graph &g, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge &e : g.edges())
        if (coin(rng) < 0.6) edges.emplace_back(e.u, e.v);
    return Graph(g.order(), edges);
}

inline bool edge_subset(const Graph &h, const Graph &g) {
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [&](const Edge &e) { return g.has_edge(e.u, e.v); });
}

} // namespace shadow::testsupport

#endif
