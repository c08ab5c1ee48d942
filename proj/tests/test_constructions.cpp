#include <doctest.h>

#include <random>
#include <set>

#include "shadow/constructions.hpp"
#include "shadow/families.hpp"
#include "test_support.hpp"

using namespace shadow;
namespace ts = shadow::testsupport;

namespace {

bool no_two_shadows_adjacent(const ShadowGraph &sg) {
    for (const Edge &e : sg.graph().edges())
        if (sg.is_shadow(e.u) && sg.is_shadow(e.v)) return false;
    return true;
}

bool triangle_free(const Graph &g) {
    for (const Edge &e : g.edges())
        for (Vertex w : g.neighbors(e.u))
            if (w != e.v && g.has_edge(w, e.v)) return false;
    return true;
}

} // namespace

TEST_CASE("great shadow of small fixtures") {
    SUBCASE("S(K2) is the diamond") {
        ShadowGraph sg = great_shadow(complete_graph(2));
        const Graph &h = sg.graph();
        CHECK(h.order() == 4);
        CHECK(h.size() == 5);
        CHECK(h.has_edge(0, 1));  // uv
        CHECK(h.has_edge(0, 2));  // uu'
        CHECK(h.has_edge(1, 3));  // vv'
        CHECK(h.has_edge(0, 3));  // uv'
        CHECK(h.has_edge(1, 2));  // vu'
        CHECK_FALSE(h.has_edge(2, 3)); // shadows never adjacent
    }
    SUBCASE("S(K3) holds a spanning K3,3 across the parts") {
        ShadowGraph sg = great_shadow(complete_graph(3));
        CHECK(sg.graph().order() == 6);
        CHECK(sg.graph().size() == 12);
        for (Vertex u = 0; u < 3; ++u)
            for (Vertex s = 3; s < 6; ++s) CHECK(sg.graph().has_edge(u, s));
    }
    SUBCASE("S(K1) is a single edge") {
        ShadowGraph sg = great_shadow(Graph(1, {}));
        CHECK(sg.graph().order() == 2);
        CHECK(sg.graph().size() == 1);
        CHECK(sg.graph().has_edge(0, 1));
    }
}

TEST_CASE("small shadow of small fixtures") {
    SUBCASE("s(K2) is the path on four vertices") {
        Graph h = small_shadow(complete_graph(2)).graph();
        CHECK(h.order() == 4);
        CHECK(h.size() == 3);
        // v' - u - v - u' with u=0, v=1, u'=2, v'=3
        CHECK(h.has_edge(3, 0));
        CHECK(h.has_edge(0, 1));
        CHECK(h.has_edge(1, 2));
        CHECK(h.degree(2) == 1);
        CHECK(h.degree(3) == 1);
    }
    SUBCASE("s(K1) is two isolated vertices") {
        Graph h = small_shadow(Graph(1, {})).graph();
        CHECK(h.order() == 2);
        CHECK(h.size() == 0);
    }
    SUBCASE("s(C4) has 3m edges") {
        Graph h = small_shadow(cycle_graph(4)).graph();
        CHECK(h.order() == 8);
        CHECK(h.size() == 12);
    }
}

TEST_CASE("mycielskian of small fixtures") {
    SUBCASE("mu(K2) is the five-cycle") {
        Graph h = mycielskian(complete_graph(2)).graph();
        CHECK(h.order() == 5);
        CHECK(h.size() == 5);
        for (Vertex v = 0; v < 5; ++v) CHECK(h.degree(v) == 2);
        CHECK(is_connected(h)); // connected 2-regular on 5 vertices = C5
    }
    SUBCASE("mu(K1) is one edge plus an isolated vertex") {
        ShadowGraph sg = mycielskian(Graph(1, {}));
        const Graph &h = sg.graph();
        CHECK(h.order() == 3);
        CHECK(h.size() == 1);
        CHECK(h.has_edge(1, 2)); // v'c only
        CHECK(h.degree(0) == 0);
    }
    SUBCASE("mu(C5) is the Grotzsch graph") {
        Graph h = mycielskian(cycle_graph(5)).graph();
        CHECK(h.order() == 11);
        CHECK(h.size() == 20);
        CHECK(triangle_free(h));
    }
}

TEST_CASE("shadow size laws and degree law on random graphs") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 14);
        Graph g = ts::random_graph(n, 0.35, rng);
        int m = g.size();

        ShadowGraph gs = great_shadow(g);
        CHECK(gs.graph().order() == 2 * n);
        CHECK(gs.graph().size() == 3 * m + n);
        CHECK(no_two_shadows_adjacent(gs));
        for (Vertex v = 0; v < n; ++v) {
            CHECK(gs.graph().degree(v) == 2 * g.degree(v) + 1);
            CHECK(gs.graph().degree(gs.shadow_of(v)) == g.degree(v) + 1);
        }

        ShadowGraph ss = small_shadow(g);
        CHECK(ss.graph().size() == 3 * m);
        CHECK(no_two_shadows_adjacent(ss));
        CHECK(ts::edge_subset(ss.graph(), gs.graph())); // shadow inside great shadow

        ShadowGraph mu = mycielskian(g);
        CHECK(mu.graph().order() == 2 * n + 1);
        CHECK(mu.graph().size() == 3 * m + n);
        // removing the central vertex leaves exactly the small shadow
        std::vector<std::pair<Vertex, Vertex>> trimmed;
        for (const Edge &e : mu.graph().edges())
            if (e.u != mu.central() && e.v != mu.central()) trimmed.emplace_back(e.u, e.v);
        CHECK(Graph(2 * n, trimmed) == ss.graph());

        // the original graph is the induced subgraph on 0..n-1
        for (const Edge &e : g.edges()) CHECK(gs.graph().has_edge(e.u, e.v));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                CHECK(gs.graph().has_edge(u, v) == g.has_edge(u, v));
    }
}

TEST_CASE("subgraph monotonicity of the great shadow") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        Graph g = ts::random_graph(n, 0.4, rng);
        Graph h = ts::random_edge_subgraph(g, rng);
        CHECK(ts::edge_subset(great_shadow(h).graph(), great_shadow(g).graph()));
    }
}
