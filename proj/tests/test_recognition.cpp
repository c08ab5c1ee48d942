#include <doctest.h>

#include <random>

#include "shadow/families.hpp"
#include "shadow/oracle.hpp"
#include "shadow/recognition.hpp"
#include "test_support.hpp"

using namespace shadow;
namespace ts = shadow::testsupport;

TEST_CASE("classify fixed graphs with validating certificates") {
    SUBCASE("K3 is not bipartite") {
        Verdict v = classify(complete_graph(3));
        auto *cert = std::get_if<NotBipartiteCert>(&v);
        REQUIRE(cert != nullptr);
        CHECK(cert->odd_cycle.is_odd_cycle());
        CHECK(cert->odd_cycle.validates(complete_graph(3)));
    }
    SUBCASE("C4 plus pendant is a bipartite cactus") {
        Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
        Verdict v = classify(g);
        auto *cert = std::get_if<BipartiteCactusCert>(&v);
        REQUIRE(cert != nullptr);
        // cycle tree: the cut vertex 0 and one cycle node, joined
        CHECK(cert->tree.nodes.size() == 2);
        CHECK(cert->tree.edges.size() == 1);
        CHECK(cert->tree.cycles.size() == 1);
    }
    SUBCASE("subdividing every edge of the diamond leaves a bipartite non-cactus") {
        // diamond u,v,a,b; subdivision vertex on each of the five edges
        Graph g = build_graph(9, {{0, 4}, {4, 1},   // u - v through mid
                                  {0, 5}, {5, 2}, {2, 6}, {6, 1},   // u - a - v
                                  {0, 7}, {7, 3}, {3, 8}, {8, 1}}); // u - b - v
        CHECK_FALSE(find_odd_cycle(g).has_value());
        Verdict v = classify(g);
        auto *cert = std::get_if<NotCactusCert>(&v);
        REQUIRE(cert != nullptr);
        std::string why;
        CHECK_MESSAGE(cert->theta.validates(g, &why), why);
        int total = cert->theta.ell() + cert->theta.m() + cert->theta.n();
        CHECK(total == 9); // the whole subdivided diamond
    }
}

TEST_CASE("classify matches forbidden-subgraph emptiness on all small graphs") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph &g : connected_graphs(n)) {
            bool bc = is_bipartite_cactus(classify(g));
            bool no_odd = !find_odd_cycle(g).has_value();
            bool no_theta = !find_theta(g).has_value();
            CHECK(bc == (no_odd && no_theta));
        }
    }
}

TEST_CASE("cycle tree shapes") {
    SUBCASE("single cycle collapses to one node") {
        CycleTree t = cycle_tree(cycle_graph(6));
        CHECK(t.nodes.size() == 1);
        CHECK(t.nodes[0].kind == CycleTree::Node::Kind::Cycle);
        CHECK(t.edges.empty());
        CHECK(t.cycles.size() == 1);
        CHECK(t.cycles[0].size() == 6);
    }
    SUBCASE("two C4 sharing a vertex have a star tree") {
        Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
        CycleTree t = cycle_tree(g);
        CHECK(t.nodes.size() == 3); // cut vertex 0 plus two cycle nodes
        CHECK(t.edges.size() == 2);
        CHECK(t.node_index_of_cut(0) == 0);
    }
    SUBCASE("paths keep only interior cut vertices") {
        CycleTree t3 = cycle_tree(path_graph(3));
        CHECK(t3.nodes.size() == 1);
        CHECK(t3.edges.empty());

        CycleTree t2 = cycle_tree(path_graph(2));
        CHECK(t2.nodes.empty());

        CycleTree t5 = cycle_tree(path_graph(5));
        CHECK(t5.nodes.size() == 3);
        CHECK(t5.edges.size() == 2);
        CHECK(t5.is_acyclic());
    }
    SUBCASE("non-cactus input is rejected") {
        CHECK_THROWS_AS(cycle_tree(complete_graph(4)), std::invalid_argument);
    }
}

TEST_CASE("cycle tree invariants on random bipartite cacti") {
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = ts::random_bipartite_cactus(4 + static_cast<int>(rng() % 30), rng);
        CycleTree t = cycle_tree(g);
        CHECK(t.is_acyclic());
        // cycle node count equals the circuit rank m - n + 1 of a connected graph
        CHECK(static_cast<int>(t.cycles.size()) == g.size() - g.order() + 1);
        // no cycle edge appears as a tree edge, and every cycle is represented once
        for (const auto &cyc : t.cycles) CHECK(cyc.size() >= 3);
    }
}

TEST_CASE("small shadow planarity conditions") {
    CHECK(small_shadow_planar(complete_graph(4)).planar);
    CHECK(small_shadow_planar(complete_graph(3)).planar);
    CHECK(small_shadow_planar(cycle_graph(6)).planar);

    SUBCASE("K5 fails the block list") {
        auto v = small_shadow_planar(complete_graph(5));
        CHECK_FALSE(v.planar);
        CHECK(v.reason == SmallShadowVerdict::Reason::BlockNotAllowed);
    }
    SUBCASE("odd cycle beyond the triangle fails the block list") {
        auto v = small_shadow_planar(cycle_graph(5));
        CHECK_FALSE(v.planar);
        CHECK(v.reason == SmallShadowVerdict::Reason::BlockNotAllowed);
    }
    SUBCASE("pendant edge on K4 violates the cut-degree condition") {
        Graph g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
        auto v = small_shadow_planar(g);
        CHECK_FALSE(v.planar);
        CHECK(v.reason == SmallShadowVerdict::Reason::CutVertexDegree);
    }
    SUBCASE("central triangle with all vertices cut fails") {
        // central triangle 0,1,2; pendant triangles on each vertex
        Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 0},
                                  {0, 3}, {3, 4}, {4, 0},
                                  {1, 5}, {5, 6}, {6, 1},
                                  {2, 7}, {7, 8}, {8, 2}});
        auto v = small_shadow_planar(g);
        CHECK_FALSE(v.planar);
        CHECK(v.reason == SmallShadowVerdict::Reason::TriangleAllCut);
    }
    SUBCASE("even cycle with pendant passes") {
        Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}});
        CHECK(small_shadow_planar(g).planar);
    }
    SUBCASE("single vertex is rejected") {
        CHECK_THROWS_AS(small_shadow_planar(Graph(1, {})), std::invalid_argument);
    }
}
