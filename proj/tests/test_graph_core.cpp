#include <doctest.h>

#include <random>
#include <set>

#include "shadow/decomposition.hpp"
#include "shadow/families.hpp"
#include "shadow/graph.hpp"
#include "shadow/graph_io.hpp"
#include "shadow/theta.hpp"
#include "test_support.hpp"

using namespace shadow;
namespace ts = shadow::testsupport;

TEST_CASE("build_graph accepts simple graphs and rejects malformed input") {
    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(k3.has_edge(0, 2));

    Graph k2 = build_graph(2, {{0, 1}});
    CHECK(k2.size() == 1);
    CHECK(k2.degree(0) == 1);

    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("find_odd_cycle on fixed graphs") {
    auto tri = find_odd_cycle(complete_graph(3));
    REQUIRE(tri.has_value());
    CHECK(tri->vertices.size() == 3);
    CHECK(tri->validates(complete_graph(3)));

    CHECK_FALSE(find_odd_cycle(cycle_graph(6)).has_value());

    Graph pet = petersen_graph();
    auto odd = find_odd_cycle(pet);
    REQUIRE(odd.has_value());
    CHECK(odd->is_odd_cycle());
    CHECK(odd->validates(pet));
    CHECK(ts::has_odd_cycle_brute(pet, 5)); // existence confirmed independently
}

TEST_CASE("find_odd_cycle agrees with an independent 2-coloring") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = ts::random_graph(n, 0.05 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng);
        auto odd = find_odd_cycle(g);
        bool bip = ts::independently_two_colorable(g);
        CHECK(odd.has_value() == !bip);
        if (odd) {
            CHECK(odd->is_odd_cycle());
            CHECK(odd->validates(g));
        }
        auto coloring = two_coloring(g);
        CHECK(coloring.has_value() == bip);
        if (coloring)
            for (const Edge &e : g.edges())
                CHECK((*coloring)[static_cast<size_t>(e.u)] != (*coloring)[static_cast<size_t>(e.v)]);
    }
}

TEST_CASE("block decomposition of fixed graphs") {
    SUBCASE("C4 plus pendant vertex") {
        Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
        BlockDecomposition bd = block_decomposition(g);
        REQUIRE(bd.blocks.size() == 2);
        CHECK(bd.cut_vertices == std::vector<Vertex>{0});
        CHECK(bd.blocks[0].vertices == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(bd.blocks[0].is_cycle());
        CHECK(bd.blocks[1].vertices == std::vector<Vertex>{0, 4});
        CHECK(bd.blocks[1].is_bridge());
    }
    SUBCASE("K4 is one block without cut vertices") {
        BlockDecomposition bd = block_decomposition(complete_graph(4));
        CHECK(bd.blocks.size() == 1);
        CHECK(bd.cut_vertices.empty());
        CHECK_FALSE(bd.blocks[0].is_cycle());
    }
    SUBCASE("P5 splits into four edge blocks") {
        BlockDecomposition bd = block_decomposition(path_graph(5));
        CHECK(bd.blocks.size() == 4);
        CHECK(bd.cut_vertices == std::vector<Vertex>{1, 2, 3});
        for (const auto &b : bd.blocks) CHECK(b.is_bridge());
    }
}

TEST_CASE("block decomposition invariants on random graphs") {
    std::mt19937_64 rng(99121);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        Graph g = ts::random_graph(n, 0.3, rng);
        BlockDecomposition bd = block_decomposition(g);

        // every edge in exactly one block
        std::multiset<std::pair<Vertex, Vertex>> covered;
        for (const auto &b : bd.blocks)
            for (const Edge &e : b.edges) covered.emplace(e.u, e.v);
        CHECK(covered.size() == static_cast<size_t>(g.size()));
        for (const Edge &e : g.edges()) CHECK(covered.count({e.u, e.v}) == 1);

        // two blocks share at most one vertex, and shared vertices are cut
        for (size_t i = 0; i < bd.blocks.size(); ++i) {
            for (size_t j = i + 1; j < bd.blocks.size(); ++j) {
                std::vector<Vertex> inter;
                std::set_intersection(bd.blocks[i].vertices.begin(), bd.blocks[i].vertices.end(),
                                      bd.blocks[j].vertices.begin(), bd.blocks[j].vertices.end(),
                                      std::back_inserter(inter));
                CHECK(inter.size() <= 1);
                for (Vertex v : inter) CHECK(bd.is_cut_vertex(v));
            }
        }
    }
}

TEST_CASE("find_theta on fixed graphs") {
    SUBCASE("diamond is theta(1,2,1)") {
        auto [g, expected] = theta_graph(1, 2, 1);
        auto found = find_theta(g);
        REQUIRE(found.has_value());
        CHECK(found->validates(g));
        CHECK(found->ell() == 1);
        CHECK(found->m() == 2);
        CHECK(found->n() == 1);
    }
    SUBCASE("two triangles sharing a vertex have no theta") {
        Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
        CHECK_FALSE(find_theta(g).has_value());
    }
    SUBCASE("K4 contains a theta") {
        auto found = find_theta(complete_graph(4));
        REQUIRE(found.has_value());
        std::string why;
        CHECK_MESSAGE(found->validates(complete_graph(4), &why), why);
    }
    SUBCASE("long ear through outside vertices") {
        // 4-cycle plus a two-edge ear over vertices 4: theta(1,3,2)-shaped
        Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 3}});
        auto found = find_theta(g);
        REQUIRE(found.has_value());
        std::string why;
        CHECK_MESSAGE(found->validates(g, &why), why);
    }
}

TEST_CASE("theta emptiness matches the block characterization of cacti") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 9);
        Graph g = ts::random_graph(n, 0.28, rng);
        BlockDecomposition bd = block_decomposition(g);
        bool cactus_blocks = true;
        for (const auto &b : bd.blocks)
            if (!b.is_bridge() && !b.is_cycle()) cactus_blocks = false;
        auto theta = find_theta(g);
        CHECK(theta.has_value() == !cactus_blocks);
        if (theta) {
            std::string why;
            CHECK_MESSAGE(theta->validates(g, &why), why);
            // parameter convention: fundamental cycle orders l+m and m+n
            CHECK(theta->ell() >= 1);
            CHECK(theta->m() >= 2);
            CHECK(theta->n() >= 1);
            CHECK(theta->ell() >= theta->n());
        }
    }
}

TEST_CASE("graph io round trips") {
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    CHECK(parse_graph_json(to_graph_json(g)) == g);
    CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK(parse_graph_auto(to_graph_json(g)) == g);
    CHECK(parse_graph_auto(to_edge_list(g)) == g);

    // known graph6 encodings
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(to_graph6(build_graph(2, {{0, 1}})) == "A_");
    CHECK(parse_graph6("Bw") == complete_graph(3));

    CHECK_THROWS_AS(parse_edge_list("1 2\n"), std::invalid_argument);         // missing header
    CHECK_THROWS_AS(parse_edge_list("n=3\n0\n"), std::invalid_argument);      // missing endpoint
    CHECK_THROWS_AS(parse_edge_list("n=3\n0 1 2\n"), std::invalid_argument);  // trailing token
    CHECK_THROWS_AS(parse_edge_list("n=2\n0 3\n"), std::invalid_argument);    // out of range
}
