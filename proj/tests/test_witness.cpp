#include <doctest.h>

#include <algorithm>

#include "shadow/constructions.hpp"
#include "shadow/decomposition.hpp"
#include "shadow/families.hpp"
#include "shadow/witness.hpp"

using namespace shadow;

namespace {

CyclePath full_cycle(const Graph &c) {
    CyclePath p;
    p.closed = true;
    Vertex prev = -1, cur = 0;
    do {
        p.vertices.push_back(cur);
        Vertex next = c.neighbors(cur)[0] == prev ? c.neighbors(cur)[1] : c.neighbors(cur)[0];
        prev = cur;
        cur = next;
    } while (cur != 0);
    return p;
}

} // namespace

TEST_CASE("odd cycle witnesses validate and follow the alternating pattern") {
    for (int len : {3, 5, 7, 9, 11}) {
        CAPTURE(len);
        Graph c = cycle_graph(len);
        ShadowGraph sg = great_shadow(c);
        K33Witness w = k33_from_odd_cycle(sg, full_cycle(c));
        WitnessCheck check = validate_k33(sg.graph(), w);
        CHECK_MESSAGE(check.ok, check.issue);

        // branch triples: originals on one side, their shadows opposite
        for (int i = 0; i < 3; ++i) {
            CHECK(w.delta1[static_cast<size_t>(i)] < len);
            CHECK(w.delta2[static_cast<size_t>(i)] == w.delta1[static_cast<size_t>(i)] + len);
        }

        // the two long paths alternate between originals and shadows
        int k2 = len - 1;
        const auto &p1 = w.path(2, 0);
        const auto &p2 = w.path(0, 2);
        CHECK(static_cast<int>(p1.size()) == k2);
        CHECK(static_cast<int>(p2.size()) == k2);
        for (size_t i = 0; i + 1 < p1.size(); ++i)
            CHECK((p1[i] < len) != (p1[i + 1] < len));
        std::vector<Vertex> joint(p1.begin() + 1, p1.end() - 1);
        for (size_t i = 1; i + 1 < p2.size(); ++i)
            CHECK(std::find(joint.begin(), joint.end(), p2[i]) == joint.end());
    }
}

TEST_CASE("triangle witness collapses to the nine direct edges") {
    Graph c = cycle_graph(3);
    ShadowGraph sg = great_shadow(c);
    K33Witness w = k33_from_odd_cycle(sg, full_cycle(c));
    for (const auto &p : w.paths) CHECK(p.size() == 2);
    // partition: originals versus shadows
    for (Vertex x : w.delta1) CHECK(x < 3);
    for (Vertex x : w.delta2) CHECK(x >= 3);
}

TEST_CASE("odd cycle witness rejects even or short input") {
    Graph c4 = cycle_graph(4);
    ShadowGraph sg = great_shadow(c4);
    CHECK_THROWS_AS(k33_from_odd_cycle(sg, full_cycle(c4)), std::invalid_argument);
}

TEST_CASE("theta witnesses, even case") {
    for (int l : {2, 4, 6})
        for (int m : {2, 4, 6})
            for (int n : {2, 4, 6}) {
                CAPTURE(l);
                CAPTURE(m);
                CAPTURE(n);
                auto [g, theta] = theta_graph(l, m, n);
                ShadowGraph sg = great_shadow(g);
                K33Witness w = k33_from_theta(sg, theta);
                WitnessCheck check = validate_k33(sg.graph(), w);
                CHECK_MESSAGE(check.ok, check.issue);
            }
}

TEST_CASE("theta witnesses, odd case including the role swap") {
    for (int l : {1, 3, 5})
        for (int m : {3, 5, 7})
            for (int n : {1, 3, 5}) {
                if (l == 1 && n == 1) continue; // fallback case, tested separately
                CAPTURE(l);
                CAPTURE(m);
                CAPTURE(n);
                auto [g, theta] = theta_graph(l, m, n);
                ShadowGraph sg = great_shadow(g);
                K33Witness w = k33_from_theta(sg, theta);
                WitnessCheck check = validate_k33(sg.graph(), w);
                CHECK_MESSAGE(check.ok, check.issue);
            }
}

TEST_CASE("theta(1,m,1) falls back to search") {
    for (int m : {3, 5}) {
        CAPTURE(m);
        auto [g, theta] = theta_graph(1, m, 1);
        ShadowGraph sg = great_shadow(g);
        K33Witness w = k33_from_theta(sg, theta);
        WitnessCheck check = validate_k33(sg.graph(), w);
        CHECK_MESSAGE(check.ok, check.issue);
    }
}

TEST_CASE("theta(2,2,2) instantiates with an empty middle interior") {
    auto [g, theta] = theta_graph(2, 2, 2);
    ShadowGraph sg = great_shadow(g);
    K33Witness w = k33_from_theta(sg, theta);
    CHECK(validate_k33(sg.graph(), w).ok);
    // P_{u'v} degenerates to the single edge u'v
    bool found_direct = false;
    for (const auto &p : w.paths)
        if (p.size() == 2 && ((p[0] == theta.u + 6 && p[1] == theta.v) ||
                              (p[0] == theta.v && p[1] == theta.u + 6)))
            found_direct = true;
    CHECK(found_direct);
}

TEST_CASE("mixed parity thetas are rejected and contain odd cycles") {
    auto [g, theta] = theta_graph(1, 2, 2);
    ShadowGraph sg = great_shadow(g);
    CHECK_THROWS_AS(k33_from_theta(sg, theta), std::invalid_argument);
    CHECK(find_odd_cycle(g).has_value());
}

TEST_CASE("validate_k33 flags violations") {
    Graph c = cycle_graph(3);
    ShadowGraph sg = great_shadow(c);
    K33Witness good = k33_from_odd_cycle(sg, full_cycle(c));

    SUBCASE("non-edge consecutive pair") {
        K33Witness bad = good;
        bad.path(0, 0) = {bad.delta1[0], 99 % 6, bad.delta2[0]};
        CHECK_FALSE(validate_k33(sg.graph(), bad).ok);
    }
    SUBCASE("shared internal vertex") {
        auto [g, theta] = theta_graph(4, 4, 4);
        ShadowGraph sgt = great_shadow(g);
        K33Witness w = k33_from_theta(sgt, theta);
        // force one path to reuse another's interior vertex
        K33Witness bad = w;
        Vertex stolen = -1;
        for (const auto &p : w.paths)
            if (p.size() > 2) stolen = p[1];
        REQUIRE(stolen != -1);
        bool corrupted = false;
        for (auto &p : bad.paths) {
            if (p.size() > 2 && p[1] != stolen) {
                p.insert(p.begin() + 1, stolen);
                corrupted = true;
                break;
            }
        }
        if (corrupted) CHECK_FALSE(validate_k33(sgt.graph(), bad).ok);
    }
    SUBCASE("overlapping deltas") {
        K33Witness bad = good;
        bad.delta2[0] = bad.delta1[0];
        CHECK_FALSE(validate_k33(sg.graph(), bad).ok);
    }
}

TEST_CASE("k33_search finds witnesses and certifies absence") {
    SUBCASE("K3,3 itself") {
        K33SearchResult r = k33_search(complete_bipartite(3, 3));
        REQUIRE(r.status == K33SearchResult::Status::Found);
        CHECK(validate_k33(complete_bipartite(3, 3), *r.witness).ok);
        for (const auto &p : r.witness->paths) CHECK(p.size() == 2);
    }
    SUBCASE("S(K3) contains one") {
        ShadowGraph sg = great_shadow(complete_graph(3));
        K33SearchResult r = k33_search(sg.graph());
        REQUIRE(r.status == K33SearchResult::Status::Found);
        CHECK(validate_k33(sg.graph(), *r.witness).ok);
    }
    SUBCASE("S(C4) has none") {
        ShadowGraph sg = great_shadow(cycle_graph(4));
        CHECK(k33_search(sg.graph()).status == K33SearchResult::Status::NotFound);
    }
    SUBCASE("a tiny budget reports exhaustion distinctly") {
        ShadowGraph sg = great_shadow(complete_graph(5));
        K33SearchResult r = k33_search(sg.graph(), 50);
        CHECK(r.status == K33SearchResult::Status::BoundExceeded);
    }
}
