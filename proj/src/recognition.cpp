#include "shadow/recognition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace shadow {

bool CycleTree::is_acyclic() const {
    // union-find; a repeated union betrays a cycle
    std::vector<int> parent(nodes.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<size_t>(ra)] = rb;
    }
    return true;
}

int CycleTree::node_index_of_cut(Vertex v) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].kind == Node::Kind::CutVertex && nodes[i].vertex == v) return static_cast<int>(i);
    return -1;
}

namespace {

// Orders a cycle block as a vertex walk starting at its smallest vertex,
// second vertex the smaller of the two neighbors.
std::vector<Vertex> walk_cycle_block(const BlockDecomposition::Block &b) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge &e : b.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto &[_, row] : adj) std::sort(row.begin(), row.end());
    Vertex start = b.vertices.front();
    std::vector<Vertex> walk{start};
    Vertex prev = -1, cur = start;
    do {
        const auto &nb = adj[cur];
        Vertex next = (nb[0] != prev) ? nb[0] : nb[1];
        prev = cur;
        cur = next;
        if (cur != start) walk.push_back(cur);
    } while (cur != start);
    return walk;
}

} // namespace

CycleTree cycle_tree(const Graph &g) {
    if (auto theta = find_theta(g))
        throw std::invalid_argument("cycle_tree requires a cactus (theta subgraph found)");

    BlockDecomposition bd = block_decomposition(g);
    CycleTree t;

    for (Vertex v : bd.cut_vertices) {
        CycleTree::Node node;
        node.kind = CycleTree::Node::Kind::CutVertex;
        node.vertex = v;
        t.nodes.push_back(node);
    }
    std::map<int, int> cycle_node_of_block;
    for (size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        if (!bd.blocks[bi].is_cycle()) continue;
        CycleTree::Node node;
        node.kind = CycleTree::Node::Kind::Cycle;
        node.cycle_index = static_cast<int>(t.cycles.size());
        cycle_node_of_block[static_cast<int>(bi)] = static_cast<int>(t.nodes.size());
        t.nodes.push_back(node);
        t.cycles.push_back(walk_cycle_block(bd.blocks[bi]));
    }

    for (size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        const auto &block = bd.blocks[bi];
        if (block.is_cycle()) {
            int cnode = cycle_node_of_block.at(static_cast<int>(bi));
            for (Vertex v : block.vertices)
                if (bd.is_cut_vertex(v)) t.edges.emplace_back(t.node_index_of_cut(v), cnode);
        } else {
            // bridge edge: joins two cut vertices when both ends are cut
            assert(block.is_bridge());
            const Edge &e = block.edges.front();
            if (bd.is_cut_vertex(e.u) && bd.is_cut_vertex(e.v))
                t.edges.emplace_back(t.node_index_of_cut(e.u), t.node_index_of_cut(e.v));
        }
    }
    std::sort(t.edges.begin(), t.edges.end());
    assert(t.is_acyclic());
    return t;
}

Verdict classify(const Graph &g) {
    if (auto odd = find_odd_cycle(g)) return NotBipartiteCert{std::move(*odd)};
    if (auto theta = find_theta(g)) return NotCactusCert{std::move(*theta)};
    return BipartiteCactusCert{cycle_tree(g)};
}

std::string SmallShadowVerdict::describe() const {
    switch (reason) {
    case Reason::None:
        return "all blocks admissible";
    case Reason::BlockNotAllowed:
        return "block " + std::to_string(block_index) + " is not K2, K3, K4^-, K4, or an even cycle";
    case Reason::CutVertexDegree:
        return "a cut vertex has degree 3 or more in block " + std::to_string(block_index);
    case Reason::TriangleAllCut:
        return "triangle block " + std::to_string(block_index) + " has all three vertices cut";
    }
    return {};
}

namespace {

bool block_admissible(const BlockDecomposition::Block &b) {
    size_t nv = b.vertices.size(), ne = b.edges.size();
    if (nv == 2 && ne == 1) return true;                   // K2
    if (nv == 3 && ne == 3) return true;                   // K3
    if (nv == 4 && (ne == 5 || ne == 6)) return true;      // K4^- or K4
    return b.is_cycle() && nv % 2 == 0;                    // even cycle
}

int degree_in_block(const BlockDecomposition::Block &b, Vertex v) {
    int d = 0;
    for (const Edge &e : b.edges)
        if (e.u == v || e.v == v) ++d;
    return d;
}

} // namespace

SmallShadowVerdict small_shadow_planar(const Graph &g) {
    if (g.order() <= 1) throw std::invalid_argument("small_shadow_planar needs a nontrivial graph");

    BlockDecomposition bd = block_decomposition(g);
    SmallShadowVerdict out;
    for (size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        const auto &block = bd.blocks[bi];
        if (!block_admissible(block)) {
            out.reason = SmallShadowVerdict::Reason::BlockNotAllowed;
            out.block_index = static_cast<int>(bi);
            return out;
        }
        for (Vertex v : block.vertices) {
            if (bd.is_cut_vertex(v) && degree_in_block(block, v) > 2) {
                out.reason = SmallShadowVerdict::Reason::CutVertexDegree;
                out.block_index = static_cast<int>(bi);
                return out;
            }
        }
        if (block.vertices.size() == 3 && block.edges.size() == 3) {
            bool all_cut = std::all_of(block.vertices.begin(), block.vertices.end(),
                                       [&](Vertex v) { return bd.is_cut_vertex(v); });
            if (all_cut) {
                out.reason = SmallShadowVerdict::Reason::TriangleAllCut;
                out.block_index = static_cast<int>(bi);
                return out;
            }
        }
    }
    out.planar = true;
    return out;
}

} // namespace shadow
