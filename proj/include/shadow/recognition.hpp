#ifndef SHADOW_RECOGNITION_HPP
#define SHADOW_RECOGNITION_HPP

#include <string>
#include <variant>
#include <vector>

#include "shadow/decomposition.hpp"
#include "shadow/graph.hpp"
#include "shadow/theta.hpp"

namespace shadow {

/// Tree on cut vertices and cycle-representative nodes: a cut vertex a is
/// joined to cycle node C when a lies on C, and to another cut vertex b
/// when ab is an edge outside every cycle. For a disconnected cactus this
/// is a forest, one tree per component.
struct CycleTree {
    struct Node {
        enum class Kind { CutVertex, Cycle };
        Kind kind;
        Vertex vertex = -1;    // for CutVertex nodes
        int cycle_index = -1;  // for Cycle nodes, into cycles
    };

    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;     // indices into nodes
    std::vector<std::vector<Vertex>> cycles;    // vertex cycles of the host

    bool is_acyclic() const;
    int node_index_of_cut(Vertex v) const;
};

CycleTree cycle_tree(const Graph &g);

struct BipartiteCactusCert {
    CycleTree tree;
};
struct NotBipartiteCert {
    CyclePath odd_cycle;
};
struct NotCactusCert {
    ThetaSubdivision theta;
};

using Verdict = std::variant<BipartiteCactusCert, NotBipartiteCert, NotCactusCert>;

inline bool is_bipartite_cactus(const Verdict &v) {
    return std::holds_alternative<BipartiteCactusCert>(v);
}

/// Decides the planar-great-shadow predicate. Bipartiteness is checked
/// before cactusness, so a theta certificate never has mixed parity.
Verdict classify(const Graph &g);

/// Outcome of the small-shadow planarity conditions: every block one of
/// K2, K3, K4^-, K4, or an even cycle; cut vertices of degree at most 2
/// in each block; no triangle block with all three vertices cut.
struct SmallShadowVerdict {
    enum class Reason { None, BlockNotAllowed, CutVertexDegree, TriangleAllCut };
    bool planar = false;
    Reason reason = Reason::None;
    int block_index = -1; // offending block when not planar
    std::string describe() const;
};

/// Theorem-based planarity test for s(G); rejects the single-vertex graph.
/// Disconnected inputs are evaluated per component and conjoined.
SmallShadowVerdict small_shadow_planar(const Graph &g);

} // namespace shadow

#endif
