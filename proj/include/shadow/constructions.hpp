#ifndef SHADOW_CONSTRUCTIONS_HPP
#define SHADOW_CONSTRUCTIONS_HPP

#include "shadow/graph.hpp"

namespace shadow {

enum class ShadowKind { GreatShadow, SmallShadow, Mycielskian };

/// An expansion of an n-vertex graph: original vertices keep indices
/// 0..n-1, the shadow of v is v+n, and the Mycielskian's central vertex
/// is 2n. Edge counts: great shadow 3m+n, small shadow 3m, Mycielskian
/// 3m+n on 2n+1 vertices.
class ShadowGraph {
public:
    ShadowGraph(Graph host, int original_order, ShadowKind kind)
        : host_(std::move(host)), original_n_(original_order), kind_(kind) {}

    const Graph &graph() const { return host_; }
    int original_order() const { return original_n_; }
    ShadowKind kind() const { return kind_; }

    Vertex shadow_of(Vertex v) const { return v + original_n_; }
    bool is_shadow(Vertex v) const { return v >= original_n_ && v < 2 * original_n_; }
    Vertex original_of(Vertex v) const { return is_shadow(v) ? v - original_n_ : v; }

    /// Central vertex; only meaningful for the Mycielskian.
    Vertex central() const { return 2 * original_n_; }

private:
    Graph host_;
    int original_n_;
    ShadowKind kind_;
};

/// S(G): for each v add v' adjacent to v and to every neighbor of v.
ShadowGraph great_shadow(const Graph &g);

/// s(G): as S(G) but without the v-v' edges.
ShadowGraph small_shadow(const Graph &g);

/// mu(G): s(G) plus a central vertex adjacent to every shadow vertex.
ShadowGraph mycielskian(const Graph &g);

} // namespace shadow

#endif
