#ifndef SHADOW_EMBEDDING_HPP
#define SHADOW_EMBEDDING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "shadow/graph.hpp"
#include "shadow/recognition.hpp"

namespace shadow {

using DirectedEdge = std::pair<Vertex, Vertex>;

/// Combinatorial embedding: a cyclic neighbor order per vertex plus a
/// designated outer face. Faces are the orbits of the successor map
/// (u,v) -> (v, succ_v(u)); for a genus-zero embedding of a connected
/// host, vertex - edge + face counts satisfy Euler's identity, which is
/// the planarity certificate used throughout.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(int capacity) : rot_(static_cast<size_t>(capacity)) {}

    int capacity() const { return static_cast<int>(rot_.size()); }
    bool contains(Vertex v) const {
        return v >= 0 && v < capacity() && !rot_[static_cast<size_t>(v)].empty();
    }
    const std::vector<Vertex> &rotation(Vertex v) const { return rot_[static_cast<size_t>(v)]; }
    void set_rotation(Vertex v, std::vector<Vertex> cyclic) {
        rot_[static_cast<size_t>(v)] = std::move(cyclic);
    }

    std::vector<Vertex> vertices() const;
    int vertex_count() const;
    int edge_count() const;
    bool has_edge(Vertex u, Vertex v) const;

    /// Neighbor following `from` in the cyclic order at v.
    Vertex successor(Vertex v, Vertex from) const;

    /// All face orbits; each face is the cyclic vertex walk, rotated so
    /// the lexicographically smallest directed edge comes first, faces
    /// sorted by that representative.
    std::vector<std::vector<Vertex>> faces() const;

    /// Face containing the given directed edge.
    std::vector<Vertex> face_of(DirectedEdge e) const;

    void set_outer(DirectedEdge e) { outer_ = e; }
    DirectedEdge outer_edge() const { return outer_; }
    std::vector<Vertex> outer_face() const { return face_of(outer_); }
    bool outer_contains_directed(DirectedEdge e) const;

    /// n - m + f == 2 for every connected component.
    bool euler_ok() const;

    /// Mirror image: all rotations reversed, outer representative flipped.
    RotationSystem mirrored() const;

    /// Edge set as a Graph on the same index space.
    Graph to_graph() const;

private:
    std::vector<std::vector<Vertex>> rot_;
    DirectedEdge outer_{-1, -1};
};

/// Redesignates the outer face to one bordered by e; identity when e
/// already borders the designated outer face. Throws if e is absent.
RotationSystem expose_edge(const RotationSystem &rs, Edge e);

/// Joins two embeddings sharing exactly the vertices {v, v'} and the edge
/// between them, which must border both designated outer faces. The two
/// formerly-outer faces merge into the new outer face.
RotationSystem glue_shared_edge(const RotationSystem &a, const RotationSystem &b, Vertex v, Vertex vp);

/// Joins two vertex-disjoint embeddings with the bridge triple uv, uv',
/// vu'; uu' must border a's outer face and vv' b's. The edge uv ends up
/// enclosed by uv' and vu'.
RotationSystem glue_bridge(const RotationSystem &a, const RotationSystem &b, Vertex u, Vertex up,
                           Vertex v, Vertex vp);

/// Euler-certified embedding of S(g) for a bipartite cactus g, by
/// recursion on the block-cut structure: even-cycle blocks take the
/// circular-layout rotation, vertices contribute isolated spokes, and the
/// pieces are gathered with the two glue operations.
RotationSystem embed_shadow(const Graph &g, const Verdict &verdict);

} // namespace shadow

#endif
