#include "shadow/embedding.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "shadow/constructions.hpp"
#include "shadow/decomposition.hpp"
#include "shadow/layout.hpp"

namespace shadow {

std::vector<Vertex> RotationSystem::vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < capacity(); ++v)
        if (!rot_[static_cast<size_t>(v)].empty()) out.push_back(v);
    return out;
}

int RotationSystem::vertex_count() const {
    int c = 0;
    for (const auto &row : rot_)
        if (!row.empty()) ++c;
    return c;
}

int RotationSystem::edge_count() const {
    int darts = 0;
    for (const auto &row : rot_) darts += static_cast<int>(row.size());
    return darts / 2;
}

bool RotationSystem::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= capacity()) return false;
    const auto &row = rot_[static_cast<size_t>(u)];
    return std::find(row.begin(), row.end(), v) != row.end();
}

Vertex RotationSystem::successor(Vertex v, Vertex from) const {
    const auto &row = rot_[static_cast<size_t>(v)];
    auto it = std::find(row.begin(), row.end(), from);
    if (it == row.end()) throw std::logic_error("successor: edge not in rotation");
    ++it;
    return it == row.end() ? row.front() : *it;
}

namespace {

// Canonical face representation: rotate the directed walk so the smallest
// (source, target) pair leads.
std::vector<Vertex> canonical_face(std::vector<Vertex> walk) {
    size_t best = 0;
    auto at = [&](size_t i) {
        Vertex s = walk[i % walk.size()];
        Vertex t = walk[(i + 1) % walk.size()];
        return std::make_pair(s, t);
    };
    for (size_t i = 1; i < walk.size(); ++i)
        if (at(i) < at(best)) best = i;
    std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(best), walk.end());
    return walk;
}

} // namespace

std::vector<std::vector<Vertex>> RotationSystem::faces() const {
    std::vector<std::vector<Vertex>> out;
    std::set<DirectedEdge> visited;
    for (Vertex v = 0; v < capacity(); ++v) {
        for (Vertex w : rot_[static_cast<size_t>(v)]) {
            if (visited.count({v, w})) continue;
            std::vector<Vertex> walk;
            Vertex a = v, b = w;
            do {
                visited.insert({a, b});
                walk.push_back(a);
                Vertex c = successor(b, a);
                a = b;
                b = c;
            } while (!(a == v && b == w));
            out.push_back(canonical_face(std::move(walk)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> RotationSystem::face_of(DirectedEdge e) const {
    if (!has_edge(e.first, e.second)) throw std::invalid_argument("face_of: edge not present");
    std::vector<Vertex> walk;
    Vertex a = e.first, b = e.second;
    do {
        walk.push_back(a);
        Vertex c = successor(b, a);
        a = b;
        b = c;
    } while (!(a == e.first && b == e.second));
    return canonical_face(std::move(walk));
}

bool RotationSystem::outer_contains_directed(DirectedEdge e) const {
    std::vector<Vertex> face = outer_face();
    for (size_t i = 0; i < face.size(); ++i) {
        Vertex s = face[i], t = face[(i + 1) % face.size()];
        if (s == e.first && t == e.second) return true;
    }
    return false;
}

bool RotationSystem::euler_ok() const {
    // split faces and counts per connected component
    std::vector<Vertex> verts = vertices();
    if (verts.empty()) return true;
    std::map<Vertex, int> comp;
    int ncomp = 0;
    for (Vertex s : verts) {
        if (comp.count(s)) continue;
        std::vector<Vertex> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : rot_[static_cast<size_t>(v)])
                if (!comp.count(w)) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<int> nv(static_cast<size_t>(ncomp), 0), ne(static_cast<size_t>(ncomp), 0),
        nf(static_cast<size_t>(ncomp), 0);
    for (Vertex v : verts) {
        ++nv[static_cast<size_t>(comp[v])];
        ne[static_cast<size_t>(comp[v])] += static_cast<int>(rot_[static_cast<size_t>(v)].size());
    }
    for (auto &faceWalk : faces()) ++nf[static_cast<size_t>(comp[faceWalk.front()])];
    for (int c = 0; c < ncomp; ++c)
        if (nv[static_cast<size_t>(c)] - ne[static_cast<size_t>(c)] / 2 + nf[static_cast<size_t>(c)] != 2)
            return false;
    return true;
}

RotationSystem RotationSystem::mirrored() const {
    RotationSystem out(capacity());
    for (Vertex v = 0; v < capacity(); ++v) {
        std::vector<Vertex> row = rot_[static_cast<size_t>(v)];
        std::reverse(row.begin(), row.end());
        out.set_rotation(v, std::move(row));
    }
    out.set_outer({outer_.second, outer_.first});
    return out;
}

Graph RotationSystem::to_graph() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < capacity(); ++v)
        for (Vertex w : rot_[static_cast<size_t>(v)])
            if (v < w) edges.emplace_back(v, w);
    return Graph(capacity(), edges);
}

RotationSystem expose_edge(const RotationSystem &rs, Edge e) {
    if (!rs.has_edge(e.u, e.v)) throw std::invalid_argument("expose_edge: edge not in graph");
    if (rs.outer_contains_directed({e.u, e.v}) || rs.outer_contains_directed({e.v, e.u}))
        return rs; // already exposed
    RotationSystem out = rs;
    out.set_outer({e.u, e.v});
    return out;
}

namespace {

// Rotation list rotated to start at `lead`, which is then dropped.
std::vector<Vertex> remainder_after(const std::vector<Vertex> &row, Vertex lead) {
    auto it = std::find(row.begin(), row.end(), lead);
    assert(it != row.end());
    std::vector<Vertex> out;
    out.reserve(row.size() - 1);
    for (auto i = it + 1; i != row.end(); ++i) out.push_back(*i);
    for (auto i = row.begin(); i != it; ++i) out.push_back(*i);
    return out;
}

bool face_has_directed(const std::vector<Vertex> &face, DirectedEdge e) {
    for (size_t i = 0; i < face.size(); ++i)
        if (face[i] == e.first && face[(i + 1) % face.size()] == e.second) return true;
    return false;
}

// First directed edge of the face that is not a traversal of the edge
// {x, y}; (-1,-1) when every traversal is excluded (two-sided bridge face).
DirectedEdge face_representative_avoiding(const std::vector<Vertex> &face, Vertex x, Vertex y) {
    for (size_t i = 0; i < face.size(); ++i) {
        Vertex s = face[i], t = face[(i + 1) % face.size()];
        if ((s == x && t == y) || (s == y && t == x)) continue;
        return {s, t};
    }
    return {-1, -1};
}

} // namespace

RotationSystem glue_shared_edge(const RotationSystem &a, const RotationSystem &b, Vertex v, Vertex vp) {
    if (!a.has_edge(v, vp) || !b.has_edge(v, vp))
        throw std::invalid_argument("glue_shared_edge: both pieces must contain the shared edge");
    for (Vertex x : a.vertices())
        if (x != v && x != vp && b.contains(x))
            throw std::invalid_argument("glue_shared_edge: pieces overlap beyond the shared edge");
    bool a_exposed = a.outer_contains_directed({v, vp}) || a.outer_contains_directed({vp, v});
    bool b_exposed = b.outer_contains_directed({v, vp}) || b.outer_contains_directed({vp, v});
    if (!a_exposed || !b_exposed)
        throw std::invalid_argument("glue_shared_edge: shared edge not exposed");

    // Orient so a's outer face holds (v -> vp) and b's holds (vp -> v);
    // the splice then merges exactly those two faces.
    RotationSystem A = a.outer_contains_directed({v, vp}) ? a : a.mirrored();
    RotationSystem B = b.outer_contains_directed({vp, v}) ? b : b.mirrored();

    int cap = std::max(A.capacity(), B.capacity());
    RotationSystem out(cap);
    for (Vertex x = 0; x < cap; ++x) {
        if (x == v || x == vp) continue;
        if (A.contains(x)) out.set_rotation(x, A.rotation(x));
        else if (B.contains(x)) out.set_rotation(x, B.rotation(x));
    }
    std::vector<Vertex> rot_v{vp};
    for (Vertex x : remainder_after(A.rotation(v), vp)) rot_v.push_back(x);
    for (Vertex x : remainder_after(B.rotation(v), vp)) rot_v.push_back(x);
    out.set_rotation(v, std::move(rot_v));

    std::vector<Vertex> rot_vp{v};
    for (Vertex x : remainder_after(B.rotation(vp), v)) rot_vp.push_back(x);
    for (Vertex x : remainder_after(A.rotation(vp), v)) rot_vp.push_back(x);
    out.set_rotation(vp, std::move(rot_vp));

    DirectedEdge rep = face_representative_avoiding(A.outer_face(), v, vp);
    if (rep.first == -1) rep = face_representative_avoiding(B.outer_face(), v, vp);
    if (rep.first == -1) rep = {v, vp}; // both pieces are the bare edge
    out.set_outer(rep);

    if (!out.euler_ok()) throw std::logic_error("glue_shared_edge: Euler check failed");
    return out;
}

RotationSystem glue_bridge(const RotationSystem &a, const RotationSystem &b, Vertex u, Vertex up,
                           Vertex v, Vertex vp) {
    if (!a.has_edge(u, up)) throw std::invalid_argument("glue_bridge: a must contain the edge uu'");
    if (!b.has_edge(v, vp)) throw std::invalid_argument("glue_bridge: b must contain the edge vv'");
    for (Vertex x : a.vertices())
        if (b.contains(x)) throw std::invalid_argument("glue_bridge: pieces must be vertex-disjoint");
    bool a_exposed = a.outer_contains_directed({u, up}) || a.outer_contains_directed({up, u});
    bool b_exposed = b.outer_contains_directed({v, vp}) || b.outer_contains_directed({vp, v});
    if (!a_exposed || !b_exposed) throw std::invalid_argument("glue_bridge: attachment edges not exposed");

    RotationSystem A = a.outer_contains_directed({up, u}) ? a : a.mirrored();
    RotationSystem B = b.outer_contains_directed({vp, v}) ? b : b.mirrored();

    int cap = std::max(A.capacity(), B.capacity());
    RotationSystem out(cap);
    for (Vertex x = 0; x < cap; ++x) {
        if (A.contains(x)) out.set_rotation(x, A.rotation(x));
        else if (B.contains(x)) out.set_rotation(x, B.rotation(x));
    }

    auto insert_after = [](std::vector<Vertex> row, Vertex anchor, std::vector<Vertex> items) {
        auto it = std::find(row.begin(), row.end(), anchor);
        assert(it != row.end());
        row.insert(it + 1, items.begin(), items.end());
        return row;
    };
    auto insert_before = [](std::vector<Vertex> row, Vertex anchor, Vertex item) {
        auto it = std::find(row.begin(), row.end(), anchor);
        assert(it != row.end());
        row.insert(it, item);
        return row;
    };
    out.set_rotation(u, insert_after(out.rotation(u), up, {v, vp}));
    out.set_rotation(up, insert_before(out.rotation(up), u, v));
    out.set_rotation(v, insert_after(out.rotation(v), vp, {u, up}));
    out.set_rotation(vp, insert_before(out.rotation(vp), v, u));

    DirectedEdge rep = face_representative_avoiding(A.outer_face(), u, up);
    if (rep.first == -1) rep = {u, up};
    out.set_outer(rep);

    if (!out.euler_ok()) throw std::logic_error("glue_bridge: Euler check failed");
    return out;
}

namespace {

struct EmbedDriver {
    const Graph &g;
    const BlockDecomposition blocks;
    const int n;

    explicit EmbedDriver(const Graph &graph)
        : g(graph), blocks(block_decomposition(graph)), n(graph.order()) {}

    RotationSystem spoke(Vertex v) const {
        RotationSystem rs(2 * n);
        rs.set_rotation(v, {v + n});
        rs.set_rotation(v + n, {v});
        rs.set_outer({v, v + n});
        return rs;
    }

    // S(C) rotation for an even cycle block, numbered from the entry
    // vertex so its shadow sits on the exterior ring.
    RotationSystem cycle_piece(const BlockDecomposition::Block &block, Vertex entry) const {
        std::map<Vertex, std::vector<Vertex>> adj;
        for (const Edge &e : block.edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<Vertex> walk{entry};
        Vertex prev = entry;
        Vertex cur = std::min(adj[entry][0], adj[entry][1]);
        while (cur != entry) {
            walk.push_back(cur);
            Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        return rotation_from_layout(circular_layout_for(walk, n));
    }

    RotationSystem embed_vertex(Vertex v, int from_block) const {
        RotationSystem rs = spoke(v);
        for (int bi : blocks.blocks_of_vertex[static_cast<size_t>(v)]) {
            if (bi == from_block) continue;
            const auto &block = blocks.blocks[static_cast<size_t>(bi)];
            if (block.is_cycle()) {
                RotationSystem piece = embed_cycle_block(block, bi, v);
                rs = glue_shared_edge(expose_edge(rs, Edge(v, v + n)),
                                      expose_edge(piece, Edge(v, v + n)), v, v + n);
            } else {
                const Edge &e = block.edges.front();
                Vertex q = e.u == v ? e.v : e.u;
                RotationSystem piece = embed_vertex(q, bi);
                rs = glue_bridge(expose_edge(rs, Edge(v, v + n)),
                                 expose_edge(piece, Edge(q, q + n)), v, v + n, q, q + n);
            }
        }
        return rs;
    }

    RotationSystem embed_cycle_block(const BlockDecomposition::Block &block, int bi, Vertex entry) const {
        RotationSystem rs = cycle_piece(block, entry);
        for (Vertex w : block.vertices) {
            if (w == entry) continue;
            if (blocks.blocks_of_vertex[static_cast<size_t>(w)].size() < 2) continue;
            RotationSystem sub = embed_vertex(w, bi);
            rs = glue_shared_edge(expose_edge(rs, Edge(w, w + n)),
                                  expose_edge(sub, Edge(w, w + n)), w, w + n);
        }
        return rs;
    }
};

} // namespace

RotationSystem embed_shadow(const Graph &g, const Verdict &verdict) {
    if (!is_bipartite_cactus(verdict))
        throw std::invalid_argument("embed_shadow needs a bipartite cactus verdict");

    const int n = g.order();
    EmbedDriver driver(g);
    RotationSystem result(2 * n);
    bool first = true;
    for (const auto &comp : connected_components(g)) {
        RotationSystem piece = driver.embed_vertex(comp.front(), -1);
        for (Vertex x : piece.vertices()) result.set_rotation(x, piece.rotation(x));
        if (first) {
            result.set_outer(piece.outer_edge());
            first = false;
        }
    }
    if (!result.euler_ok()) throw std::logic_error("embed_shadow: Euler check failed");
    return result;
}

} // namespace shadow
