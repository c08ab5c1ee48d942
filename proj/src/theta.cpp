#include "shadow/theta.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

#include "shadow/decomposition.hpp"

namespace shadow {

std::vector<Vertex> ThetaSubdivision::vertices() const {
    std::set<Vertex> s(ell_path.begin(), ell_path.end());
    s.insert(mid_path.begin(), mid_path.end());
    s.insert(en_path.begin(), en_path.end());
    return {s.begin(), s.end()};
}

namespace {

bool fail(std::string *why, const std::string &msg) {
    if (why) *why = msg;
    return false;
}

bool check_path(const Graph &g, const std::vector<Vertex> &p, Vertex u, Vertex v, std::string *why) {
    if (p.size() < 2) return fail(why, "path too short");
    if (p.front() != u || p.back() != v) return fail(why, "path endpoints wrong");
    std::set<Vertex> seen;
    for (Vertex x : p)
        if (!seen.insert(x).second) return fail(why, "repeated vertex on path");
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return fail(why, "non-edge on path");
    return true;
}

} // namespace

bool ThetaSubdivision::validates(const Graph &g, std::string *why) const {
    if (u == v) return fail(why, "endvertices coincide");
    if (ell() < 1 || n() < 1 || m() < 2) return fail(why, "parameters out of range");
    if (!check_path(g, ell_path, u, v, why)) return false;
    if (!check_path(g, mid_path, u, v, why)) return false;
    if (!check_path(g, en_path, u, v, why)) return false;
    // pairwise internal disjointness
    auto interior = [](const std::vector<Vertex> &p) {
        return std::set<Vertex>(p.begin() + 1, p.end() - 1);
    };
    std::set<Vertex> ia = interior(ell_path), ib = interior(mid_path), ic = interior(en_path);
    for (Vertex x : ia)
        if (ib.count(x) || ic.count(x)) return fail(why, "paths share interior vertex");
    for (Vertex x : ib)
        if (ic.count(x)) return fail(why, "paths share interior vertex");
    if (ia.count(u) || ia.count(v) || ib.count(u) || ib.count(v) || ic.count(u) || ic.count(v))
        return fail(why, "endvertex in path interior");
    return true;
}

namespace {

// First cycle in the block by DFS from the smallest vertex, neighbors in
// ascending order; the first back edge closes it.
std::vector<Vertex> find_cycle_in_block(const Graph &g, const std::vector<Vertex> &block_vertices,
                                        const std::set<Edge> &block_edges) {
    std::map<Vertex, Vertex> parent;
    std::map<Vertex, int> depth;
    Vertex root = block_vertices.front();
    parent[root] = -1;
    depth[root] = 0;

    struct Frame {
        Vertex v;
        size_t idx;
    };
    std::vector<Frame> stack{{root, 0}};
    while (!stack.empty()) {
        Frame &f = stack.back();
        const auto &nbrs = g.neighbors(f.v);
        if (f.idx >= nbrs.size()) {
            stack.pop_back();
            continue;
        }
        Vertex w = nbrs[f.idx++];
        if (!block_edges.count(Edge(f.v, w))) continue;
        if (!parent.count(w)) {
            parent[w] = f.v;
            depth[w] = depth[f.v] + 1;
            stack.push_back({w, 0});
        } else if (w != parent[f.v] && depth[w] < depth[f.v]) {
            // back edge f.v -> w closes the cycle w .. f.v
            std::vector<Vertex> cyc;
            Vertex x = f.v;
            while (x != w) {
                cyc.push_back(x);
                x = parent[x];
            }
            cyc.push_back(w);
            std::reverse(cyc.begin(), cyc.end());
            return cyc;
        }
    }
    return {};
}

} // namespace

std::optional<ThetaSubdivision> find_theta(const Graph &g) {
    BlockDecomposition bd = block_decomposition(g);
    for (const auto &block : bd.blocks) {
        if (block.edges.size() <= block.vertices.size()) continue;

        std::set<Edge> bedges(block.edges.begin(), block.edges.end());
        std::vector<Vertex> cycle = find_cycle_in_block(g, block.vertices, bedges);
        assert(cycle.size() >= 3);
        std::set<Vertex> on_cycle(cycle.begin(), cycle.end());
        std::set<Edge> cycle_edges;
        for (size_t i = 0; i < cycle.size(); ++i)
            cycle_edges.insert(Edge(cycle[i], cycle[(i + 1) % cycle.size()]));

        // Ear: prefer a chord; otherwise route through a component of
        // block minus cycle between two attachment vertices.
        std::vector<Vertex> ear;
        for (const Edge &e : block.edges) {
            if (cycle_edges.count(e)) continue;
            if (on_cycle.count(e.u) && on_cycle.count(e.v)) {
                ear = {e.u, e.v};
                break;
            }
        }
        if (ear.empty()) {
            Vertex w0 = -1;
            for (Vertex x : block.vertices)
                if (!on_cycle.count(x)) {
                    w0 = x;
                    break;
                }
            assert(w0 != -1);
            // component of w0 in block - cycle
            std::set<Vertex> comp;
            std::queue<Vertex> q;
            comp.insert(w0);
            q.push(w0);
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop();
                for (Vertex y : g.neighbors(x)) {
                    if (!bedges.count(Edge(x, y)) || on_cycle.count(y) || comp.count(y)) continue;
                    comp.insert(y);
                    q.push(y);
                }
            }
            // attachments = cycle vertices adjacent to the component
            std::set<Vertex> attach;
            for (Vertex x : comp)
                for (Vertex y : g.neighbors(x))
                    if (bedges.count(Edge(x, y)) && on_cycle.count(y)) attach.insert(y);
            assert(attach.size() >= 2);
            Vertex a = *attach.begin();
            // BFS from a through comp vertices only, stop at another attachment
            std::map<Vertex, Vertex> par;
            par[a] = -1;
            std::queue<Vertex> bfs;
            bfs.push(a);
            Vertex b = -1;
            while (!bfs.empty() && b == -1) {
                Vertex x = bfs.front();
                bfs.pop();
                for (Vertex y : g.neighbors(x)) {
                    if (!bedges.count(Edge(x, y)) || par.count(y)) continue;
                    if (on_cycle.count(y)) {
                        if (y != a && x != a) {
                            par[y] = x;
                            b = y;
                            break;
                        }
                        continue;
                    }
                    if (comp.count(y)) {
                        par[y] = x;
                        bfs.push(y);
                    }
                }
            }
            assert(b != -1);
            Vertex x = b;
            while (x != -1) {
                ear.push_back(x);
                x = par[x];
            }
            std::reverse(ear.begin(), ear.end());
        }

        // Split the cycle at the ear endpoints into two arcs.
        Vertex eu = ear.front(), ev = ear.back();
        size_t pu = static_cast<size_t>(std::find(cycle.begin(), cycle.end(), eu) - cycle.begin());
        size_t pv = static_cast<size_t>(std::find(cycle.begin(), cycle.end(), ev) - cycle.begin());
        std::vector<Vertex> arc1, arc2;
        for (size_t i = pu;; i = (i + 1) % cycle.size()) {
            arc1.push_back(cycle[i]);
            if (i == pv) break;
        }
        for (size_t i = pu;; i = (i + cycle.size() - 1) % cycle.size()) {
            arc2.push_back(cycle[i]);
            if (i == pv) break;
        }

        // Orient all three paths from the smaller endpoint.
        Vertex tu = std::min(eu, ev);
        auto orient = [&](std::vector<Vertex> p) {
            if (p.front() != tu) std::reverse(p.begin(), p.end());
            return p;
        };
        std::vector<std::vector<Vertex>> paths{orient(ear), orient(arc1), orient(arc2)};

        // Pick the middle path: a bare edge if present (forced by l,n >= 1),
        // otherwise the ear.
        int mid_idx = 0;
        for (int i = 0; i < 3; ++i)
            if (paths[static_cast<size_t>(i)].size() == 2) {
                mid_idx = i;
                break;
            }
        std::vector<Vertex> mid = paths[static_cast<size_t>(mid_idx)];
        paths.erase(paths.begin() + mid_idx);

        // Longer side is the l-side; ties by smaller first interior vertex.
        const auto &p0 = paths[0];
        const auto &p1 = paths[1];
        bool p0_is_ell = p0.size() != p1.size() ? p0.size() > p1.size() : p0[1] < p1[1];

        ThetaSubdivision theta;
        theta.u = tu;
        theta.v = std::max(eu, ev);
        theta.ell_path = p0_is_ell ? p0 : p1;
        theta.mid_path = mid;
        theta.en_path = p0_is_ell ? p1 : p0;
        assert(theta.validates(g));
        return theta;
    }
    return std::nullopt;
}

} // namespace shadow
