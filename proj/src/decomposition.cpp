#include "shadow/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

namespace shadow {

bool BlockDecomposition::Block::is_cycle() const {
    if (vertices.size() < 3 || vertices.size() != edges.size()) return false;
    std::vector<int> deg(vertices.size(), 0);
    for (const Edge &e : edges) {
        auto iu = std::lower_bound(vertices.begin(), vertices.end(), e.u);
        auto iv = std::lower_bound(vertices.begin(), vertices.end(), e.v);
        ++deg[static_cast<size_t>(iu - vertices.begin())];
        ++deg[static_cast<size_t>(iv - vertices.begin())];
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

namespace {

struct BlockFinder {
    const Graph &g;
    std::vector<int> disc, low;
    std::vector<Edge> edge_stack;
    std::vector<BlockDecomposition::Block> blocks;
    std::set<Vertex> cuts;
    int timer = 0;

    explicit BlockFinder(const Graph &graph)
        : g(graph), disc(static_cast<size_t>(graph.order()), -1),
          low(static_cast<size_t>(graph.order()), -1) {}

    void pop_block(const Edge &until) {
        std::set<Vertex> verts;
        std::vector<Edge> edges;
        for (;;) {
            assert(!edge_stack.empty());
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(e);
            verts.insert(e.u);
            verts.insert(e.v);
            if (e == until) break;
        }
        BlockDecomposition::Block b;
        b.vertices.assign(verts.begin(), verts.end());
        std::sort(edges.begin(), edges.end());
        b.edges = std::move(edges);
        blocks.push_back(std::move(b));
    }

    // Iterative DFS so deep paths cannot overflow the call stack.
    void run_from(Vertex root) {
        struct Frame {
            Vertex v;
            Vertex parent;
            size_t next_idx;
        };
        std::vector<Frame> stack;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        int root_children = 0;

        while (!stack.empty()) {
            Frame &f = stack.back();
            const auto &nbrs = g.neighbors(f.v);
            if (f.next_idx < nbrs.size()) {
                Vertex w = nbrs[f.next_idx++];
                if (w == f.parent) continue;
                if (disc[static_cast<size_t>(w)] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
                    edge_stack.emplace_back(f.v, w);
                    low[static_cast<size_t>(f.v)] =
                        std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                Vertex v = f.v;
                Vertex parent = f.parent;
                stack.pop_back();
                if (parent != -1) {
                    low[static_cast<size_t>(parent)] =
                        std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
                    if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(parent)]) {
                        if (parent != root || root_children > 1) cuts.insert(parent);
                        // root with one child is not a cut vertex, but the
                        // block below it still closes here.
                        pop_block(Edge(parent, v));
                    }
                }
            }
        }
    }
};

} // namespace

BlockDecomposition block_decomposition(const Graph &g) {
    BlockFinder finder(g);
    for (Vertex v = 0; v < g.order(); ++v)
        if (finder.disc[static_cast<size_t>(v)] == -1 && g.degree(v) > 0) finder.run_from(v);

    BlockDecomposition result;
    result.blocks = std::move(finder.blocks);
    std::sort(result.blocks.begin(), result.blocks.end(),
              [](const BlockDecomposition::Block &a, const BlockDecomposition::Block &b) {
                  return a.vertices != b.vertices ? a.vertices < b.vertices : a.edges < b.edges;
              });
    result.cut_vertices.assign(finder.cuts.begin(), finder.cuts.end());
    result.blocks_of_vertex.resize(static_cast<size_t>(g.order()));
    for (int i = 0; i < static_cast<int>(result.blocks.size()); ++i)
        for (Vertex v : result.blocks[static_cast<size_t>(i)].vertices)
            result.blocks_of_vertex[static_cast<size_t>(v)].push_back(i);
    return result;
}

std::optional<std::vector<int>> two_coloring(const Graph &g) {
    std::vector<int> color(static_cast<size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::optional<CyclePath> find_odd_cycle(const Graph &g) {
    std::vector<int> color(static_cast<size_t>(g.order()), -1);
    std::vector<Vertex> parent(static_cast<size_t>(g.order()), -1);
    std::vector<int> depth(static_cast<size_t>(g.order()), 0);

    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    parent[static_cast<size_t>(w)] = v;
                    depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)] && w != v) {
                    // Same color on adjacent vertices: the tree paths to the
                    // common ancestor plus edge w-v form an odd cycle.
                    Vertex a = v, b = w;
                    std::vector<Vertex> pa{a}, pb{b};
                    while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
                        a = parent[static_cast<size_t>(a)];
                        pa.push_back(a);
                    }
                    while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
                        b = parent[static_cast<size_t>(b)];
                        pb.push_back(b);
                    }
                    while (a != b) {
                        a = parent[static_cast<size_t>(a)];
                        pa.push_back(a);
                        b = parent[static_cast<size_t>(b)];
                        pb.push_back(b);
                    }
                    // pa ends at the ancestor, pb contains it as last element too.
                    CyclePath cycle;
                    cycle.closed = true;
                    cycle.vertices = pa; // v .. lca
                    for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it) cycle.vertices.push_back(*it);
                    assert(cycle.vertices.size() % 2 == 1 && cycle.vertices.size() >= 3);
                    assert(cycle.validates(g));
                    return cycle;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace shadow
