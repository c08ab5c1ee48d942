#ifndef SHADOW_GRAPH_HPP
#define SHADOW_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shadow {

using Vertex = int;

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge &a, const Edge &b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge &a, const Edge &b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

/// Simple loopless undirected graph over vertices 0..n-1.
///
/// Immutable once constructed; the constructor rejects self-loops,
/// duplicate edges, and out-of-range endpoints. Adjacency lists are kept
/// sorted so every traversal in the library is deterministic.
class Graph {
public:
    Graph() = default;

    Graph(int order, const std::vector<std::pair<Vertex, Vertex>> &edge_pairs) : n_(order) {
        if (order < 0) throw std::invalid_argument("graph order must be non-negative");
        adj_.resize(static_cast<size_t>(order));
        edges_.reserve(edge_pairs.size());
        for (auto [a, b] : edge_pairs) add_edge_checked(a, b);
        finalize();
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge> &edges() const { return edges_; }

    const std::vector<Vertex> &neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex a, Vertex b) const {
        if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b) return false;
        const auto &na = adj_[static_cast<size_t>(a)];
        return std::binary_search(na.begin(), na.end(), b);
    }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    void add_edge_checked(Vertex a, Vertex b) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        Edge e(a, b);
        for (const Edge &known : edges_)
            if (known == e)
                throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        edges_.push_back(e);
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }

    void finalize() {
        std::sort(edges_.begin(), edges_.end());
        for (auto &row : adj_) std::sort(row.begin(), row.end());
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Validating constructor wrapper matching the rest of the snake_case API.
inline Graph build_graph(int order, const std::vector<std::pair<Vertex, Vertex>> &edges) {
    return Graph(order, edges);
}

/// A walk of distinct vertices; closed means the last vertex is also
/// adjacent to the first (a cycle).
struct CyclePath {
    std::vector<Vertex> vertices;
    bool closed = false;

    int length() const {
        int segs = static_cast<int>(vertices.size()) - 1;
        return closed ? segs + 1 : segs;
    }

    bool is_odd_cycle() const { return closed && vertices.size() >= 3 && vertices.size() % 2 == 1; }

    /// Checks adjacency of consecutive vertices, distinctness, and closure
    /// against the host graph.
    bool validates(const Graph &g) const {
        if (vertices.empty()) return false;
        std::vector<Vertex> seen = vertices;
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
        for (size_t i = 0; i + 1 < vertices.size(); ++i)
            if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
        if (closed) {
            if (vertices.size() < 3) return false;
            if (!g.has_edge(vertices.back(), vertices.front())) return false;
        }
        return true;
    }
};

/// Connected components, each a sorted vertex list; components ordered by
/// smallest contained vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph &g);

bool is_connected(const Graph &g);

} // namespace shadow

#endif
