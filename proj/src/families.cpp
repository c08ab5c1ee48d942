#include "shadow/families.hpp"

#include <stdexcept>

namespace shadow {

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

Graph petersen_graph() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer pentagon
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);               // spokes
    }
    return Graph(10, e);
}

std::pair<Graph, ThetaSubdivision> theta_graph(int l, int m, int n) {
    if (l < 1 || n < 1 || m < 2) throw std::invalid_argument("theta needs l,n >= 1 and m >= 2");
    Vertex u = 0, v = 1;
    int total = l + m + n;
    std::vector<std::pair<Vertex, Vertex>> e;

    ThetaSubdivision t;
    t.u = u;
    t.v = v;
    Vertex next = 2;
    auto lay_path = [&](int interior) {
        std::vector<Vertex> p{u};
        for (int i = 0; i < interior; ++i) p.push_back(next++);
        p.push_back(v);
        for (size_t i = 0; i + 1 < p.size(); ++i) e.emplace_back(p[i], p[i + 1]);
        return p;
    };
    t.ell_path = lay_path(l);
    t.mid_path = lay_path(m - 2);
    t.en_path = lay_path(n);

    Graph g(total, e);
    if (!t.validates(g)) throw std::logic_error("theta_graph produced an invalid subdivision");
    return {std::move(g), std::move(t)};
}

} // namespace shadow
