#include "shadow/constructions.hpp"

namespace shadow {

namespace {

std::vector<std::pair<Vertex, Vertex>> expansion_edges(const Graph &g, bool spokes, bool central) {
    int n = g.order();
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(3 * static_cast<size_t>(g.size()) + static_cast<size_t>(n));
    for (const Edge &e : g.edges()) {
        out.emplace_back(e.u, e.v);
        out.emplace_back(e.u, e.v + n);
        out.emplace_back(e.v, e.u + n);
    }
    if (spokes)
        for (Vertex v = 0; v < n; ++v) out.emplace_back(v, v + n);
    if (central)
        for (Vertex v = 0; v < n; ++v) out.emplace_back(v + n, 2 * n);
    return out;
}

} // namespace

ShadowGraph great_shadow(const Graph &g) {
    Graph host(2 * g.order(), expansion_edges(g, true, false));
    return ShadowGraph(std::move(host), g.order(), ShadowKind::GreatShadow);
}

ShadowGraph small_shadow(const Graph &g) {
    Graph host(2 * g.order(), expansion_edges(g, false, false));
    return ShadowGraph(std::move(host), g.order(), ShadowKind::SmallShadow);
}

ShadowGraph mycielskian(const Graph &g) {
    Graph host(2 * g.order() + 1, expansion_edges(g, false, true));
    return ShadowGraph(std::move(host), g.order(), ShadowKind::Mycielskian);
}

} // namespace shadow
