#include "shadow/graph.hpp"

namespace shadow {

std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph &g) {
    if (g.order() <= 1) return true;
    return connected_components(g).size() == 1;
}

} // namespace shadow
