#ifndef SHADOW_FAMILIES_HPP
#define SHADOW_FAMILIES_HPP

#include "shadow/graph.hpp"
#include "shadow/theta.hpp"

namespace shadow {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

/// theta(l, m, n): two cycles of orders l+m and m+n sharing a path with
/// m-2 interior vertices. Vertex layout: u=0, v=1, a_1..a_l = 2..l+1,
/// xi_1..xi_{m-2} next, b_1..b_n last. Returns the graph together with
/// the subdivision in those roles.
std::pair<Graph, ThetaSubdivision> theta_graph(int l, int m, int n);

} // namespace shadow

#endif
