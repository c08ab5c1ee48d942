#ifndef SHADOW_DECOMPOSITION_HPP
#define SHADOW_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "shadow/graph.hpp"

namespace shadow {

/// Blocks (maximal 2-connected subgraphs, including bridge edges) and cut
/// vertices. Canonically ordered: block vertex lists sorted, blocks sorted
/// lexicographically by vertex list, cut vertices ascending.
struct BlockDecomposition {
    struct Block {
        std::vector<Vertex> vertices;
        std::vector<Edge> edges;

        bool is_bridge() const { return edges.size() == 1; }
        /// |V| = |E| >= 3 with every vertex of degree 2 inside the block.
        bool is_cycle() const;
    };

    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;
    /// blocks_of_vertex[v] = indices into blocks containing v.
    std::vector<std::vector<int>> blocks_of_vertex;

    bool is_cut_vertex(Vertex v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }
};

BlockDecomposition block_decomposition(const Graph &g);

/// Returns an odd cycle if the graph is non-bipartite, empty otherwise.
/// BFS 2-coloring per component in vertex order; the first conflicting
/// edge met yields the cycle through parent pointers.
std::optional<CyclePath> find_odd_cycle(const Graph &g);

/// Proper 2-coloring when one exists (0/1 per vertex), empty otherwise.
std::optional<std::vector<int>> two_coloring(const Graph &g);

} // namespace shadow

#endif
