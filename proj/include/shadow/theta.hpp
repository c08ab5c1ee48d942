#ifndef SHADOW_THETA_HPP
#define SHADOW_THETA_HPP

#include <optional>
#include <string>
#include <vector>

#include "shadow/graph.hpp"

namespace shadow {

/// A located topological K4^- : two endvertices u, v joined by three
/// internally disjoint paths. Paths are stored endpoint-to-endpoint
/// (u first, v last). Parameters follow theta(l, m, n): the l-side path
/// has l interior vertices, the middle path m-2, the n-side n, so the
/// two fundamental cycles have orders l+m and m+n.
struct ThetaSubdivision {
    Vertex u = -1;
    Vertex v = -1;
    std::vector<Vertex> ell_path; // u, a_1..a_l, v
    std::vector<Vertex> mid_path; // u, xi_1..xi_{m-2}, v
    std::vector<Vertex> en_path;  // u, b_1..b_n, v

    int ell() const { return static_cast<int>(ell_path.size()) - 2; }
    int m() const { return static_cast<int>(mid_path.size()); }
    int n() const { return static_cast<int>(en_path.size()) - 2; }

    /// All vertices of the subdivision, sorted.
    std::vector<Vertex> vertices() const;

    /// Invariant check against a host graph: path adjacencies, pairwise
    /// internal disjointness, l,n >= 1 and m >= 2, degree conditions.
    bool validates(const Graph &g, std::string *why = nullptr) const;
};

/// Finds a theta subdivision if one exists (equivalently, if some block
/// has more edges than vertices). Deterministic: first offending block in
/// canonical order, cycle from ordered DFS, ear preferring chords.
/// The middle path is the ear unless one of the three u-v paths is a bare
/// edge, which is then forced to be the middle (l, n >= 1). Of the two
/// side paths the longer becomes the l-side; ties break toward the
/// smaller first interior vertex.
std::optional<ThetaSubdivision> find_theta(const Graph &g);

} // namespace shadow

#endif
