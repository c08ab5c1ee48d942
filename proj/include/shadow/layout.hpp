#ifndef SHADOW_LAYOUT_HPP
#define SHADOW_LAYOUT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shadow/embedding.hpp"
#include "shadow/graph.hpp"

namespace shadow {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct LayoutOptions {
    double inner_radius = 0.5; // shadows of even positions, must be in (0,1)
    double outer_radius = 1.5; // shadows of odd positions, must exceed 1
};

/// The circular drawing of S(C) for an even cycle C: cycle vertices on a
/// unit circle, each shadow on the same ray at the inner or outer radius,
/// alternating with the cycle position; all edges straight segments.
struct CircularLayout {
    int half_length = 0;               // k, cycle order 2k
    std::vector<Vertex> cycle;         // cycle vertices in drawing order
    int shadow_offset = 0;             // shadow of cycle[i] is cycle[i] + offset
    std::vector<double> angles;        // per cycle position
    std::vector<double> shadow_radius; // per cycle position
    LayoutOptions options;

    Point position_of_cycle(int i) const;
    Point position_of_shadow(int i) const;
};

/// Layout for the standard cycle graph on 2k vertices (shadows at +2k).
/// Rejects odd or too-small orders and out-of-range radii.
CircularLayout draw_even_cycle_shadow(int order, LayoutOptions options = {});

/// Layout of S(C) for an arbitrary even cycle walk inside a host of
/// original order n (shadows at +n), numbered so walk.front() takes the
/// first position.
CircularLayout circular_layout_for(const std::vector<Vertex> &walk, int original_order,
                                   LayoutOptions options = {});

/// Rotation system induced by the layout geometry (neighbors sorted by
/// angle), outer face derived from the drawing's unbounded side.
RotationSystem rotation_from_layout(const CircularLayout &layout);

/// Straight-line / polyline drawing: coordinates per vertex, one polyline
/// per edge. Always checked crossing-free before being returned.
struct Drawing {
    struct Polyline {
        Vertex from = -1;
        Vertex to = -1;
        std::vector<Point> points; // includes both endpoints
    };
    std::vector<Vertex> vertices;
    std::vector<Point> coords; // parallel to vertices
    std::vector<Polyline> edges;

    Point coord_of(Vertex v) const;
};

/// Pairwise segment-intersection count over all polylines; contacts at
/// shared endpoints are not crossings. eps is the geometric tolerance.
int count_crossings(const Drawing &d, double eps = 1e-9);

/// Drawing from a circular layout (straight segments).
Drawing render(const CircularLayout &layout);

/// Drawing from an Euler-certified rotation system. Components with one
/// edge become segments; anything larger is star-triangulated and drawn
/// straight-line with the shift method on an integer grid, then the
/// helper vertices are removed. Throws if a crossing survives (an
/// internal bug, never silent).
Drawing render(const RotationSystem &rs);

/// Deterministic SVG serialization. Vertices with id >= shadow_threshold
/// are drawn hollow (shadow vertices), the rest filled.
std::string to_svg(const Drawing &d, int shadow_threshold);

} // namespace shadow

#endif
