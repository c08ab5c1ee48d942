#include "shadow/layout.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace shadow {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Point CircularLayout::position_of_cycle(int i) const {
    return {std::cos(angles[static_cast<size_t>(i)]), std::sin(angles[static_cast<size_t>(i)])};
}

Point CircularLayout::position_of_shadow(int i) const {
    double r = shadow_radius[static_cast<size_t>(i)];
    return {r * std::cos(angles[static_cast<size_t>(i)]), r * std::sin(angles[static_cast<size_t>(i)])};
}

CircularLayout circular_layout_for(const std::vector<Vertex> &walk, int original_order,
                                   LayoutOptions options) {
    const int len = static_cast<int>(walk.size());
    if (len < 4 || len % 2 != 0)
        throw std::invalid_argument("even-cycle layout needs an even cycle of order >= 4");
    if (!(options.inner_radius > 0.0 && options.inner_radius < 1.0))
        throw std::invalid_argument("inner radius must lie in (0, 1)");
    if (!(options.outer_radius > 1.0))
        throw std::invalid_argument("outer radius must exceed 1");

    CircularLayout layout;
    layout.half_length = len / 2;
    layout.cycle = walk;
    layout.shadow_offset = original_order;
    layout.options = options;
    layout.angles.resize(static_cast<size_t>(len));
    layout.shadow_radius.resize(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        layout.angles[static_cast<size_t>(i)] = 2.0 * kPi * i / len;
        // positions with odd 1-based numbering sit outside the circle
        layout.shadow_radius[static_cast<size_t>(i)] =
            i % 2 == 0 ? options.outer_radius : options.inner_radius;
    }
    return layout;
}

CircularLayout draw_even_cycle_shadow(int order, LayoutOptions options) {
    if (order < 4 || order % 2 != 0)
        throw std::invalid_argument("even-cycle layout needs an even cycle of order >= 4");
    std::vector<Vertex> walk(static_cast<size_t>(order));
    for (int i = 0; i < order; ++i) walk[static_cast<size_t>(i)] = i;
    return circular_layout_for(walk, order, options);
}

namespace {

struct LayoutScene {
    std::vector<Vertex> ids;
    std::map<Vertex, Point> pos;
    std::vector<std::pair<Vertex, Vertex>> edges;
};

LayoutScene scene_of(const CircularLayout &layout) {
    LayoutScene s;
    const int len = 2 * layout.half_length;
    auto shadow = [&](int i) { return layout.cycle[static_cast<size_t>(i)] + layout.shadow_offset; };
    for (int i = 0; i < len; ++i) {
        s.pos[layout.cycle[static_cast<size_t>(i)]] = layout.position_of_cycle(i);
        s.pos[shadow(i)] = layout.position_of_shadow(i);
    }
    for (int i = 0; i < len; ++i) {
        int j = (i + 1) % len;
        s.edges.emplace_back(layout.cycle[static_cast<size_t>(i)], layout.cycle[static_cast<size_t>(j)]);
        s.edges.emplace_back(layout.cycle[static_cast<size_t>(i)], shadow(i));
        s.edges.emplace_back(layout.cycle[static_cast<size_t>(i)], shadow(j));
        s.edges.emplace_back(layout.cycle[static_cast<size_t>(j)], shadow(i));
    }
    for (auto &[v, _] : s.pos) s.ids.push_back(v);
    return s;
}

void sort_rotation_by_angle(std::vector<Vertex> &nbrs, Vertex v, const std::map<Vertex, Point> &pos) {
    Point c = pos.at(v);
    std::sort(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) {
        Point pa = pos.at(a), pb = pos.at(b);
        double ta = std::atan2(pa.y - c.y, pa.x - c.x);
        double tb = std::atan2(pb.y - c.y, pb.x - c.x);
        if (ta < 0) ta += 2 * kPi;
        if (tb < 0) tb += 2 * kPi;
        return ta != tb ? ta < tb : a < b;
    });
}

} // namespace

RotationSystem rotation_from_layout(const CircularLayout &layout) {
    LayoutScene s = scene_of(layout);
    Vertex cap = *std::max_element(s.ids.begin(), s.ids.end()) + 1;
    std::map<Vertex, std::vector<Vertex>> adj;
    for (auto [u, v] : s.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    RotationSystem rs(cap);
    for (auto &[v, nbrs] : adj) {
        sort_rotation_by_angle(nbrs, v, s.pos);
        rs.set_rotation(v, nbrs);
    }

    // The unbounded face passes the bottommost (then leftmost) vertex,
    // leaving it toward the neighbor of smallest polar angle.
    Vertex bottom = s.ids.front();
    for (Vertex v : s.ids) {
        Point p = s.pos.at(v), q = s.pos.at(bottom);
        if (p.y < q.y - 1e-12 || (std::abs(p.y - q.y) <= 1e-12 && p.x < q.x)) bottom = v;
    }
    Point bp = s.pos.at(bottom);
    Vertex best = -1;
    double best_angle = 0.0;
    for (Vertex w : adj.at(bottom)) {
        Point wp = s.pos.at(w);
        double t = std::atan2(wp.y - bp.y, wp.x - bp.x);
        if (t < 0) t += 2 * kPi;
        if (best == -1 || t < best_angle) {
            best = w;
            best_angle = t;
        }
    }
    rs.set_outer({bottom, best});
    if (!rs.euler_ok()) throw std::logic_error("circular rotation failed the Euler check");
    return rs;
}

Point Drawing::coord_of(Vertex v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) throw std::invalid_argument("vertex not in drawing");
    return coords[static_cast<size_t>(it - vertices.begin())];
}

namespace {

double dist_point_segment(Point p, Point a, Point b) {
    double vx = b.x - a.x, vy = b.y - a.y;
    double wx = p.x - a.x, wy = p.y - a.y;
    double vv = vx * vx + vy * vy;
    double t = vv > 0 ? (wx * vx + wy * vy) / vv : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    double dx = p.x - (a.x + t * vx), dy = p.y - (a.y + t * vy);
    return std::sqrt(dx * dx + dy * dy);
}

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

double segment_distance(Point p1, Point p2, Point q1, Point q2) {
    double d1 = cross2(q2.x - q1.x, q2.y - q1.y, p1.x - q1.x, p1.y - q1.y);
    double d2 = cross2(q2.x - q1.x, q2.y - q1.y, p2.x - q1.x, p2.y - q1.y);
    double d3 = cross2(p2.x - p1.x, p2.y - p1.y, q1.x - p1.x, q1.y - p1.y);
    double d4 = cross2(p2.x - p1.x, p2.y - p1.y, q2.x - p1.x, q2.y - p1.y);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return 0.0; // proper crossing
    return std::min({dist_point_segment(p1, q1, q2), dist_point_segment(p2, q1, q2),
                     dist_point_segment(q1, p1, p2), dist_point_segment(q2, p1, p2)});
}

bool points_close(Point a, Point b, double eps) {
    return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

struct Seg {
    Point a, b;
    int polyline;
    int index; // segment index within the polyline
};

} // namespace

int count_crossings(const Drawing &d, double eps) {
    std::vector<Seg> segs;
    for (int p = 0; p < static_cast<int>(d.edges.size()); ++p) {
        const auto &pts = d.edges[static_cast<size_t>(p)].points;
        for (int i = 0; i + 1 < static_cast<int>(pts.size()); ++i)
            segs.push_back({pts[static_cast<size_t>(i)], pts[static_cast<size_t>(i + 1)], p, i});
    }
    int crossings = 0;
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg &s = segs[i], &t = segs[j];
            if (s.polyline == t.polyline && std::abs(s.index - t.index) <= 1) continue;
            bool share = points_close(s.a, t.a, eps) || points_close(s.a, t.b, eps) ||
                         points_close(s.b, t.a, eps) || points_close(s.b, t.b, eps);
            if (share) {
                // shared endpoint is fine unless the segments overlap along a line
                Point sa = s.a, sb = s.b, ta = t.a, tb = t.b;
                // identify the far endpoints
                Point fs = points_close(sa, ta, eps) || points_close(sa, tb, eps) ? sb : sa;
                Point ft = points_close(ta, sa, eps) || points_close(ta, sb, eps) ? tb : ta;
                if (dist_point_segment(fs, ta, tb) <= eps || dist_point_segment(ft, sa, sb) <= eps)
                    ++crossings;
            } else if (segment_distance(s.a, s.b, t.a, t.b) <= eps) {
                ++crossings;
            }
        }
    }
    return crossings;
}

Drawing render(const CircularLayout &layout) {
    LayoutScene s = scene_of(layout);
    Drawing d;
    for (Vertex v : s.ids) {
        d.vertices.push_back(v);
        d.coords.push_back(s.pos.at(v));
    }
    std::sort(s.edges.begin(), s.edges.end());
    for (auto [u, v] : s.edges) d.edges.push_back({u, v, {s.pos.at(u), s.pos.at(v)}});
    int crossings = count_crossings(d);
    if (crossings != 0)
        throw std::logic_error("circular layout produced " + std::to_string(crossings) + " crossings");
    return d;
}

namespace {

// ---- straight-line drawing of one 2-connected embedded component ----
//
// The component's faces are star-triangulated (one helper vertex per face
// of length above three), a canonical order is peeled off the maximal
// planar result, and the shift method places everything on an integer
// grid; helper vertices are then dropped.
struct GridPlacer {
    std::vector<std::vector<int>> rot; // local ids
    std::vector<Vertex> global_of;    // local -> global (stars: -1)
    int base1 = -1, base2 = -1;       // contour anchors (local)

    std::vector<std::vector<int>> faces_local() const {
        std::set<std::pair<int, int>> visited;
        std::vector<std::vector<int>> out;
        for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
            for (int w : rot[static_cast<size_t>(v)]) {
                if (visited.count({v, w})) continue;
                std::vector<int> walk;
                int a = v, b = w;
                do {
                    visited.insert({a, b});
                    walk.push_back(a);
                    int c = succ(b, a);
                    a = b;
                    b = c;
                } while (!(a == v && b == w));
                out.push_back(std::move(walk));
            }
        }
        return out;
    }

    int succ(int v, int from) const {
        const auto &row = rot[static_cast<size_t>(v)];
        auto it = std::find(row.begin(), row.end(), from);
        assert(it != row.end());
        ++it;
        return it == row.end() ? row.front() : *it;
    }

    void insert_between(int v, int before, int after, int item) {
        auto &row = rot[static_cast<size_t>(v)];
        auto it = std::find(row.begin(), row.end(), before);
        assert(it != row.end());
        auto next = it + 1 == row.end() ? row.begin() : it + 1;
        assert(*next == after);
        if (next == row.begin())
            row.push_back(item);
        else
            row.insert(next, item);
    }

    static std::vector<int> canonical_walk(std::vector<int> walk) {
        size_t best = 0;
        auto at = [&](size_t i) {
            return std::make_pair(walk[i % walk.size()], walk[(i + 1) % walk.size()]);
        };
        for (size_t i = 1; i < walk.size(); ++i)
            if (at(i) < at(best)) best = i;
        std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(best), walk.end());
        return walk;
    }

    void star_triangulate(const std::vector<int> &outer_walk) {
        const std::vector<int> outer_canon = canonical_walk(outer_walk);
        std::vector<std::vector<int>> all = faces_local();
        for (const auto &f : all) {
            bool is_outer = canonical_walk(f) == outer_canon;
            if (f.size() == 3 && !is_outer) continue;
            if (f.size() == 3 && is_outer) {
                base2 = f[0];
                base1 = f[1];
                continue;
            }
            std::set<int> distinct(f.begin(), f.end());
            if (distinct.size() != f.size())
                throw std::logic_error("face repeats a vertex; component not 2-connected");
            int z = static_cast<int>(rot.size());
            std::vector<int> zrot(f.rbegin(), f.rend());
            rot.push_back(std::move(zrot));
            global_of.push_back(-1);
            const int len = static_cast<int>(f.size());
            for (int i = 0; i < len; ++i) {
                int prev = f[static_cast<size_t>((i + len - 1) % len)];
                int next = f[static_cast<size_t>((i + 1) % len)];
                insert_between(f[static_cast<size_t>(i)], prev, next, z);
            }
            if (is_outer) {
                base2 = f[0];
                base1 = f[1];
            }
        }
    }

    std::vector<int> trace_contour() const {
        // outer orbit from (base2 -> base1), reported as the path
        // base1 .. base2 along the boundary
        std::vector<int> walk;
        int a = base2, b = base1;
        do {
            walk.push_back(a);
            int c = succ(b, a);
            a = b;
            b = c;
        } while (!(a == base2 && b == base1));
        std::vector<int> contour(walk.begin() + 1, walk.end());
        contour.push_back(base2);
        return contour;
    }

    // Peels a canonical order and returns placement coordinates (local).
    std::vector<Point> place() {
        const int total = static_cast<int>(rot.size());
        std::vector<std::vector<int>> saved_rot = rot;

        struct Step {
            int v;
            std::vector<int> support;
        };
        std::vector<Step> steps;

        int remaining = total;
        while (remaining > 3) {
            std::vector<int> contour = trace_contour();
            std::vector<char> on_contour(rot.size(), 0);
            for (int v : contour) on_contour[static_cast<size_t>(v)] = 1;

            int pick = -1;
            for (int v : contour) {
                if (v == base1 || v == base2) continue;
                int cnt = 0;
                for (int w : rot[static_cast<size_t>(v)]) cnt += on_contour[static_cast<size_t>(w)];
                if (cnt == 2 && (pick == -1 || v < pick)) pick = v;
            }
            if (pick == -1) throw std::logic_error("canonical order: no removable vertex");

            std::set<int> nbrs(rot[static_cast<size_t>(pick)].begin(),
                               rot[static_cast<size_t>(pick)].end());
            for (int w : nbrs) {
                auto &row = rot[static_cast<size_t>(w)];
                row.erase(std::remove(row.begin(), row.end(), pick), row.end());
            }
            rot[static_cast<size_t>(pick)].clear();

            // support = replacement window on the refreshed contour
            std::vector<int> fresh = trace_contour();
            std::vector<int> support;
            for (size_t i = 0; i < fresh.size(); ++i) {
                if (!nbrs.count(fresh[i])) continue;
                size_t j = i;
                while (j < fresh.size() && nbrs.count(fresh[j])) ++j;
                support.assign(fresh.begin() + static_cast<std::ptrdiff_t>(i),
                               fresh.begin() + static_cast<std::ptrdiff_t>(j));
                break;
            }
            if (support.size() < 2 || support.size() != nbrs.size())
                throw std::logic_error("canonical order: support not a contour interval");
            steps.push_back({pick, std::move(support)});
            --remaining;
        }

        // remaining triangle: base1, base2 and one apex
        int apex = -1;
        for (int v = 0; v < total; ++v)
            if (!rot[static_cast<size_t>(v)].empty() && v != base1 && v != base2) apex = v;
        assert(apex != -1);

        rot = std::move(saved_rot);

        std::vector<int> order{base1, base2, apex};
        std::vector<std::vector<int>> supports(static_cast<size_t>(total));
        supports[static_cast<size_t>(apex)] = {base1, base2};
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            order.push_back(it->v);
            supports[static_cast<size_t>(it->v)] = it->support;
        }

        // shift placement
        std::vector<long long> x(static_cast<size_t>(total), 0), y(static_cast<size_t>(total), 0);
        std::vector<std::vector<int>> cover(static_cast<size_t>(total));
        std::vector<int> contour{base1, base2};
        x[static_cast<size_t>(base2)] = 2;

        auto shift_with_cover = [&](int v, long long dx) {
            std::vector<int> stack{v};
            while (!stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                x[static_cast<size_t>(t)] += dx;
                for (int c : cover[static_cast<size_t>(t)]) stack.push_back(c);
            }
        };

        for (size_t oi = 2; oi < order.size(); ++oi) {
            int vk = order[oi];
            const auto &support = supports[static_cast<size_t>(vk)];
            auto pos_of = [&](int v) {
                return std::find(contour.begin(), contour.end(), v) - contour.begin();
            };
            size_t p = static_cast<size_t>(pos_of(support.front()));
            size_t q = static_cast<size_t>(pos_of(support.back()));
            if (p >= q || q >= contour.size())
                throw std::logic_error("shift placement: support out of order");
            for (size_t i = p; i <= q; ++i)
                if (contour[i] != support[i - p])
                    throw std::logic_error("shift placement: support mismatch");

            for (size_t i = p + 1; i < q; ++i) shift_with_cover(contour[i], 1);
            for (size_t i = q; i < contour.size(); ++i) shift_with_cover(contour[i], 2);

            int a = support.front(), b = support.back();
            long long xv = (x[static_cast<size_t>(a)] - y[static_cast<size_t>(a)] +
                            x[static_cast<size_t>(b)] + y[static_cast<size_t>(b)]) /
                           2;
            long long yv = (x[static_cast<size_t>(b)] + y[static_cast<size_t>(b)] -
                            x[static_cast<size_t>(a)] + y[static_cast<size_t>(a)]) /
                           2;
            x[static_cast<size_t>(vk)] = xv;
            y[static_cast<size_t>(vk)] = yv;
            for (size_t i = p + 1; i < q; ++i) cover[static_cast<size_t>(vk)].push_back(contour[i]);

            std::vector<int> next(contour.begin(), contour.begin() + static_cast<std::ptrdiff_t>(p + 1));
            next.push_back(vk);
            next.insert(next.end(), contour.begin() + static_cast<std::ptrdiff_t>(q), contour.end());
            contour = std::move(next);
        }

        std::vector<Point> pts(static_cast<size_t>(total));
        for (int v = 0; v < total; ++v)
            pts[static_cast<size_t>(v)] = {static_cast<double>(x[static_cast<size_t>(v)]),
                                           static_cast<double>(y[static_cast<size_t>(v)])};
        return pts;
    }
};

Drawing render_component(const RotationSystem &rs, const std::vector<Vertex> &comp) {
    Drawing d;
    if (comp.size() == 2) {
        d.vertices = comp;
        d.coords = {{0.0, 0.0}, {1.0, 0.0}};
        d.edges.push_back({comp[0], comp[1], {{0.0, 0.0}, {1.0, 0.0}}});
        return d;
    }

    GridPlacer placer;
    std::map<Vertex, int> local;
    for (Vertex v : comp) {
        local[v] = static_cast<int>(placer.global_of.size());
        placer.global_of.push_back(v);
    }
    placer.rot.resize(comp.size());
    for (Vertex v : comp) {
        std::vector<int> row;
        for (Vertex w : rs.rotation(v)) row.push_back(local.at(w));
        placer.rot[static_cast<size_t>(local.at(v))] = std::move(row);
    }

    // outer face: the designated one when it lives in this component
    std::vector<Vertex> outer = rs.outer_face();
    std::vector<int> outer_local;
    if (std::binary_search(comp.begin(), comp.end(), outer.front())) {
        for (Vertex v : outer) outer_local.push_back(local.at(v));
    } else {
        int a = 0;
        int b = placer.rot[0].front();
        std::vector<int> walk;
        int u = a, w = b;
        do {
            walk.push_back(u);
            int c = placer.succ(w, u);
            u = w;
            w = c;
        } while (!(u == a && w == b));
        outer_local = walk;
    }

    placer.star_triangulate(outer_local);
    std::vector<Point> pts = placer.place();

    for (size_t i = 0; i < comp.size(); ++i) {
        d.vertices.push_back(comp[i]);
        d.coords.push_back(pts[i]);
    }
    for (Vertex v : comp) {
        for (Vertex w : rs.rotation(v)) {
            if (v >= w) continue;
            d.edges.push_back({v, w, {pts[static_cast<size_t>(local.at(v))], pts[static_cast<size_t>(local.at(w))]}});
        }
    }
    std::sort(d.edges.begin(), d.edges.end(), [](const Drawing::Polyline &a, const Drawing::Polyline &b) {
        return std::make_pair(a.from, a.to) < std::make_pair(b.from, b.to);
    });
    return d;
}

void normalize_and_append(Drawing &total, Drawing piece, double *x_offset) {
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (const Point &p : piece.coords) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    double span = std::max({maxx - minx, maxy - miny, 1e-300});
    double scale = 1.0 / span;
    auto map_point = [&](Point p) {
        return Point{(p.x - minx) * scale + *x_offset, (p.y - miny) * scale};
    };
    for (Point &p : piece.coords) p = map_point(p);
    for (auto &e : piece.edges)
        for (Point &p : e.points) p = map_point(p);
    *x_offset += 1.25;

    total.vertices.insert(total.vertices.end(), piece.vertices.begin(), piece.vertices.end());
    total.coords.insert(total.coords.end(), piece.coords.begin(), piece.coords.end());
    total.edges.insert(total.edges.end(), piece.edges.begin(), piece.edges.end());
}

} // namespace

Drawing render(const RotationSystem &rs) {
    if (!rs.euler_ok()) throw std::invalid_argument("render requires an Euler-certified embedding");

    // group present vertices into components
    std::vector<Vertex> verts = rs.vertices();
    std::set<Vertex> unseen(verts.begin(), verts.end());
    std::vector<std::vector<Vertex>> comps;
    while (!unseen.empty()) {
        Vertex s = *unseen.begin();
        std::vector<Vertex> stack{s}, comp;
        unseen.erase(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : rs.rotation(v))
                if (unseen.erase(w)) stack.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }

    Drawing total;
    double x_offset = 0.0;
    for (const auto &comp : comps) normalize_and_append(total, render_component(rs, comp), &x_offset);

    int crossings = count_crossings(total);
    if (crossings != 0)
        throw std::logic_error("render produced " + std::to_string(crossings) + " crossings");
    return total;
}

std::string to_svg(const Drawing &d, int shadow_threshold) {
    double minx = 0, miny = 0, maxx = 1, maxy = 1;
    if (!d.coords.empty()) {
        minx = miny = 1e300;
        maxx = maxy = -1e300;
        for (const Point &p : d.coords) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
    }
    double w = std::max(maxx - minx, 1e-9), h = std::max(maxy - miny, 1e-9);
    double margin = 0.05 * std::max(w, h);
    double r = 0.012 * std::max(w, h);
    double stroke = 0.004 * std::max(w, h);

    std::ostringstream out;
    out.setf(std::ios::fmtflags(0), std::ios::floatfield);
    out.precision(6);
    // flip y so the drawing keeps its mathematical orientation
    auto X = [&](double x) { return x; };
    auto Y = [&](double y) { return maxy - y + miny; };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (minx - margin) << " "
        << (miny - margin) << " " << (w + 2 * margin) << " " << (h + 2 * margin) << "\">\n";
    for (const auto &e : d.edges) {
        out << "  <polyline fill=\"none\" stroke=\"#444444\" stroke-width=\"" << stroke
            << "\" points=\"";
        for (size_t i = 0; i < e.points.size(); ++i) {
            if (i) out << " ";
            out << X(e.points[i].x) << "," << Y(e.points[i].y);
        }
        out << "\"/>\n";
    }
    for (size_t i = 0; i < d.vertices.size(); ++i) {
        bool shadow = d.vertices[i] >= shadow_threshold;
        out << "  <circle cx=\"" << X(d.coords[i].x) << "\" cy=\"" << Y(d.coords[i].y) << "\" r=\""
            << r << "\" fill=\"" << (shadow ? "#ffffff" : "#000000") << "\" stroke=\"#000000\""
            << " stroke-width=\"" << stroke << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace shadow
