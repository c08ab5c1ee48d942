#include "shadow/witness.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <stdexcept>

namespace shadow {

WitnessCheck validate_k33(const Graph &host, const K33Witness &w) {
    auto bad = [](const std::string &msg) { return WitnessCheck{false, msg}; };

    std::set<Vertex> branches;
    for (Vertex x : w.delta1) branches.insert(x);
    for (Vertex x : w.delta2) branches.insert(x);
    if (branches.size() != 6) return bad("branch vertices not distinct");
    for (Vertex x : branches)
        if (x < 0 || x >= host.order()) return bad("branch vertex out of range");

    std::set<Vertex> used_internal;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const auto &p = w.path(i, j);
            if (p.size() < 2) return bad("path with fewer than two vertices");
            if (p.front() != w.delta1[static_cast<size_t>(i)] || p.back() != w.delta2[static_cast<size_t>(j)])
                return bad("path endpoints do not match declared branch vertices");
            std::set<Vertex> on_path;
            for (Vertex x : p)
                if (!on_path.insert(x).second) return bad("repeated vertex within a path");
            for (size_t s = 0; s + 1 < p.size(); ++s)
                if (!host.has_edge(p[s], p[s + 1])) return bad("consecutive pair is not a host edge");
            for (size_t s = 1; s + 1 < p.size(); ++s) {
                Vertex x = p[s];
                if (branches.count(x)) return bad("branch vertex in path interior");
                if (!used_internal.insert(x).second) return bad("two paths share an internal vertex");
            }
        }
    }
    return WitnessCheck{true, {}};
}

K33Witness k33_from_odd_cycle(const ShadowGraph &sg, const CyclePath &c) {
    if (!c.closed || c.vertices.size() < 3 || c.vertices.size() % 2 == 0)
        throw std::invalid_argument("k33_from_odd_cycle needs an odd cycle of length >= 3");
    const int n = sg.original_order();
    for (Vertex x : c.vertices)
        if (x < 0 || x >= n) throw std::invalid_argument("cycle vertex outside the original graph");
    if (!c.validates(sg.graph()))
        throw std::invalid_argument("cycle does not validate in the shadow host");

    const auto &cv = c.vertices; // v_0 .. v_2k
    const int k2 = static_cast<int>(cv.size()) - 1; // 2k
    auto orig = [&](int i) { return cv[static_cast<size_t>(i)]; };
    auto shad = [&](int i) { return cv[static_cast<size_t>(i)] + n; };

    Vertex u = orig(k2), v = orig(0), w = orig(1);
    K33Witness out;
    out.delta1 = {u, v, w};
    out.delta2 = {u + n, v + n, w + n};

    auto edge_path = [](Vertex a, Vertex b) { return std::vector<Vertex>{a, b}; };
    out.path(0, 0) = edge_path(u, u + n);
    out.path(0, 1) = edge_path(u, v + n);
    out.path(1, 0) = edge_path(v, u + n);
    out.path(1, 1) = edge_path(v, v + n);
    out.path(1, 2) = edge_path(v, w + n);
    out.path(2, 1) = edge_path(w, v + n);
    out.path(2, 2) = edge_path(w, w + n);

    // P1: w = v_1, v'_2, v_3, ..., v'_2k = u'   (odd index original, even shadowed)
    std::vector<Vertex> p1;
    for (int i = 1; i <= k2; ++i) p1.push_back(i % 2 == 1 ? orig(i) : shad(i));
    out.path(2, 0) = p1;

    // P2: w' = v'_1, v_2, v'_3, ..., v_2k = u   (odd index shadowed, even original)
    std::vector<Vertex> p2;
    for (int i = 1; i <= k2; ++i) p2.push_back(i % 2 == 1 ? shad(i) : orig(i));
    std::reverse(p2.begin(), p2.end()); // store from u to w'
    out.path(0, 2) = p2;

    WitnessCheck check = validate_k33(sg.graph(), out);
    if (!check.ok) throw std::logic_error("odd-cycle witness failed validation: " + check.issue);
    return out;
}

namespace {

K33Witness theta_case_even(const ShadowGraph &sg, const ThetaSubdivision &t) {
    const int n = sg.original_order();
    auto sh = [n](Vertex x) { return x + n; };
    const auto &A = t.ell_path; // u, a_1..a_l, v
    const auto &M = t.mid_path; // u, xi_1..xi_{m-2}, v
    const auto &B = t.en_path;  // u, b_1..b_n, v
    const int l = t.ell(), m = t.m();
    Vertex u = t.u, v = t.v;
    auto a = [&](int i) { return A[static_cast<size_t>(i)]; };  // a(i) = a_i
    auto xi = [&](int i) { return M[static_cast<size_t>(i)]; }; // xi(i) = xi_i

    K33Witness out;
    out.delta1 = {a(1), a(2), v};
    out.delta2 = {sh(a(1)), sh(a(2)), sh(u)};

    out.path(0, 0) = {a(1), sh(a(1))};
    out.path(0, 1) = {a(1), sh(a(2))};
    out.path(0, 2) = {a(1), sh(u)};
    out.path(1, 0) = {a(2), sh(a(1))};
    out.path(1, 1) = {a(2), sh(a(2))};

    // P_{u'v}: u', xi_1, xi'_2, ... alternating, then v
    std::vector<Vertex> puv{sh(u)};
    for (int i = 1; i <= m - 2; ++i) puv.push_back(i % 2 == 1 ? xi(i) : sh(xi(i)));
    puv.push_back(v);
    std::reverse(puv.begin(), puv.end());
    out.path(2, 2) = puv;

    // P_{a'_1 v}: a'_1, u, xi'_1, xi_2, ... alternating, then v
    std::vector<Vertex> pa1v{sh(a(1)), u};
    for (int i = 1; i <= m - 2; ++i) pa1v.push_back(i % 2 == 1 ? sh(xi(i)) : xi(i));
    pa1v.push_back(v);
    std::reverse(pa1v.begin(), pa1v.end());
    out.path(2, 0) = pa1v;

    // P_{a'_2 v}: a'_2, a_3, a'_4, ... ascending, then v
    std::vector<Vertex> pa2v{sh(a(2))};
    for (int i = 3; i <= l; ++i) pa2v.push_back(i % 2 == 1 ? a(i) : sh(a(i)));
    pa2v.push_back(v);
    std::reverse(pa2v.begin(), pa2v.end());
    out.path(2, 1) = pa2v;

    // P_{u' a_2}: u', b_1..b_n, v', then a_l, a'_{l-1}, ... descending to a_2
    std::vector<Vertex> pua2{sh(u)};
    for (size_t i = 1; i + 1 < B.size(); ++i) pua2.push_back(B[i]);
    pua2.push_back(sh(v));
    for (int i = l; i >= 3; --i) pua2.push_back(i % 2 == 0 ? a(i) : sh(a(i)));
    pua2.push_back(a(2));
    std::reverse(pua2.begin(), pua2.end());
    out.path(1, 2) = pua2;

    return out;
}

K33Witness theta_case_odd(const ShadowGraph &sg, const ThetaSubdivision &t) {
    const int n = sg.original_order();
    auto sh = [n](Vertex x) { return x + n; };
    const auto &A = t.ell_path;
    const auto &M = t.mid_path;
    const auto &B = t.en_path;
    const int l = t.ell(), m = t.m();
    Vertex u = t.u, v = t.v;
    auto a = [&](int i) { return A[static_cast<size_t>(i)]; };
    auto xi = [&](int i) { return M[static_cast<size_t>(i)]; };

    K33Witness out;
    out.delta1 = {a(1), a(2), u};
    out.delta2 = {sh(a(1)), sh(a(2)), v};

    out.path(0, 0) = {a(1), sh(a(1))};
    out.path(0, 1) = {a(1), sh(a(2))};
    out.path(1, 0) = {a(2), sh(a(1))};
    out.path(1, 1) = {a(2), sh(a(2))};
    out.path(2, 0) = {u, sh(a(1))};

    // P_{uv}: u, xi'_1, xi_2, ... alternating, then v
    std::vector<Vertex> puv{u};
    for (int i = 1; i <= m - 2; ++i) puv.push_back(i % 2 == 1 ? sh(xi(i)) : xi(i));
    puv.push_back(v);
    out.path(2, 2) = puv;

    // P_{a_1 v}: a_1, u', xi_1, xi'_2, ... alternating, then v
    std::vector<Vertex> pa1v{a(1), sh(u)};
    for (int i = 1; i <= m - 2; ++i) pa1v.push_back(i % 2 == 1 ? xi(i) : sh(xi(i)));
    pa1v.push_back(v);
    out.path(0, 2) = pa1v;

    // P_{a_2 v}: a_2, a'_3, a_4, ... ascending, then v
    std::vector<Vertex> pa2v{a(2)};
    for (int i = 3; i <= l; ++i) pa2v.push_back(i % 2 == 1 ? sh(a(i)) : a(i));
    pa2v.push_back(v);
    out.path(1, 2) = pa2v;

    // P_{u a'_2}: u, b_1..b_n, v', then a_l, a'_{l-1}, ... descending, to a'_2
    std::vector<Vertex> pua2{u};
    for (size_t i = 1; i + 1 < B.size(); ++i) pua2.push_back(B[i]);
    pua2.push_back(sh(v));
    for (int i = l; i >= 3; --i) pua2.push_back(i % 2 == 1 ? a(i) : sh(a(i)));
    pua2.push_back(sh(a(2)));
    out.path(2, 1) = pua2;

    return out;
}

ThetaSubdivision swap_sides(const ThetaSubdivision &t) {
    ThetaSubdivision s = t;
    std::swap(s.ell_path, s.en_path);
    return s;
}

// Exhaustive fallback restricted to S(theta) itself, mapped back into the
// host shadow's index space.
K33Witness theta_fallback_search(const ShadowGraph &sg, const ThetaSubdivision &t) {
    std::vector<Vertex> verts = t.vertices();
    const int tn = static_cast<int>(verts.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto idx_of = [&](Vertex x) {
        return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
    };
    auto add_path_edges = [&](const std::vector<Vertex> &p) {
        for (size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(idx_of(p[i]), idx_of(p[i + 1]));
    };
    add_path_edges(t.ell_path);
    add_path_edges(t.mid_path);
    add_path_edges(t.en_path);

    Graph theta_graph_only(tn, edges);
    ShadowGraph st = great_shadow(theta_graph_only);
    K33SearchResult res = k33_search(st.graph());
    if (res.status != K33SearchResult::Status::Found)
        throw std::logic_error("fallback search found no witness in S(theta)");

    auto back = [&](Vertex x) {
        return x < tn ? verts[static_cast<size_t>(x)] : verts[static_cast<size_t>(x - tn)] + sg.original_order();
    };
    K33Witness w = *res.witness;
    for (auto &x : w.delta1) x = back(x);
    for (auto &x : w.delta2) x = back(x);
    for (auto &p : w.paths)
        for (auto &x : p) x = back(x);
    return w;
}

} // namespace

K33Witness k33_from_theta(const ShadowGraph &sg, const ThetaSubdivision &theta) {
    std::string why;
    // the theta must live in the original part of the shadow host
    for (Vertex x : theta.vertices())
        if (x < 0 || x >= sg.original_order())
            throw std::invalid_argument("theta vertex outside the original graph");
    if (!theta.validates(sg.graph(), &why))
        throw std::invalid_argument("theta does not validate in the shadow host: " + why);

    const int l = theta.ell(), m = theta.m(), n = theta.n();
    const bool pe = l % 2 == 0;
    if (m % 2 != l % 2 || n % 2 != l % 2)
        throw std::invalid_argument("mixed theta parity; route odd cycles to k33_from_odd_cycle");

    K33Witness out;
    if (pe) {
        out = theta_case_even(sg, theta);
    } else if (l >= 3) {
        out = theta_case_odd(sg, theta);
    } else if (n >= 3) {
        out = theta_case_odd(sg, swap_sides(theta)); // theta is symmetric in its side paths
    } else {
        return theta_fallback_search(sg, theta); // theta(1, m, 1): printed paths do not instantiate
    }

    WitnessCheck check = validate_k33(sg.graph(), out);
    if (!check.ok) throw std::logic_error("theta witness failed validation: " + check.issue);
    return out;
}

namespace {

struct SearchState {
    const Graph &g;
    std::int64_t budget;
    bool exhausted = false;
    std::vector<char> used;   // internal vertices claimed by finished paths
    std::vector<char> branch; // current branch vertices
    K33Witness witness;

    explicit SearchState(const Graph &graph, std::int64_t bound)
        : g(graph), budget(bound), used(static_cast<size_t>(graph.order()), 0),
          branch(static_cast<size_t>(graph.order()), 0) {}

    bool pairs_still_connectable(int from_pair) {
        // every remaining pair must be reachable through free vertices
        for (int p = from_pair; p < 9; ++p) {
            Vertex s = witness.delta1[static_cast<size_t>(p / 3)];
            Vertex t = witness.delta2[static_cast<size_t>(p % 3)];
            std::vector<char> seen(static_cast<size_t>(g.order()), 0);
            std::queue<Vertex> q;
            q.push(s);
            seen[static_cast<size_t>(s)] = 1;
            bool found = false;
            while (!q.empty() && !found) {
                Vertex x = q.front();
                q.pop();
                if (--budget <= 0) {
                    exhausted = true;
                    return false;
                }
                for (Vertex y : g.neighbors(x)) {
                    if (y == t) {
                        found = true;
                        break;
                    }
                    if (seen[static_cast<size_t>(y)] || used[static_cast<size_t>(y)] ||
                        branch[static_cast<size_t>(y)])
                        continue;
                    seen[static_cast<size_t>(y)] = 1;
                    q.push(y);
                }
            }
            if (!found) return false;
        }
        return true;
    }

    bool route(int pair_idx) {
        if (exhausted) return false;
        if (pair_idx == 9) return true;
        Vertex s = witness.delta1[static_cast<size_t>(pair_idx / 3)];
        Vertex t = witness.delta2[static_cast<size_t>(pair_idx % 3)];
        std::vector<Vertex> path{s};
        std::vector<char> on_path(static_cast<size_t>(g.order()), 0);
        on_path[static_cast<size_t>(s)] = 1;
        return extend(pair_idx, t, path, on_path);
    }

    bool extend(int pair_idx, Vertex t, std::vector<Vertex> &path, std::vector<char> &on_path) {
        if (exhausted) return false;
        Vertex x = path.back();
        for (Vertex y : g.neighbors(x)) {
            if (--budget <= 0) {
                exhausted = true;
                return false;
            }
            if (y == t) {
                // claim internals, recurse into the next pair
                auto &slot = witness.paths[static_cast<size_t>(pair_idx)];
                slot = path;
                slot.push_back(t);
                for (size_t i = 1; i + 1 < slot.size(); ++i) used[static_cast<size_t>(slot[i])] = 1;
                if (pairs_still_connectable(pair_idx + 1) && route(pair_idx + 1)) return true;
                for (size_t i = 1; i + 1 < slot.size(); ++i) used[static_cast<size_t>(slot[i])] = 0;
                slot.clear();
                if (exhausted) return false;
                continue;
            }
            if (used[static_cast<size_t>(y)] || branch[static_cast<size_t>(y)] ||
                on_path[static_cast<size_t>(y)])
                continue;
            path.push_back(y);
            on_path[static_cast<size_t>(y)] = 1;
            if (extend(pair_idx, t, path, on_path)) return true;
            on_path[static_cast<size_t>(y)] = 0;
            path.pop_back();
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

K33SearchResult k33_search(const Graph &g, std::int64_t bound) {
    K33SearchResult result;
    const int n = g.order();
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 3) candidates.push_back(v);
    if (candidates.size() < 6) return result; // NotFound

    SearchState st(g, bound);
    const int c = static_cast<int>(candidates.size());
    // delta1 = {c[i1], c[i2], c[i3]}, delta2 drawn from the rest with
    // i1 < all of delta2's first pick to kill the side symmetry.
    for (int i1 = 0; i1 < c; ++i1)
        for (int i2 = i1 + 1; i2 < c; ++i2)
            for (int i3 = i2 + 1; i3 < c; ++i3) {
                std::vector<Vertex> rest;
                for (int j = i1 + 1; j < c; ++j)
                    if (j != i2 && j != i3) rest.push_back(candidates[static_cast<size_t>(j)]);
                const int r = static_cast<int>(rest.size());
                for (int j1 = 0; j1 < r; ++j1)
                    for (int j2 = j1 + 1; j2 < r; ++j2)
                        for (int j3 = j2 + 1; j3 < r; ++j3) {
                            st.witness = K33Witness{};
                            st.witness.delta1 = {candidates[static_cast<size_t>(i1)],
                                                 candidates[static_cast<size_t>(i2)],
                                                 candidates[static_cast<size_t>(i3)]};
                            st.witness.delta2 = {rest[static_cast<size_t>(j1)], rest[static_cast<size_t>(j2)],
                                                 rest[static_cast<size_t>(j3)]};
                            std::fill(st.branch.begin(), st.branch.end(), 0);
                            for (Vertex x : st.witness.delta1) st.branch[static_cast<size_t>(x)] = 1;
                            for (Vertex x : st.witness.delta2) st.branch[static_cast<size_t>(x)] = 1;
                            std::fill(st.used.begin(), st.used.end(), 0);
                            bool viable = st.pairs_still_connectable(0);
                            if (st.exhausted) {
                                result.status = K33SearchResult::Status::BoundExceeded;
                                return result;
                            }
                            if (!viable) continue;
                            if (st.route(0)) {
                                WitnessCheck check = validate_k33(g, st.witness);
                                if (!check.ok)
                                    throw std::logic_error("search produced invalid witness: " + check.issue);
                                result.status = K33SearchResult::Status::Found;
                                result.witness = st.witness;
                                return result;
                            }
                            if (st.exhausted) {
                                result.status = K33SearchResult::Status::BoundExceeded;
                                return result;
                            }
                        }
            }
    return result; // NotFound
}

} // namespace shadow
