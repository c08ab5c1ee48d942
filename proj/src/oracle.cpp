#include "shadow/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "shadow/constructions.hpp"
#include "shadow/graph_io.hpp"
#include "shadow/recognition.hpp"

namespace shadow {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph &g) {
    BoostGraph bg(static_cast<size_t>(g.order()));
    for (const Edge &e : g.edges()) boost::add_edge(static_cast<size_t>(e.u), static_cast<size_t>(e.v), bg);
    auto index = boost::get(boost::edge_index, bg);
    int next = 0;
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) boost::put(index, *ei, next++);
    return bg;
}

} // namespace

bool is_planar(const Graph &g) {
    if (g.order() <= 4) return true;
    if (g.size() > 3 * g.order() - 6) return false; // Euler bound short-circuit
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

// Reads a subdivision off a Kuratowski edge set: branch vertices carry
// degree >= 3, everything else is interior to exactly one path.
struct SubdivisionPaths {
    std::vector<Vertex> branches;
    std::vector<std::vector<Vertex>> paths;
};

SubdivisionPaths walk_subdivision(const std::vector<Edge> &edges) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge &e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto &[_, row] : adj) std::sort(row.begin(), row.end());

    SubdivisionPaths out;
    for (auto &[v, row] : adj)
        if (row.size() >= 3) out.branches.push_back(v);

    std::set<std::pair<Vertex, Vertex>> walked; // (branch, first step) already traced
    for (Vertex b : out.branches) {
        for (Vertex first : adj[b]) {
            if (walked.count({b, first})) continue;
            std::vector<Vertex> path{b, first};
            Vertex prev = b, cur = first;
            while (adj[cur].size() == 2) {
                Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                path.push_back(cur);
            }
            walked.insert({b, first});
            walked.insert({cur, prev});
            out.paths.push_back(std::move(path));
        }
    }
    return out;
}

bool check_path_in_host(const Graph &g, const std::vector<Vertex> &p) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

K33Witness assemble_k33(const Graph &g, const SubdivisionPaths &sub) {
    if (sub.branches.size() != 6 || sub.paths.size() != 9)
        throw std::logic_error("extracted subgraph is not a K3,3 subdivision");

    // 2-color the branch graph through the paths
    std::map<Vertex, int> side;
    std::map<Vertex, std::vector<Vertex>> branch_adj;
    for (const auto &p : sub.paths) {
        branch_adj[p.front()].push_back(p.back());
        branch_adj[p.back()].push_back(p.front());
    }
    std::vector<Vertex> queue{sub.branches.front()};
    side[sub.branches.front()] = 0;
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Vertex w : branch_adj[v]) {
            if (!side.count(w)) {
                side[w] = 1 - side[v];
                queue.push_back(w);
            } else if (side[w] == side[v]) {
                throw std::logic_error("branch graph of extracted subdivision is not bipartite");
            }
        }
    }

    K33Witness w;
    std::vector<Vertex> s0, s1;
    for (Vertex b : sub.branches) (side[b] == 0 ? s0 : s1).push_back(b);
    if (s0.size() != 3 || s1.size() != 3)
        throw std::logic_error("branch sides are not triples");
    std::copy(s0.begin(), s0.end(), w.delta1.begin());
    std::copy(s1.begin(), s1.end(), w.delta2.begin());

    for (const auto &p : sub.paths) {
        auto i1 = std::find(w.delta1.begin(), w.delta1.end(), p.front());
        std::vector<Vertex> oriented = p;
        if (i1 == w.delta1.end()) {
            std::reverse(oriented.begin(), oriented.end());
            i1 = std::find(w.delta1.begin(), w.delta1.end(), oriented.front());
        }
        auto i2 = std::find(w.delta2.begin(), w.delta2.end(), oriented.back());
        if (i1 == w.delta1.end() || i2 == w.delta2.end())
            throw std::logic_error("path endpoints straddle one side");
        if (!check_path_in_host(g, oriented)) throw std::logic_error("extracted path not in host");
        w.path(static_cast<int>(i1 - w.delta1.begin()), static_cast<int>(i2 - w.delta2.begin())) = oriented;
    }
    for (const auto &p : w.paths)
        if (p.empty()) throw std::logic_error("missing branch pair in extracted subdivision");
    return w;
}

K5Subdivision assemble_k5(const Graph &g, const SubdivisionPaths &sub) {
    if (sub.branches.size() != 5 || sub.paths.size() != 10)
        throw std::logic_error("extracted subgraph is not a K5 subdivision");
    K5Subdivision out;
    std::copy(sub.branches.begin(), sub.branches.end(), out.branch.begin());
    out.paths = sub.paths;
    for (const auto &p : out.paths)
        if (!check_path_in_host(g, p)) throw std::logic_error("extracted path not in host");
    return out;
}

} // namespace

std::optional<KuratowskiWitness> kuratowski_witness(const Graph &g) {
    if (is_planar(g)) return std::nullopt;

    BoostGraph bg = to_boost(g);
    std::vector<BoostGraph::edge_descriptor> kur;
    boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    std::vector<Edge> edges;
    edges.reserve(kur.size());
    for (const auto &ed : kur)
        edges.emplace_back(static_cast<Vertex>(boost::source(ed, bg)),
                           static_cast<Vertex>(boost::target(ed, bg)));

    SubdivisionPaths sub = walk_subdivision(edges);
    bool has_deg4 = false;
    {
        std::map<Vertex, int> deg;
        for (const Edge &e : edges) {
            ++deg[e.u];
            ++deg[e.v];
        }
        for (auto &[_, d] : deg)
            if (d >= 4) has_deg4 = true;
    }
    if (has_deg4) return KuratowskiWitness{assemble_k5(g, sub)};
    return KuratowskiWitness{assemble_k33(g, sub)};
}

std::uint64_t canonical_mask(const Graph &g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_mask supports order <= 11");
    auto pair_bit = [n](int i, int j) { // i < j
        return static_cast<std::uint64_t>(1)
               << (i * n - i * (i + 1) / 2 + (j - i - 1));
    };
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~static_cast<std::uint64_t>(0);
    do {
        std::uint64_t mask = 0;
        for (const Edge &e : g.edges()) {
            int a = perm[static_cast<size_t>(e.u)], b = perm[static_cast<size_t>(e.v)];
            if (a > b) std::swap(a, b);
            mask |= pair_bit(a, b);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1) return {};
    if (n == 1) return {Graph(1, {})};

    std::vector<Graph> prev = connected_graphs(n - 1);
    std::vector<Graph> out;
    std::set<std::uint64_t> seen;
    for (const Graph &h : prev) {
        // attach vertex n-1 to every nonempty subset of the parent
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (const Edge &e : h.edges()) edges.emplace_back(e.u, e.v);
            for (int b = 0; b < n - 1; ++b)
                if (mask & (1u << b)) edges.emplace_back(b, n - 1);
            Graph candidate(n, edges);
            std::uint64_t canon = canonical_mask(candidate);
            if (seen.insert(canon).second) out.push_back(std::move(candidate));
        }
    }
    return out;
}

namespace {

void sweep_chunk(const std::vector<Graph> &graphs, size_t begin, size_t end,
                 int *bipartite_cactus, int *planar_shadow, int *edge_violations,
                 std::vector<std::string> *discrepancies) {
    for (size_t i = begin; i < end; ++i) {
        const Graph &g = graphs[i];
        ShadowGraph sg = great_shadow(g);
        if (sg.graph().size() != 3 * g.size() + g.order()) ++*edge_violations;
        bool cactus = is_bipartite_cactus(classify(g));
        bool planar = is_planar(sg.graph());
        if (cactus) ++*bipartite_cactus;
        if (planar) ++*planar_shadow;
        if (cactus != planar) discrepancies->push_back(to_graph6(g));
    }
}

SweepReport run_sweep_on(const std::vector<std::vector<Graph>> &levels, int max_n, int workers) {
    SweepReport report;
    report.max_n = max_n;
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 2;
        workers = std::min(workers, 8);
    }

    for (const auto &graphs : levels) {
        if (graphs.empty()) continue;
        SweepReport::PerOrder row;
        row.n = graphs.front().order();
        row.total = static_cast<int>(graphs.size());

        size_t w = std::min<size_t>(static_cast<size_t>(workers), graphs.size());
        std::vector<int> bc(w, 0), ps(w, 0), ev(w, 0);
        std::vector<std::vector<std::string>> disc(w);
        std::vector<std::thread> pool;
        size_t chunk = (graphs.size() + w - 1) / w;
        for (size_t t = 0; t < w; ++t) {
            size_t lo = t * chunk, hi = std::min(graphs.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(sweep_chunk, std::cref(graphs), lo, hi, &bc[t], &ps[t], &ev[t], &disc[t]);
        }
        for (auto &th : pool) th.join();
        for (size_t t = 0; t < w; ++t) {
            row.bipartite_cactus += bc[t];
            row.planar_shadow += ps[t];
            report.edge_law_violations += ev[t];
            for (auto &d : disc[t]) report.discrepancies.push_back(std::move(d));
        }
        report.per_order.push_back(row);
    }
    std::sort(report.discrepancies.begin(), report.discrepancies.end());
    return report;
}

} // namespace

SweepReport equivalence_sweep(int max_n, int workers, const std::vector<Graph> *external_stream) {
    if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");

    std::vector<std::vector<Graph>> levels;
    if (external_stream) {
        std::map<int, std::vector<Graph>> by_order;
        for (const Graph &g : *external_stream)
            if (g.order() <= max_n) by_order[g.order()].push_back(g);
        for (auto &[_, v] : by_order) levels.push_back(std::move(v));
    } else {
        for (int n = 1; n <= max_n; ++n) levels.push_back(connected_graphs(n));
    }
    return run_sweep_on(levels, max_n, workers);
}

SweepReport random_equivalence_check(int count, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> graphs;
    graphs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::uniform_int_distribution<int> nd(2, std::max(2, max_n));
        int n = nd(rng);
        std::uniform_real_distribution<double> pd(0.0, 1.0);
        double p = std::min(1.0, (1.2 + 2.0 * pd(rng)) / n);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (pd(rng) < p) edges.emplace_back(u, v);
        graphs.emplace_back(n, edges);
    }
    std::vector<std::vector<Graph>> levels{std::move(graphs)};
    SweepReport rep = run_sweep_on(levels, max_n, 0);
    rep.per_order.clear(); // orders are mixed within the single batch
    SweepReport::PerOrder row;
    row.n = max_n;
    row.total = count;
    rep.per_order.push_back(row);
    return rep;
}

} // namespace shadow
