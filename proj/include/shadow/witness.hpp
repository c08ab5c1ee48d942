#ifndef SHADOW_WITNESS_HPP
#define SHADOW_WITNESS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shadow/constructions.hpp"
#include "shadow/graph.hpp"
#include "shadow/theta.hpp"

namespace shadow {

/// A located K3,3 subdivision: two branch triples and nine internally
/// disjoint paths, paths[3*i+j] running from delta1[i] to delta2[j].
/// A length-2 path is a direct edge.
struct K33Witness {
    std::array<Vertex, 3> delta1{};
    std::array<Vertex, 3> delta2{};
    std::array<std::vector<Vertex>, 9> paths;

    std::vector<Vertex> &path(int i, int j) { return paths[static_cast<size_t>(3 * i + j)]; }
    const std::vector<Vertex> &path(int i, int j) const { return paths[static_cast<size_t>(3 * i + j)]; }
};

struct WitnessCheck {
    bool ok = false;
    std::string issue; // first violated invariant when not ok
};

WitnessCheck validate_k33(const Graph &host, const K33Witness &w);

/// K3,3 subdivision in S(C) from an odd cycle C of the original graph,
/// per the alternating-path construction. Throws on even or short input.
K33Witness k33_from_odd_cycle(const ShadowGraph &sg, const CyclePath &c);

/// K3,3 subdivision in S(theta) for a theta located in the original
/// graph. Parities of (l, m, n) must agree (mixed parity means an odd
/// cycle exists and belongs to the other construction). The all-odd case
/// with both side paths of length one falls back to exhaustive search on
/// S(theta).
K33Witness k33_from_theta(const ShadowGraph &sg, const ThetaSubdivision &theta);

/// Exhaustive search for a K3,3 subdivision, deterministic in
/// lexicographic branch order. Bound counts path-extension steps.
struct K33SearchResult {
    enum class Status { Found, NotFound, BoundExceeded };
    Status status = Status::NotFound;
    std::optional<K33Witness> witness;
};

K33SearchResult k33_search(const Graph &g, std::int64_t bound = 20'000'000);

} // namespace shadow

#endif
