#ifndef SHADOW_ORACLE_HPP
#define SHADOW_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shadow/graph.hpp"
#include "shadow/witness.hpp"

namespace shadow {

/// Independent planarity decision (Boyer-Myrvold). Never touches the
/// recognition, witness, or embedding code paths.
bool is_planar(const Graph &g);

/// A located K5 subdivision: five branch vertices, ten paths.
struct K5Subdivision {
    std::array<Vertex, 5> branch{};
    std::vector<std::vector<Vertex>> paths; // 10, endpoint-to-endpoint
};

using KuratowskiWitness = std::variant<K33Witness, K5Subdivision>;

/// Extracts a Kuratowski subdivision from a non-planar graph; empty for
/// planar input.
std::optional<KuratowskiWitness> kuratowski_witness(const Graph &g);

/// All connected graphs on exactly n vertices up to isomorphism,
/// by incremental vertex augmentation with canonical-form dedup.
/// Practical for n <= 8.
std::vector<Graph> connected_graphs(int n);

/// Canonical form used by the enumerator: minimum adjacency bitmask over
/// all vertex permutations. Requires order <= 11 (bitmask in 64 bits).
std::uint64_t canonical_mask(const Graph &g);

struct SweepReport {
    struct PerOrder {
        int n = 0;
        int total = 0;
        int bipartite_cactus = 0;
        int planar_shadow = 0;
    };
    int max_n = 0;
    std::vector<PerOrder> per_order;
    std::vector<std::string> discrepancies; // offending graphs, graph6-encoded
    int edge_law_violations = 0;            // |E(S(g))| != 3m+n occurrences
    bool ok() const { return discrepancies.empty() && edge_law_violations == 0; }
};

/// Checks Theorem equivalence over every connected graph with at most
/// max_n vertices: oracle planarity of S(g) must equal the
/// bipartite-cactus verdict. Work is split across threads; the report
/// merge is deterministic. An optional graph6 stream replaces the
/// built-in enumerator.
SweepReport equivalence_sweep(int max_n, int workers = 0,
                              const std::vector<Graph> *external_stream = nullptr);

/// Same equivalence assertion on seeded random graphs (possibly
/// disconnected); extends coverage past the exhaustive range.
SweepReport random_equivalence_check(int count, int max_n, std::uint64_t seed);

} // namespace shadow

#endif
