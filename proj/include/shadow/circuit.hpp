#ifndef SHADOW_CIRCUIT_HPP
#define SHADOW_CIRCUIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "shadow/constructions.hpp"
#include "shadow/embedding.hpp"
#include "shadow/graph.hpp"
#include "shadow/witness.hpp"

namespace shadow {

/// A diode-and-switch keyboard wiring: n microcontroller pins, each
/// switch a directed (anode, cathode) pin pair. At most one switch per
/// direction per pin pair, so at most n(n-1) switches in total.
struct KeyboardMatrix {
    struct Switch {
        Vertex anode = -1;
        Vertex cathode = -1;
        std::string label;
    };

    int pins = 0;
    std::vector<Switch> switches;

    /// Underlying simple graph: one edge per pin pair carrying at least
    /// one switch. Diode direction does not affect routability.
    Graph underlying() const;
};

/// Text format: header `pins=<n>`, then one `anode -> cathode [label]`
/// per line; `#` comments allowed.
KeyboardMatrix parse_matrix(const std::string &text);

/// The interrupt-pin expansion of the wiring, which is exactly the great
/// shadow of the underlying graph: each pin v gains an intermediate
/// vertex v' taking over the switched edges toward v, with a plain diode
/// from v' to v.
ShadowGraph interrupt_expansion(const KeyboardMatrix &k);

struct RoutabilityReport {
    bool routable = false;
    int pins = 0;
    int switch_count = 0;
    double switch_density = 0.0; // switches / n(n-1)
    std::string interrupt_note;
    // routable: a certified embedding of the expansion (and an SVG on request)
    std::optional<RotationSystem> embedding;
    // not routable: a K3,3 subdivision in the expansion
    std::optional<K33Witness> witness;
    std::vector<Vertex> offending_pins; // original pins appearing in the witness
};

/// Single-sided routability of the interrupt-expanded circuit: routable
/// exactly when the underlying wiring is a bipartite cactus.
RoutabilityReport routability_report(const KeyboardMatrix &k);

} // namespace shadow

#endif
