#include "shadow/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "shadow/recognition.hpp"

namespace shadow {

namespace {
const char *kInterruptNote =
    "Edges from each intermediate vertex v' to a central interrupt vertex are omitted from the "
    "expansion; one interrupt pin per intermediate vertex realizes the same circuit.";
}

Graph KeyboardMatrix::underlying() const {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const Switch &s : switches) pairs.emplace(std::min(s.anode, s.cathode), std::max(s.anode, s.cathode));
    std::vector<std::pair<Vertex, Vertex>> edges(pairs.begin(), pairs.end());
    return Graph(pins, edges);
}

KeyboardMatrix parse_matrix(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    KeyboardMatrix k;
    bool have_pins = false;
    std::set<std::pair<Vertex, Vertex>> directed_seen;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        auto fail = [&](const std::string &msg) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
        };
        if (first.rfind("pins=", 0) == 0) {
            try {
                k.pins = std::stoi(first.substr(5));
            } catch (const std::exception &) {
                fail("bad pins header");
            }
            if (k.pins < 1) fail("pin count must be positive");
            have_pins = true;
            continue;
        }
        if (!have_pins) fail("switch listed before pins=<n> header");

        KeyboardMatrix::Switch sw;
        std::string arrow;
        try {
            sw.anode = std::stoi(first);
        } catch (const std::exception &) {
            fail("expected anode pin number");
        }
        if (!(ls >> arrow) || arrow != "->") fail("expected '->' after anode");
        if (!(ls >> sw.cathode)) fail("expected cathode pin number");
        std::getline(ls, sw.label);
        // trim the optional label, tolerating surrounding brackets
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t[");
            size_t e = s.find_last_not_of(" \t]\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        sw.label = trim(sw.label);

        if (sw.anode < 0 || sw.anode >= k.pins) fail("anode pin out of range");
        if (sw.cathode < 0 || sw.cathode >= k.pins) fail("cathode pin out of range");
        if (sw.anode == sw.cathode) fail("switch endpoints coincide");
        if (!directed_seen.emplace(sw.anode, sw.cathode).second)
            fail("duplicate switch direction on pin pair");
        k.switches.push_back(std::move(sw));
    }
    if (!have_pins) throw std::invalid_argument("missing pins=<n> header");
    return k;
}

ShadowGraph interrupt_expansion(const KeyboardMatrix &k) { return great_shadow(k.underlying()); }

RoutabilityReport routability_report(const KeyboardMatrix &k) {
    RoutabilityReport report;
    report.pins = k.pins;
    report.switch_count = static_cast<int>(k.switches.size());
    long long cap = static_cast<long long>(k.pins) * (k.pins - 1);
    report.switch_density = cap > 0 ? static_cast<double>(report.switch_count) / static_cast<double>(cap) : 0.0;
    report.interrupt_note = kInterruptNote;

    Graph g = k.underlying();
    ShadowGraph sg = interrupt_expansion(k);
    Verdict verdict = classify(g);

    if (is_bipartite_cactus(verdict)) {
        report.routable = true;
        report.embedding = embed_shadow(g, verdict);
        return report;
    }
    report.routable = false;
    if (const auto *nb = std::get_if<NotBipartiteCert>(&verdict)) {
        report.witness = k33_from_odd_cycle(sg, nb->odd_cycle);
    } else {
        report.witness = k33_from_theta(sg, std::get<NotCactusCert>(verdict).theta);
    }
    std::set<Vertex> pins_in_witness;
    for (const auto &p : report.witness->paths)
        for (Vertex x : p) pins_in_witness.insert(x < k.pins ? x : x - k.pins);
    report.offending_pins.assign(pins_in_witness.begin(), pins_in_witness.end());
    return report;
}

} // namespace shadow
