#include "shadow/graph_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace shadow {

Graph parse_edge_list(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int order = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first.rfind("n=", 0) == 0) {
            try {
                order = std::stoi(first.substr(2));
            } catch (const std::exception &) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad order header");
            }
            continue;
        }
        Vertex u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception &) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected vertex id");
        }
        if (!(ls >> v)) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing second vertex");
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        edges.emplace_back(u, v);
    }
    if (order < 0) throw std::invalid_argument("missing n=<order> header");
    return Graph(order, edges);
}

std::string to_edge_list(const Graph &g) {
    std::ostringstream out;
    out << "n=" << g.order() << "\n";
    for (const Edge &e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

Graph parse_graph_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph JSON needs integer field 'n'");
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (j.contains("edges")) {
        for (const auto &pair : j["edges"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("each edge must be a two-element array");
            edges.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
        }
    }
    return Graph(j["n"].get<int>(), edges);
}

std::string to_graph_json(const Graph &g) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge &e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j.dump();
}

namespace {
constexpr int kG6Base = 63;
}

Graph parse_graph6(const std::string &line) {
    size_t pos = 0;
    if (line.empty()) throw std::invalid_argument("empty graph6 line");
    long long n;
    if (line[pos] == 126) { // '~' long form
        if (line.size() < 4) throw std::invalid_argument("truncated graph6 order");
        if (line[1] == 126) throw std::invalid_argument("graph6 orders above 2^18 unsupported");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[static_cast<size_t>(i)] - kG6Base);
        pos = 4;
    } else {
        n = line[pos] - kG6Base;
        pos = 1;
    }
    if (n < 0 || n > 100000) throw std::invalid_argument("graph6 order out of range");

    std::vector<std::pair<Vertex, Vertex>> edges;
    int bit = 0;
    int current = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (bit == 0) {
                if (pos >= line.size()) throw std::invalid_argument("graph6 data too short");
                current = line[pos++] - kG6Base;
                if (current < 0 || current > 63) throw std::invalid_argument("invalid graph6 byte");
                bit = 6;
            }
            --bit;
            if (current & (1 << bit)) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph &g) {
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Base));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Base));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Base));
        out.push_back(static_cast<char>((n & 63) + kG6Base));
    }
    int bit = 5, current = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) current |= 1 << bit;
            if (bit == 0) {
                out.push_back(static_cast<char>(current + kG6Base));
                current = 0;
                bit = 6;
            }
            --bit;
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(current + kG6Base));
    return out;
}

std::vector<Graph> parse_graph6_file(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Graph> out;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

Graph parse_graph_auto(const std::string &text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    return parse_edge_list(text);
}

} // namespace shadow
