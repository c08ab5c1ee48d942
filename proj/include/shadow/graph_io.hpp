#ifndef SHADOW_GRAPH_IO_HPP
#define SHADOW_GRAPH_IO_HPP

#include <string>
#include <vector>

#include "shadow/graph.hpp"

namespace shadow {

/// Edge-list text: header line `n=<order>`, one `u v` pair per line,
/// `#` starts a comment, blank lines ignored.
Graph parse_edge_list(const std::string &text);
std::string to_edge_list(const Graph &g);

/// JSON form { "n": int, "edges": [[u,v],...] }.
Graph parse_graph_json(const std::string &text);
std::string to_graph_json(const Graph &g);

/// graph6, short and long order encodings.
Graph parse_graph6(const std::string &line);
std::string to_graph6(const Graph &g);
std::vector<Graph> parse_graph6_file(const std::string &text);

/// Dispatches on content: JSON when the first non-space byte is '{',
/// edge list otherwise.
Graph parse_graph_auto(const std::string &text);

} // namespace shadow

#endif
