#pragma once

#include "ikcert/graph.hpp"

#include <string>
#include <string_view>

namespace ikcert {

/// Result of reading an edge list. Duplicate edges (either orientation) are
/// collapsed and counted rather than rejected.
struct ParsedGraph {
    Graph graph;
    int duplicate_edges = 0;
};

/// Line-oriented edge list: one "u v" pair per line, '#' starts a comment,
/// and an optional "vertices: a b c ..." line declares isolated vertices.
ParsedGraph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list. Edges are sorted; a "vertices:" header is
/// written only when the graph has isolated vertices.
std::string write_edge_list(const Graph& g);

/// graph6 decoding. Vertices are labelled 1..n. An optional ">>graph6<<"
/// header and trailing newline are accepted.
Graph parse_graph6(std::string_view text);

/// graph6 encoding of g with its vertices taken in increasing label order.
std::string write_graph6(const Graph& g);

/// True when text looks like a single graph6 record rather than an edge list.
bool looks_like_graph6(std::string_view text);

} // namespace ikcert
