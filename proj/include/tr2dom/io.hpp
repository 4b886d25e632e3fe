#pragma once

#include "tr2dom/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tr2dom {

enum class GraphFormat { graph6, edgelist };

auto parse_format(const std::string & name) -> GraphFormat;

/// Standard graph6 encoding without header or newline.
auto to_graph6(const Graph & g) -> std::string;
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
auto from_graph6(std::string_view text) -> Graph;

/// First line "n m", then one "u v" line per edge (sorted), trailing newline.
auto to_edge_list(const Graph & g) -> std::string;
/// "#" starts a comment; blank lines are ignored. Vertices are 0-based.
auto from_edge_list(std::string_view text) -> Graph;

auto write_graph(const Graph & g, GraphFormat format) -> std::string;
/// Without an explicit format, text whose first data line contains
/// whitespace-separated tokens is read as an edge list, otherwise graph6.
auto read_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt) -> Graph;

/// 64-bit FNV-1a of the graph6 encoding, as 16 hex digits.
auto graph_digest(const Graph & g) -> std::string;

}
