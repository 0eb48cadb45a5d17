#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "maxspread/graph.hpp"

namespace maxspread {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-list text: "n m" then m lines "u v" (0-based, u < v, sorted).
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// JSON: {"n":5,"edges":[[0,1],[0,2]]} on one line, edges sorted.
std::string to_graph_json(const Graph& g);
Graph parse_graph_json(std::string_view text);

/// Picks the JSON reader when the first non-blank character is '{'.
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::string& path);

}  // namespace maxspread
