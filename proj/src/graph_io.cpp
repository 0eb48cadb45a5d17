#include "maxspread/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace maxspread {

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw ParseError("edge list: header must be \"n m\" with non-negative integers");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: endpoint out of range on edge " + std::to_string(i));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw ParseError("edge list: trailing content after edges");
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string to_graph_json(const Graph& g) {
  std::ostringstream out;
  out << "{\"n\":" << g.n() << ",\"edges\":[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : ",") << '[' << u << ',' << v << ']';
    first = false;
  }
  out << "]}";
  return out.str();
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array()) {
    throw ParseError("graph json: expected {\"n\": int, \"edges\": [[u,v],...]}");
  }
  const auto n = j["n"].get<long long>();
  if (n < 0) throw ParseError("graph json: n must be non-negative");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("graph json: each edge must be a pair of integers");
    }
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("graph json: endpoint out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
}

Graph parse_graph(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace maxspread
