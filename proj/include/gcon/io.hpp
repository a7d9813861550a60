#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gcon/graph.hpp"

namespace gcon {

/// Everything a graph file can carry. Reduction outputs add comment lines
/// (`# reduction`, `# threshold`, `# role <id> <label>`) which are read back
/// here; other `#` lines are ignored.
struct GraphDocument {
  Graph graph;
  std::optional<VertexSet> terminals;
  std::optional<int> threshold;
  std::string reduction;
  std::map<Vertex, std::string> roles;
};

/// Line-oriented graph format:
///
///     graph <n> <m>
///     e <u> <v>            (m lines, 0 <= u < v < n)
///     parts <p0> ... <pn-1> (optional, each in {0,1,2})
///     set <k> <v1> ... <vk> (optional terminal set)
///
/// Throws ParseError naming the offending line.
GraphDocument parse_graph_document(std::string_view text);
Graph parse_graph(std::string_view text);

/// Canonical form: edges sorted, then parts and set lines.
std::string serialize_graph(const Graph& g, const std::optional<VertexSet>& terminals = std::nullopt);
std::string serialize_document(const GraphDocument& doc);

/// `3dm <n> <m>` then m lines `t <u> <v> <w>`, 0-based.
ThreeDMInstance parse_3dm(std::string_view text);
std::string serialize_3dm(const ThreeDMInstance& inst);

/// DIMACS cnf restricted to clauses of exactly three literals.
CnfFormula parse_cnf(std::string_view text);
std::string serialize_cnf(const CnfFormula& phi);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace gcon
