#pragma once

#include <optional>

#include "gcon/graph.hpp"

namespace gcon {

/// One vertex per edge of g, in g's edge-list order; two are adjacent when
/// the edges share an endpoint.
Graph line_graph(const Graph& g);

/// Connectivity of g, or of the subgraph induced by `within`. The empty graph
/// and a single vertex count as connected.
bool is_connected(const Graph& g, const std::optional<VertexSet>& within = std::nullopt);

/// True when every vertex of s lies in one component of g.
bool same_component(const Graph& g, const VertexSet& s);

/// Component id per vertex, numbered in order of smallest member.
std::vector<int> components(const Graph& g);

}  // namespace gcon
