#pragma once

#include <functional>
#include <vector>

#include "gcon/bits.hpp"
#include "gcon/graph.hpp"

namespace gcon::detail {

/// Bitset view of a Graph for the exhaustive kernels. Vertex and edge ids
/// match the source graph. Throws GuardError above kMaxSearchBits.
struct SearchGraph {
  int n = 0;
  int m = 0;
  std::vector<Edge> ends;
  std::vector<Mask> adj;  // neighbour vertices
  std::vector<Mask> inc;  // incident edges
  Mask vertices;
  Mask edges;

  explicit SearchGraph(const Graph& g);

  int other(int e, int v) const { return ends[e].u == v ? ends[e].v : ends[e].u; }
  Mask endpoints(int e) const {
    Mask out;
    out.set(ends[e].u);
    out.set(ends[e].v);
    return out;
  }
  /// Vertices reachable from `from` using only edges in `allowed`.
  Mask reach(const Mask& from, const Mask& allowed) const;
  /// Union of the incident-edge masks over `vs`.
  Mask incident(const Mask& vs) const;
  /// Edges with both endpoints in `vs`.
  Mask induced_edges(const Mask& vs) const;
};

Mask to_mask(const VertexSet& s);

std::vector<Edge> edge_list(const SearchGraph& g, const Mask& edges);
SteinerTree to_tree(const SearchGraph& g, const Mask& edges, Vertex lone = -1);

/// Spanning tree of the component of `root` in (vertices, allowed edges),
/// pruned until every leaf is a terminal.
Mask pruned_spanning_tree(const SearchGraph& g, int root, const Mask& allowed, const Mask& terminals);

/// Repeatedly removes leaves that are not terminals.
Mask prune_to_terminals(const SearchGraph& g, Mask tree_edges, const Mask& terminals);

/// Visitor over minimal S-trees: trees containing every terminal whose leaves
/// are all terminals. Returns false to stop the enumeration.
using TreeVisitor = std::function<bool(const Mask& tree_edges, const Mask& tree_vertices)>;

/// Enumerates each minimal S-tree inside `residual` exactly once. With
/// `forced_edge >= 0`, only trees containing that edge (which must touch a
/// terminal) are produced. Returns false if the visitor stopped early.
bool visit_minimal_trees(const SearchGraph& g, const Mask& terminals, const Mask& residual, int forced_edge,
                         const TreeVisitor& visit);

}  // namespace gcon::detail
