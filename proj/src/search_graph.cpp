#include "gcon/detail/search_graph.hpp"

#include "gcon/errors.hpp"

namespace gcon::detail {

SearchGraph::SearchGraph(const Graph& g) : n(g.order()), m(g.size()), ends(g.edges()) {
  if (n > static_cast<int>(kMaxSearchBits) || m > static_cast<int>(kMaxSearchBits)) {
    throw GuardError("exhaustive search supports at most " + std::to_string(kMaxSearchBits) +
                     " vertices and edges (graph has " + std::to_string(n) + " and " + std::to_string(m) + ")");
  }
  adj.assign(n, Mask{});
  inc.assign(n, Mask{});
  for (int v = 0; v < n; ++v) vertices.set(v);
  for (int e = 0; e < m; ++e) {
    const Edge& d = ends[e];
    adj[d.u].set(d.v);
    adj[d.v].set(d.u);
    inc[d.u].set(e);
    inc[d.v].set(e);
    edges.set(e);
  }
}

Mask SearchGraph::reach(const Mask& from, const Mask& allowed) const {
  Mask seen = from;
  Mask frontier = from;
  while (frontier.any()) {
    Mask next;
    for_each_bit(frontier, [&](std::size_t v) {
      for_each_bit(inc[v] & allowed, [&](std::size_t e) { next.set(other(static_cast<int>(e), static_cast<int>(v))); });
    });
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

Mask SearchGraph::incident(const Mask& vs) const {
  Mask out;
  for_each_bit(vs, [&](std::size_t v) { out |= inc[v]; });
  return out;
}

Mask SearchGraph::induced_edges(const Mask& vs) const {
  Mask out;
  for_each_bit(incident(vs), [&](std::size_t e) {
    if (vs.test(ends[e].u) && vs.test(ends[e].v)) out.set(e);
  });
  return out;
}

Mask to_mask(const VertexSet& s) {
  Mask out;
  for (Vertex v : s) out.set(v);
  return out;
}

std::vector<Edge> edge_list(const SearchGraph& g, const Mask& edges) {
  std::vector<Edge> out;
  for_each_bit(edges, [&](std::size_t e) { out.push_back(g.ends[e]); });
  return out;
}

SteinerTree to_tree(const SearchGraph& g, const Mask& edges, Vertex lone) {
  if (edges.none() && lone >= 0) return SteinerTree(VertexSet{lone}, {});
  return SteinerTree(edge_list(g, edges));
}

Mask prune_to_terminals(const SearchGraph& g, Mask tree_edges, const Mask& terminals) {
  bool changed = true;
  while (changed) {
    changed = false;
    Mask touched;
    for_each_bit(tree_edges, [&](std::size_t e) {
      touched.set(g.ends[e].u);
      touched.set(g.ends[e].v);
    });
    for_each_bit(touched & ~terminals, [&](std::size_t v) {
      Mask at = g.inc[v] & tree_edges;
      if (at.count() == 1) {
        tree_edges &= ~at;
        changed = true;
      }
    });
  }
  return tree_edges;
}

Mask pruned_spanning_tree(const SearchGraph& g, int root, const Mask& allowed, const Mask& terminals) {
  Mask seen;
  seen.set(root);
  Mask frontier = seen;
  Mask tree;
  while (frontier.any()) {
    Mask next;
    for_each_bit(frontier, [&](std::size_t v) {
      for_each_bit(g.inc[v] & allowed, [&](std::size_t e) {
        int w = g.other(static_cast<int>(e), static_cast<int>(v));
        if (!seen.test(w)) {
          seen.set(w);
          next.set(w);
          tree.set(e);
        }
      });
    });
    frontier = next;
  }
  return prune_to_terminals(g, tree, terminals);
}

namespace {

struct GrowState {
  Mask tree_vertices;
  Mask tree_edges;
  Mask banned;
  Mask touch;  // edges incident to the tree
  Mask inner;  // edges with both ends in the tree
};

class TreeGrower {
 public:
  TreeGrower(const SearchGraph& g, const Mask& terminals, const Mask& residual, const TreeVisitor& visit)
      : g_(g), terminals_(terminals), residual_(residual), visit_(visit) {}

  bool grow(const GrowState& s) {
    if ((terminals_ & ~s.tree_vertices).none()) {
      bool pendant = false;
      for_each_bit(s.tree_vertices & ~terminals_, [&](std::size_t v) {
        if ((g_.inc[v] & s.tree_edges).count() == 1) pendant = true;
      });
      return pendant || visit_(s.tree_edges, s.tree_vertices);
    }

    const Mask avail = residual_ & ~s.banned & ~s.tree_edges;
    const Mask boundary = s.touch & ~s.inner & avail;

    // A non-terminal leaf must be extended; take its lowest boundary edge.
    int chosen = -1;
    bool dead = false;
    for_each_bit(s.tree_vertices & ~terminals_, [&](std::size_t v) {
      if (dead || (g_.inc[v] & s.tree_edges).count() != 1) return;
      Mask out = g_.inc[v] & boundary;
      if (out.none()) {
        dead = true;
      } else if (chosen < 0) {
        chosen = static_cast<int>(first_bit(out));
      }
    });
    if (dead) return true;

    if ((terminals_ & ~g_.reach(s.tree_vertices, avail)).any()) return true;

    if (chosen < 0) {
      std::size_t b = first_bit(boundary);
      if (!has_bit(b)) return true;
      chosen = static_cast<int>(b);
    }
    const Edge& e = g_.ends[chosen];
    const int outside = s.tree_vertices.test(e.u) ? e.v : e.u;

    GrowState with = s;
    with.tree_vertices.set(outside);
    with.tree_edges.set(chosen);
    with.inner |= g_.inc[outside] & s.touch;
    with.touch |= g_.inc[outside];
    if (!grow(with)) return false;

    GrowState without = s;
    without.banned.set(chosen);
    return grow(without);
  }

 private:
  const SearchGraph& g_;
  Mask terminals_;
  Mask residual_;
  const TreeVisitor& visit_;
};

}  // namespace

bool visit_minimal_trees(const SearchGraph& g, const Mask& terminals, const Mask& residual, int forced_edge,
                         const TreeVisitor& visit) {
  if (terminals.count() < 2) return true;
  GrowState start;
  if (forced_edge >= 0) {
    if (!residual.test(forced_edge)) return true;
    start.tree_vertices = g.endpoints(forced_edge);
    start.tree_edges.set(forced_edge);
  } else {
    start.tree_vertices.set(first_bit(terminals));
  }
  start.touch = g.incident(start.tree_vertices);
  start.inner = g.induced_edges(start.tree_vertices);
  TreeGrower grower(g, terminals, residual, visit);
  return grower.grow(start);
}

}  // namespace gcon::detail
