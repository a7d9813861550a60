#pragma once

#include <vector>

#include "gcon/graph.hpp"

namespace gcon {

/// All minimal S-trees of g (every leaf a terminal), each once, ordered by
/// edge count and then lexicographically by edge list. Empty when s is split
/// across components. Throws ValidationError if |s| < 2 or a terminal is
/// outside g.
std::vector<SteinerTree> enumerate_steiner_trees(const Graph& g, const VertexSet& s);

/// Edge sets disjoint and vertex sets meeting in exactly s.
bool internally_disjoint(const SteinerTree& a, const SteinerTree& b, const VertexSet& s);

bool edge_disjoint(const SteinerTree& a, const SteinerTree& b);

/// `t` is a subtree of g whose vertex set contains s.
bool is_steiner_tree(const Graph& g, const SteinerTree& t, const VertexSet& s);

/// Every leaf of t is in s.
bool is_minimal_tree(const SteinerTree& t, const VertexSet& s);

enum class Disjointness { Internal, Edge };

/// Every tree is an S-tree of g and all pairs satisfy the predicate.
bool is_valid_packing(const Graph& g, const VertexSet& s, const std::vector<SteinerTree>& trees, Disjointness mode);

}  // namespace gcon
