#include "gcon/tree_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gcon/detail/search_graph.hpp"
#include "gcon/errors.hpp"

namespace gcon {

namespace {

void check_terminals(const Graph& g, const VertexSet& s) {
  if (s.size() < 2) throw ValidationError("terminal set needs at least two vertices");
  s.check_within(g.order());
}

bool by_size_then_edges(const SteinerTree& a, const SteinerTree& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return a.edges < b.edges;
}

}  // namespace

std::vector<SteinerTree> enumerate_steiner_trees(const Graph& g, const VertexSet& s) {
  check_terminals(g, s);
  const detail::SearchGraph sg(g);
  std::vector<SteinerTree> out;
  detail::visit_minimal_trees(sg, detail::to_mask(s), sg.edges, -1, [&](const Mask& edges, const Mask&) {
    out.push_back(detail::to_tree(sg, edges));
    return true;
  });
  std::sort(out.begin(), out.end(), by_size_then_edges);
  return out;
}

bool edge_disjoint(const SteinerTree& a, const SteinerTree& b) {
  auto i = a.edges.begin();
  auto j = b.edges.begin();
  while (i != a.edges.end() && j != b.edges.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

bool internally_disjoint(const SteinerTree& a, const SteinerTree& b, const VertexSet& s) {
  if (!edge_disjoint(a, b)) return false;
  std::vector<Vertex> common;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(common));
  return std::equal(common.begin(), common.end(), s.begin(), s.end());
}

bool is_steiner_tree(const Graph& g, const SteinerTree& t, const VertexSet& s) {
  for (Vertex v : s) {
    if (!t.vertices.contains(v)) return false;
  }
  if (t.vertices.empty()) return false;
  if (t.edges.size() + 1 != t.vertices.size()) return false;

  // Union-find over the tree's vertices: acyclic with |V|-1 edges means tree.
  std::map<Vertex, int> slot;
  for (Vertex v : t.vertices) {
    if (v < 0 || v >= g.order()) return false;
    slot.emplace(v, static_cast<int>(slot.size()));
  }
  std::vector<int> parent(slot.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : t.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    auto iu = slot.find(e.u);
    auto iv = slot.find(e.v);
    if (iu == slot.end() || iv == slot.end()) return false;
    int a = find(iu->second);
    int b = find(iv->second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_minimal_tree(const SteinerTree& t, const VertexSet& s) {
  std::map<Vertex, int> degree;
  for (const Edge& e : t.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (const auto& [v, d] : degree) {
    if (d == 1 && !s.contains(v)) return false;
  }
  return true;
}

bool is_valid_packing(const Graph& g, const VertexSet& s, const std::vector<SteinerTree>& trees, Disjointness mode) {
  for (const auto& t : trees) {
    if (!is_steiner_tree(g, t, s)) return false;
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      bool ok = mode == Disjointness::Internal ? internally_disjoint(trees[i], trees[j], s)
                                               : edge_disjoint(trees[i], trees[j]);
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace gcon
