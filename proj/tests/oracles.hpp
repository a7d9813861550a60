#pragma once

// Brute-force reference implementations. They use only the public Graph
// accessors and share no code with the library's search kernels.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gcon/graph.hpp"

namespace oracle {

struct Tree {
  std::uint64_t edges = 0;     // bit i = edge i of the host
  std::uint64_t vertices = 0;  // bit v = vertex v spanned
};

inline bool connected_edge_subset(const gcon::Graph& g, std::uint64_t edges, std::uint64_t vertices) {
  std::vector<int> parent(g.order());
  for (int v = 0; v < g.order(); ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  int joins = 0;
  for (int i = 0; i < g.size(); ++i) {
    if (!((edges >> i) & 1)) continue;
    int a = find(g.edges()[i].u);
    int b = find(g.edges()[i].v);
    if (a == b) return false;  // cycle
    parent[a] = b;
    ++joins;
  }
  return joins + 1 == __builtin_popcountll(vertices);
}

/// Every S-tree of g (not only minimal ones), by scanning all edge subsets.
inline std::vector<Tree> all_s_trees(const gcon::Graph& g, const std::vector<int>& s) {
  std::uint64_t need = 0;
  for (int v : s) need |= 1ULL << v;
  std::vector<Tree> out;
  const std::uint64_t total = 1ULL << g.size();
  for (std::uint64_t e = 1; e < total; ++e) {
    std::uint64_t vs = 0;
    for (int i = 0; i < g.size(); ++i) {
      if ((e >> i) & 1) vs |= (1ULL << g.edges()[i].u) | (1ULL << g.edges()[i].v);
    }
    if ((vs & need) != need) continue;
    if (connected_edge_subset(g, e, vs)) out.push_back({e, vs});
  }
  return out;
}

/// Largest family of pairwise compatible trees; `internal` also forbids
/// sharing any vertex outside s.
inline int naive_packing(const gcon::Graph& g, const std::vector<int>& s, bool internal) {
  std::uint64_t terminals = 0;
  for (int v : s) terminals |= 1ULL << v;
  const std::vector<Tree> trees = all_s_trees(g, s);
  auto compatible = [&](const Tree& a, const Tree& b) {
    if (a.edges & b.edges) return false;
    return !internal || !((a.vertices & b.vertices) & ~terminals);
  };
  int best = 0;
  auto grow = [&](auto&& self, const std::vector<int>& candidates, int count) -> void {
    best = std::max(best, count);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (count + static_cast<int>(candidates.size() - i) <= best) return;
      std::vector<int> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (compatible(trees[candidates[i]], trees[candidates[j]])) next.push_back(candidates[j]);
      }
      self(self, next, count + 1);
    }
  };
  std::vector<int> all(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) all[i] = static_cast<int>(i);
  grow(grow, all, 0);
  return best;
}

inline int naive_kappa(const gcon::Graph& g, const std::vector<int>& s) { return naive_packing(g, s, true); }
inline int naive_lambda(const gcon::Graph& g, const std::vector<int>& s) { return naive_packing(g, s, false); }

/// All labeled graphs on n vertices, edges drawn from pairs in (u,v) order.
inline std::vector<gcon::Graph> all_graphs(int n) {
  std::vector<gcon::Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<gcon::Graph> out;
  for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
    std::vector<gcon::Edge> es;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1) es.push_back(pairs[i]);
    }
    out.emplace_back(n, es);
  }
  return out;
}

inline bool naive_connected(const gcon::Graph& g) {
  if (g.order() <= 1) return true;
  std::uint64_t seen = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : g.edges()) {
      const bool a = (seen >> e.u) & 1;
      const bool b = (seen >> e.v) & 1;
      if (a != b) {
        seen |= (1ULL << e.u) | (1ULL << e.v);
        grew = true;
      }
    }
  }
  return seen == (1ULL << g.order()) - 1;
}

/// Subsets of {0..n-1} with at least `lo` and at most `hi` members.
inline std::vector<std::vector<int>> vertex_subsets(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const int c = __builtin_popcount(mask);
    if (c < lo || c > hi) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) s.push_back(v);
    }
    out.push_back(s);
  }
  return out;
}

/// Perfect matching by trying every n-subset of triples.
inline bool naive_3dm(const gcon::ThreeDMInstance& inst) {
  const int m = inst.m();
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (__builtin_popcount(mask) != inst.n) continue;
    std::uint32_t us = 0, vs = 0, ws = 0;
    for (int i = 0; i < m; ++i) {
      if (!((mask >> i) & 1)) continue;
      us |= 1U << inst.triples[i].u;
      vs |= 1U << inst.triples[i].v;
      ws |= 1U << inst.triples[i].w;
    }
    const std::uint32_t full = (1U << inst.n) - 1;
    if (us == full && vs == full && ws == full) return true;
  }
  return false;
}

}  // namespace oracle
