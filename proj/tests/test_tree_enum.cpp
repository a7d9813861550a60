#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gcon/errors.hpp"
#include "gcon/tree_enum.hpp"
#include "oracles.hpp"

using namespace gcon;

namespace {

Graph complete(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  }
  return Graph(n, es);
}

SteinerTree tree_of(const Graph& g, const oracle::Tree& t) {
  std::vector<Edge> es;
  for (int i = 0; i < g.size(); ++i) {
    if ((t.edges >> i) & 1) es.push_back(g.edges()[i]);
  }
  std::sort(es.begin(), es.end());
  return SteinerTree(es);
}

// Repeatedly strips leaves outside s.
SteinerTree prune(SteinerTree t, const VertexSet& s) {
  while (true) {
    std::map<Vertex, int> deg;
    for (const Edge& e : t.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    auto it = std::find_if(t.edges.begin(), t.edges.end(), [&](const Edge& e) {
      return (deg[e.u] == 1 && !s.contains(e.u)) || (deg[e.v] == 1 && !s.contains(e.v));
    });
    if (it == t.edges.end()) return t;
    t.edges.erase(it);
    t = SteinerTree(t.edges);
  }
}

// Simple s-t paths by DFS, as edge sets.
void paths(const Graph& g, Vertex at, Vertex target, std::vector<bool>& seen, std::vector<Edge>& trail,
           std::set<std::vector<Edge>>& out) {
  if (at == target) {
    auto es = trail;
    std::sort(es.begin(), es.end());
    out.insert(es);
    return;
  }
  for (Vertex nb : g.neighbors(at)) {
    if (seen[nb]) continue;
    seen[nb] = true;
    trail.emplace_back(at, nb);
    paths(g, nb, target, seen, trail, out);
    trail.pop_back();
    seen[nb] = false;
  }
}

}  // namespace

TEST_CASE("enumerate_steiner_trees on K3 with two terminals") {
  const auto trees = enumerate_steiner_trees(complete(3), VertexSet{0, 1});
  REQUIRE(trees.size() == 2);
  CHECK(trees[0].edges == std::vector<Edge>{{0, 1}});
  CHECK(trees[1].edges == std::vector<Edge>{{0, 2}, {1, 2}});
}

TEST_CASE("enumerate_steiner_trees on P3 and K4") {
  const Graph p3(3, {{0, 1}, {1, 2}});
  const auto trees = enumerate_steiner_trees(p3, VertexSet{0, 2});
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].edges.size() == 2);
  CHECK(enumerate_steiner_trees(complete(4), VertexSet::range(4)).size() == 16);
}

TEST_CASE("enumerate_steiner_trees edge cases") {
  CHECK(enumerate_steiner_trees(Graph(3, {{0, 1}}), VertexSet{0, 2}).empty());
  CHECK_THROWS_AS(enumerate_steiner_trees(complete(3), VertexSet{0}), ValidationError);
  CHECK_THROWS_AS(enumerate_steiner_trees(complete(3), VertexSet{0, 5}), ValidationError);
}

TEST_CASE("disjointness predicates on the documented examples") {
  const Graph k3 = complete(3);
  const SteinerTree direct({{0, 1}});
  const SteinerTree detour({{0, 2}, {1, 2}});
  CHECK(internally_disjoint(direct, detour, VertexSet{0, 1}));
  CHECK_FALSE(internally_disjoint(detour, detour, VertexSet{0, 1}));
  CHECK_FALSE(edge_disjoint(direct, direct));

  const SteinerTree a({{0, 1}, {0, 2}});
  const SteinerTree b({{0, 2}, {1, 2}});
  const SteinerTree c({{0, 1}, {1, 2}});
  CHECK_FALSE(edge_disjoint(a, b));
  CHECK_FALSE(edge_disjoint(b, c));
  CHECK_FALSE(edge_disjoint(a, c));

  const SteinerTree star({{0, 1}, {0, 2}, {0, 3}});
  const SteinerTree tri({{1, 2}, {1, 3}, {2, 3}});
  CHECK(edge_disjoint(star, tri));

  // Two 0-1 paths through the same middle vertex.
  const Graph g(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
  const SteinerTree via2({{0, 2}, {1, 2}});
  const SteinerTree via2b({{0, 3}, {2, 3}, {1, 2}});
  CHECK_FALSE(internally_disjoint(via2, via2b, VertexSet{0, 1}));
  CHECK(is_steiner_tree(g, via2b, VertexSet{0, 1}));
}

TEST_CASE("enumeration equals the minimal trees found by brute force, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      if (!oracle::naive_connected(g)) continue;
      for (const auto& sv : oracle::vertex_subsets(n, 2, n)) {
        const VertexSet s(sv);
        const auto listed = enumerate_steiner_trees(g, s);
        std::set<SteinerTree> expected;
        for (const auto& t : oracle::all_s_trees(g, sv)) {
          const SteinerTree tree = tree_of(g, t);
          if (is_minimal_tree(tree, s)) expected.insert(tree);
          // Every S-tree prunes down to a listed one.
          const SteinerTree pruned = prune(tree, s);
          CHECK(std::binary_search(listed.begin(), listed.end(), pruned, [](const auto& x, const auto& y) {
            if (x.edges.size() != y.edges.size()) return x.edges.size() < y.edges.size();
            return x.edges < y.edges;
          }));
        }
        const std::set<SteinerTree> got(listed.begin(), listed.end());
        CHECK(got.size() == listed.size());
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("enumerated trees satisfy the predicates, which are symmetric, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      if (!oracle::naive_connected(g) || g.size() > 7) continue;
      for (const auto& sv : oracle::vertex_subsets(n, 2, 3)) {
        const VertexSet s(sv);
        const auto trees = enumerate_steiner_trees(g, s);
        for (const auto& t : trees) {
          CHECK(is_steiner_tree(g, t, s));
          CHECK(is_minimal_tree(t, s));
        }
        for (std::size_t i = 0; i < trees.size(); ++i) {
          for (std::size_t j = 0; j < trees.size(); ++j) {
            const bool in = internally_disjoint(trees[i], trees[j], s);
            CHECK(in == internally_disjoint(trees[j], trees[i], s));
            CHECK(edge_disjoint(trees[i], trees[j]) == edge_disjoint(trees[j], trees[i]));
            if (in) CHECK(edge_disjoint(trees[i], trees[j]));
          }
        }
      }
    }
  }
}

TEST_CASE("two terminals enumerate exactly the simple paths") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      std::set<std::vector<Edge>> expected;
      std::vector<bool> seen(n, false);
      seen[0] = true;
      std::vector<Edge> trail;
      paths(g, 0, n - 1, seen, trail, expected);
      std::set<std::vector<Edge>> got;
      for (const auto& t : enumerate_steiner_trees(g, VertexSet{0, n - 1})) got.insert(t.edges);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("is_valid_packing checks membership and pairwise predicates") {
  const Graph k4 = complete(4);
  const VertexSet all = VertexSet::range(4);
  const std::vector<SteinerTree> ok{SteinerTree({{0, 1}, {1, 2}, {2, 3}}), SteinerTree({{0, 2}, {0, 3}, {1, 3}})};
  CHECK(is_valid_packing(k4, all, ok, Disjointness::Edge));
  const std::vector<SteinerTree> short_tree{SteinerTree({{0, 1}, {0, 2}})};
  CHECK_FALSE(is_valid_packing(k4, all, short_tree, Disjointness::Edge));
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_valid_packing(p3, VertexSet{0, 2}, {SteinerTree({{0, 2}})}, Disjointness::Edge));
}
