#include "gcon/graph_ops.hpp"

#include <vector>

#include "gcon/errors.hpp"

namespace gcon {

Graph line_graph(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<std::vector<int>> incident(g.order());
  for (int i = 0; i < g.size(); ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<Edge> out;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.touches(b.u) || a.touches(b.v)) out.emplace_back(i, j);
    }
  }
  return Graph(g.size(), std::move(out));
}

bool is_connected(const Graph& g, const std::optional<VertexSet>& within) {
  std::vector<char> allowed(g.order(), within ? 0 : 1);
  int count = g.order();
  if (within) {
    within->check_within(g.order());
    for (Vertex v : *within) allowed[v] = 1;
    count = static_cast<int>(within->size());
  }
  if (count <= 1) return true;

  Vertex start = 0;
  while (!allowed[start]) ++start;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (allowed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == count;
}

std::vector<int> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool same_component(const Graph& g, const VertexSet& s) {
  s.check_within(g.order());
  if (s.size() <= 1) return true;
  auto comp = components(g);
  for (Vertex v : s) {
    if (comp[v] != comp[s.front()]) return false;
  }
  return true;
}

}  // namespace gcon
