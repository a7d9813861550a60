#include <algorithm>
#include <climits>
#include <queue>
#include <vector>

#include "gcon/errors.hpp"
#include "gcon/solver.hpp"

namespace gcon {

namespace {

// Unit-capacity max flow by shortest augmenting paths on a dense residual
// matrix. The graphs here are small enough that O(V^2) per BFS is cheap.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : n_(nodes), cap_(static_cast<std::size_t>(nodes) * nodes, 0) {}

  void add_arc(int from, int to, int capacity) { cap_[idx(from, to)] += capacity; }

  int max_flow(int source, int sink) {
    int flow = 0;
    std::vector<int> parent(n_);
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source] = source;
      std::queue<int> q;
      q.push(source);
      while (!q.empty() && parent[sink] < 0) {
        const int x = q.front();
        q.pop();
        for (int y = 0; y < n_; ++y) {
          if (parent[y] < 0 && cap_[idx(x, y)] > 0) {
            parent[y] = x;
            q.push(y);
          }
        }
      }
      if (parent[sink] < 0) return flow;
      int push = INT_MAX;
      for (int y = sink; y != source; y = parent[y]) push = std::min(push, cap_[idx(parent[y], y)]);
      for (int y = sink; y != source; y = parent[y]) {
        cap_[idx(parent[y], y)] -= push;
        cap_[idx(y, parent[y])] += push;
      }
      flow += push;
    }
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  int n_;
  std::vector<int> cap_;
};

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw ValidationError("vertex out of range");
  if (u == v) throw ValidationError("endpoints must differ");
}

// Internally disjoint u-v paths for nonadjacent u, v, optionally ignoring one
// edge. Vertex x splits into 2x (in) and 2x+1 (out).
int split_flow(const Graph& g, Vertex u, Vertex v, int skip_edge) {
  const int big = g.order();
  FlowNetwork net(2 * g.order());
  for (Vertex x = 0; x < g.order(); ++x) net.add_arc(2 * x, 2 * x + 1, (x == u || x == v) ? big : 1);
  for (int i = 0; i < g.size(); ++i) {
    if (i == skip_edge) continue;
    const Edge& e = g.edges()[i];
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  return net.max_flow(2 * u + 1, 2 * v);
}

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  const int direct = g.edge_index(u, v);
  if (direct >= 0) return 1 + split_flow(g, u, v, direct);
  return split_flow(g, u, v, -1);
}

int local_edge_connectivity(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  FlowNetwork net(g.order());
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net.max_flow(u, v);
}

int classical_kappa(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw ValidationError("classical connectivity needs at least two vertices");
  int best = n - 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) best = std::min(best, split_flow(g, u, v, -1));
    }
  }
  return best;
}

int classical_lambda(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw ValidationError("classical connectivity needs at least two vertices");
  int best = INT_MAX;
  for (Vertex t = 1; t < n; ++t) best = std::min(best, local_edge_connectivity(g, 0, t));
  return best;
}

}  // namespace gcon
