#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace gcon {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// Part of a tripartite instance: U-bar, V-bar, W-bar.
enum class Part : std::uint8_t { U = 0, V = 1, W = 2 };

/// Undirected simple graph on vertices 0..n-1.
///
/// The edge list keeps insertion order (line graphs index their vertices by
/// it); serialization canonicalizes it. An optional part tag marks
/// tripartite instances. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws ValidationError on self-loops, duplicates, out-of-range
  /// endpoints, or a part tag that is incomplete or not respected by an edge.
  Graph(int n, std::vector<Edge> edges, std::optional<std::vector<Part>> parts = std::nullopt);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }
  /// Position of edge {a,b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  const std::optional<std::vector<Part>>& parts() const { return parts_; }
  bool is_tagged() const { return parts_.has_value(); }
  Part part(Vertex v) const { return (*parts_)[v]; }
  Graph with_parts(std::vector<Part> parts) const;

  /// Same graph with lexicographically sorted edges.
  Graph canonical() const;

  bool operator==(const Graph& other) const;

 private:
  static std::uint64_t key(Vertex a, Vertex b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::unordered_map<std::uint64_t, int> index_;
  std::optional<std::vector<Part>> parts_;
};

/// Sorted set of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts; throws ValidationError on duplicates or negative ids.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  static VertexSet range(int n);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  Vertex front() const { return members_.front(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  /// Throws ValidationError if any member is >= n.
  void check_within(int n) const;

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// A tree inside a host graph, given by its vertex and edge sets.
struct SteinerTree {
  VertexSet vertices;
  std::vector<Edge> edges;  // sorted

  SteinerTree() = default;
  /// Derives the vertex set from the edges; a single-vertex tree needs the
  /// explicit form.
  explicit SteinerTree(std::vector<Edge> tree_edges);
  SteinerTree(VertexSet vs, std::vector<Edge> tree_edges);

  auto operator<=>(const SteinerTree&) const = default;
};

struct Triple {
  int u = 0;
  int v = 0;
  int w = 0;
  auto operator<=>(const Triple&) const = default;
};

/// 3-dimensional matching instance over U = V = W = {0..n-1}.
struct ThreeDMInstance {
  int n = 0;
  std::vector<Triple> triples;

  int m() const { return static_cast<int>(triples.size()); }
  /// Throws ValidationError on out-of-range indices or repeated triples.
  void validate() const;
};

/// 3-CNF formula. Literals are DIMACS style: +i is x_i, -i is its negation,
/// 1 <= i <= num_vars.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  void validate() const;
};

/// Parses "0,2,5" into a vertex set.
VertexSet parse_vertex_list(const std::string& text);

std::string format_tree(const SteinerTree& tree);

}  // namespace gcon
