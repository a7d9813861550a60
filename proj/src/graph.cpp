#include "gcon/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gcon/errors.hpp"

namespace gcon {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::MalformedLine: return "malformed line";
    case ParseErrorKind::CountMismatch: return "count mismatch";
    case ParseErrorKind::IndexOutOfRange: return "index out of range";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::IncompleteTripartition: return "incomplete tripartition";
    case ParseErrorKind::NonTripartiteEdge: return "edge inside one part";
    case ParseErrorKind::BadTerminalSet: return "bad terminal set";
    case ParseErrorKind::DuplicateTriple: return "duplicate triple";
    case ParseErrorKind::BadClause: return "bad clause";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : Error("line " + std::to_string(line) + ": " + gcon::to_string(kind) +
            (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges, std::optional<std::vector<Part>> parts)
    : n_(n), edges_(std::move(edges)), adj_(n > 0 ? n : 0), parts_(std::move(parts)) {
  if (n < 0) throw ValidationError("negative vertex count");
  index_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    e = Edge(e.u, e.v);
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) throw ValidationError("edge " + edge_text(e) + " out of range");
    if (!index_.emplace(key(e.u, e.v), static_cast<int>(i)).second) {
      throw ValidationError("duplicate edge " + edge_text(e));
    }
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  if (parts_) {
    if (static_cast<int>(parts_->size()) != n) {
      throw ValidationError("part tag must cover all vertices");
    }
    for (const Edge& e : edges_) {
      if ((*parts_)[e.u] == (*parts_)[e.v]) {
        throw ValidationError("edge " + edge_text(e) + " lies inside one part");
      }
    }
  }
}

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto it = index_.find(key(a, b));
  return it == index_.end() ? -1 : it->second;
}

Graph Graph::with_parts(std::vector<Part> parts) const {
  return Graph(n_, edges_, std::move(parts));
}

Graph Graph::canonical() const {
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return Graph(n_, std::move(sorted), parts_);
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && edges_ == other.edges_ && parts_ == other.parts_;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ValidationError("vertex set has repeated members");
  }
  if (!members_.empty() && members_.front() < 0) {
    throw ValidationError("vertex set has a negative id");
  }
}

VertexSet VertexSet::range(int n) {
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_within(int n) const {
  if (!members_.empty() && members_.back() >= n) {
    throw ValidationError("vertex " + std::to_string(members_.back()) + " outside graph of order " +
                          std::to_string(n));
  }
}

SteinerTree::SteinerTree(std::vector<Edge> tree_edges) : edges(std::move(tree_edges)) {
  std::sort(edges.begin(), edges.end());
  std::set<Vertex> vs;
  for (const Edge& e : edges) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  vertices = VertexSet(std::vector<Vertex>(vs.begin(), vs.end()));
}

SteinerTree::SteinerTree(VertexSet vs, std::vector<Edge> tree_edges)
    : vertices(std::move(vs)), edges(std::move(tree_edges)) {
  std::sort(edges.begin(), edges.end());
}

void ThreeDMInstance::validate() const {
  if (n < 0) throw ValidationError("3-DM ground set size must be nonnegative");
  std::set<Triple> seen;
  for (const Triple& t : triples) {
    if (t.u < 0 || t.v < 0 || t.w < 0 || t.u >= n || t.v >= n || t.w >= n) {
      throw ValidationError("3-DM triple index out of range");
    }
    if (!seen.insert(t).second) throw ValidationError("duplicate 3-DM triple");
  }
}

void CnfFormula::validate() const {
  if (num_vars < 0) throw ValidationError("negative variable count");
  for (const auto& clause : clauses) {
    for (int lit : clause) {
      if (lit == 0 || lit > num_vars || -lit > num_vars) {
        throw ValidationError("literal " + std::to_string(lit) + " out of range");
      }
    }
  }
}

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw ValidationError("empty entry in vertex list '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad vertex id '" + item + "'");
    }
    if (used != item.size()) throw ValidationError("bad vertex id '" + item + "'");
    out.push_back(v);
  }
  return VertexSet(std::move(out));
}

std::string format_tree(const SteinerTree& tree) {
  std::string out = "tree:";
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    out += (i == 0 ? " e " : " ; e ");
    out += std::to_string(tree.edges[i].u) + " " + std::to_string(tree.edges[i].v);
  }
  return out;
}

}  // namespace gcon
