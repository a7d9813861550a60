#include "gcon/reductions.hpp"

#include <algorithm>
#include <set>

#include "gcon/errors.hpp"
#include "gcon/graph_ops.hpp"

namespace gcon {

namespace {

// Part of gadget vertex t_j, j = 1..18.
constexpr std::array<Part, 19> kGadgetPart{
    Part::U,                                   // unused slot 0
    Part::V, Part::W, Part::U, Part::V, Part::W, Part::U,  // t1..t6
    Part::U, Part::W, Part::V, Part::U, Part::W, Part::V,  // t7..t12
    Part::U, Part::V, Part::W, Part::U, Part::V, Part::W,  // t13..t18
};

class Builder {
 public:
  explicit Builder(int n) : n_(n) {}

  Vertex add(std::string role) {
    roles_.emplace(n_, std::move(role));
    return n_++;
  }

  void join(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

  int order() const { return n_; }
  std::map<Vertex, std::string>& roles() { return roles_; }
  std::vector<Edge>& edges() { return edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::string> roles_;
};

std::string indexed(const std::string& base, int i) { return base + "_" + std::to_string(i); }

void check_terminals(const Graph& g, const VertexSet& s) {
  if (s.size() < 2) throw ValidationError("terminal set needs at least two vertices");
  s.check_within(g.order());
}

}  // namespace

GraphDocument to_document(const ReductionOutput& out) {
  GraphDocument doc;
  doc.graph = out.graph;
  if (!out.terminals.empty()) doc.terminals = out.terminals;
  doc.threshold = out.threshold;
  doc.reduction = out.name;
  doc.roles = out.gadget_map;
  return doc;
}

std::string serialize_reduction(const ReductionOutput& out) { return serialize_document(to_document(out)); }

ReductionOutput reduce_3dm_to_p1(const ThreeDMInstance& inst) {
  inst.validate();
  if (inst.n < 1) throw ValidationError("3-DM instance needs n >= 1");
  const int n = inst.n;
  Builder b(3 * n);
  std::vector<Part> parts(3 * n);
  for (int i = 0; i < n; ++i) {
    parts[i] = Part::U;
    parts[n + i] = Part::V;
    parts[2 * n + i] = Part::W;
  }

  for (int i = 0; i < inst.m(); ++i) {
    const Triple& tr = inst.triples[i];
    std::array<Vertex, 19> t{};
    for (int j = 1; j <= 18; ++j) {
      t[j] = b.add("t_{" + std::to_string(i + 1) + "," + std::to_string(j) + "}");
      parts.push_back(kGadgetPart[j]);
    }
    const std::array<Vertex, 3> ends{tr.u, n + tr.v, 2 * n + tr.w};
    for (int arm = 0; arm < 3; ++arm) {
      std::array<Vertex, 7> pos{};
      pos[0] = ends[arm];
      for (int p = 1; p <= 6; ++p) pos[p] = t[6 * arm + p];
      for (auto [x, y] : kArmEdges) b.join(pos[x], pos[y]);
    }
    for (auto [x, y] : kCenterEdges) b.join(t[x], t[y]);
  }

  ReductionOutput out;
  out.name = "3dm-p1";
  out.graph = Graph(b.order(), std::move(b.edges()), std::move(parts));
  out.threshold = n + 6 * inst.m();
  out.gadget_map = std::move(b.roles());
  return out;
}

ReductionOutput reduce_p1_to_kappa(const Graph& g) {
  if (!g.is_tagged()) throw ValidationError("graph carries no tripartition");
  std::array<std::vector<Vertex>, 3> parts;
  for (Vertex x = 0; x < g.order(); ++x) parts[static_cast<int>(g.part(x))].push_back(x);
  if (parts[0].size() != parts[1].size() || parts[1].size() != parts[2].size()) {
    throw ValidationError("tripartition parts differ in size");
  }

  Builder b(g.order());
  b.edges() = g.edges();
  const std::array<Vertex, 3> apex{b.add("a"), b.add("b"), b.add("c")};
  for (int p = 0; p < 3; ++p) {
    for (Vertex x : parts[p]) b.join(apex[p], x);
  }

  ReductionOutput out;
  out.name = "p1-kappa";
  out.graph = Graph(b.order(), std::move(b.edges()));
  out.terminals = VertexSet({apex[0], apex[1], apex[2]});
  out.threshold = static_cast<int>(parts[0].size());
  out.gadget_map = std::move(b.roles());
  return out;
}

ReductionOutput reduce_lambda_to_kappa(const Graph& g, const VertexSet& s) {
  check_terminals(g, s);
  if (!is_connected(g)) throw ValidationError("graph must be connected");

  // The original edges are dropped: only line-graph and incidence edges.
  Builder b(g.order());
  std::vector<Vertex> ev(g.size());
  for (int i = 0; i < g.size(); ++i) ev[i] = b.add(indexed("e", i));
  const Graph line = line_graph(g);
  for (const Edge& e : line.edges()) b.join(ev[e.u], ev[e.v]);
  for (int i = 0; i < g.size(); ++i) {
    b.join(g.edges()[i].u, ev[i]);
    b.join(g.edges()[i].v, ev[i]);
  }

  ReductionOutput out;
  out.name = "linegraph";
  out.graph = Graph(b.order(), std::move(b.edges()));
  out.terminals = s;
  out.gadget_map = std::move(b.roles());
  return out;
}

ReductionOutput reduce_lambda3_to_lambdak(const Graph& g, const VertexSet& s, int ell, int k) {
  if (s.size() != 3) throw ValidationError("source terminal set must have exactly three vertices");
  if (k < 4) throw ValidationError("k must be at least 4");
  if (ell < 2) throw ValidationError("l must be at least 2");
  s.check_within(g.order());

  Builder b(g.order());
  b.edges() = g.edges();
  const Vertex v1 = s.front();
  std::vector<Vertex> terminals(s.begin(), s.end());
  for (int i = 1; i <= k - 3; ++i) {
    const Vertex hub = b.add("a^" + std::to_string(i));
    terminals.push_back(hub);
    for (int j = 1; j <= ell; ++j) {
      const Vertex spoke = b.add("a^" + std::to_string(i) + "_" + std::to_string(j));
      b.join(v1, spoke);
      b.join(hub, spoke);
    }
  }

  ReductionOutput out;
  out.name = "expand-k";
  out.graph = Graph(b.order(), std::move(b.edges()));
  out.terminals = VertexSet(std::move(terminals));
  out.threshold = ell;
  out.gadget_map = std::move(b.roles());
  return out;
}

ReductionOutput reduce_3sat_to_lambda2(const CnfFormula& phi) {
  phi.validate();
  if (phi.num_vars < 1 || phi.num_clauses() < 1) throw ValidationError("formula needs a variable and a clause");
  const int n = phi.num_vars;
  const int m = phi.num_clauses();

  Builder b(0);
  std::vector<Vertex> hat(n + 1), pos(n + 1), neg(n + 1);
  for (int i = 1; i <= n; ++i) {
    hat[i] = b.add(indexed("xhat", i));
    pos[i] = b.add(indexed("x", i));
    neg[i] = b.add(indexed("xbar", i));
  }
  std::vector<Vertex> clause(m + 1), guard(m + 1);
  for (int j = 1; j <= m; ++j) {
    clause[j] = b.add(indexed("c", j));
    guard[j] = b.add(indexed("c'", j));
  }
  const Vertex a = b.add("a");
  const Vertex bb = b.add("b");

  // Repeated literals would repeat membership edges, so collect a set.
  std::set<Edge> es;
  for (int i = 1; i <= n; ++i) {
    es.emplace(hat[i], pos[i]);
    es.emplace(hat[i], neg[i]);
  }
  for (int j = 1; j <= m; ++j) {
    for (int lit : phi.clauses[j - 1]) es.emplace(lit > 0 ? pos[lit] : neg[-lit], clause[j]);
  }
  for (int i = 2; i <= n; ++i) {
    es.emplace(pos[1], pos[i]);
    es.emplace(pos[1], neg[i]);
    es.emplace(neg[1], pos[i]);
    es.emplace(neg[1], neg[i]);
  }
  es.emplace(a, bb);
  for (int j = 1; j <= m; ++j) {
    es.emplace(a, guard[j]);
    es.emplace(clause[j], guard[j]);
  }
  for (int i = 1; i <= n; ++i) {
    es.emplace(bb, pos[i]);
    es.emplace(bb, neg[i]);
  }

  std::vector<Vertex> terminals;
  for (int j = 1; j <= m; ++j) terminals.push_back(guard[j]);
  for (int i = 1; i <= n; ++i) terminals.push_back(hat[i]);

  ReductionOutput out;
  out.name = "3sat-lambda2";
  out.graph = Graph(b.order(), std::vector<Edge>(es.begin(), es.end()));
  out.terminals = VertexSet(std::move(terminals));
  out.threshold = 2;
  out.gadget_map = std::move(b.roles());
  return out;
}

ReductionOutput reduce_lambda2_to_lambdal(const Graph& g, const VertexSet& s, int ell) {
  if (ell < 3) throw ValidationError("l must be at least 3");
  check_terminals(g, s);

  Builder b(g.order());
  b.edges() = g.edges();
  std::vector<Vertex> primes;
  int i = 1;
  for (Vertex v : s) {
    const Vertex prime = b.add(indexed("v'", i));
    const Vertex via1 = b.add(indexed("v^1", i));
    const Vertex via2 = b.add(indexed("v^2", i));
    b.join(v, via1);
    b.join(via1, prime);
    b.join(v, via2);
    b.join(via2, prime);
    primes.push_back(prime);
    ++i;
  }
  for (int j = 1; j <= ell - 2; ++j) {
    const Vertex hub = b.add(indexed("a", j));
    for (Vertex p : primes) b.join(hub, p);
  }

  ReductionOutput out;
  out.name = "expand-l";
  out.graph = Graph(b.order(), std::move(b.edges()));
  out.terminals = VertexSet(std::move(primes));
  out.threshold = ell;
  out.gadget_map = std::move(b.roles());
  return out;
}

std::vector<SteinerTree> apex_trees_from_partition(const Graph& g, const std::vector<RainbowTriple>& partition) {
  const Vertex n = g.order();
  std::vector<SteinerTree> trees;
  for (const auto& [u, v, w] : partition) {
    std::vector<Edge> es{{n, u}, {n + 1, v}, {n + 2, w}};
    // Two of the three pairs span the triple; take them in (uv, uw, vw) order.
    const std::array<Edge, 3> pairs{Edge(u, v), Edge(u, w), Edge(v, w)};
    int taken = 0;
    for (const Edge& e : pairs) {
      if (taken < 2 && g.has_edge(e.u, e.v)) {
        es.push_back(e);
        ++taken;
      }
    }
    if (taken < 2) throw ValidationError("partition triple does not induce a connected subgraph");
    std::sort(es.begin(), es.end());
    trees.emplace_back(std::move(es));
  }
  return trees;
}

}  // namespace gcon
