#include "gcon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <array>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <tuple>

#include "gcon/errors.hpp"
#include "gcon/graph_ops.hpp"
#include "gcon/io.hpp"
#include "gcon/reductions.hpp"
#include "gcon/solver.hpp"
#include "gcon/tree_enum.hpp"

namespace gcon {

namespace {

using Check = std::function<std::optional<VerificationFailure>(std::size_t)>;

void guard(bool ok, const std::string& what) {
  if (!ok) throw GuardError("budget exceeds guard: " + what);
}

std::string verdict(bool b) { return b ? "yes" : "no"; }

std::vector<std::vector<int>> combinations(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  if (r > n) return out;
  while (true) {
    out.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) return out;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Nondecreasing r-tuples over 0..n-1, lexicographic.
std::vector<std::vector<int>> multisets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(r, 0);
  while (true) {
    out.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - 1) --i;
    if (i < 0) return out;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[i];
  }
}

std::vector<std::vector<Vertex>> subsets_between(int n, int lo, int hi) {
  std::vector<std::vector<Vertex>> out;
  for (int r = lo; r <= std::min(hi, n); ++r) {
    for (auto& c : combinations(n, r)) out.push_back(std::move(c));
  }
  return out;
}

std::string graph_instance(const Graph& g, const std::optional<VertexSet>& s, const std::string& extra = "") {
  std::string text = serialize_graph(g, s);
  if (!extra.empty()) text += "# " + extra + "\n";
  return text;
}

VerificationFailure failure(std::string instance, std::string ext, std::string lhs, std::string rhs,
                            std::string note) {
  return {std::move(instance), std::move(ext), std::move(lhs), std::move(rhs), std::move(note)};
}

struct Plan {
  std::string family;
  std::size_t count = 0;
  Check check;
};

// Source (g, S) pairs shared by the graph-based reductions.
struct GraphCase {
  Graph g;
  VertexSet s;
  int param = 0;
};

std::vector<GraphCase> graph_cases(int max_n, int lo, int hi, const std::vector<int>& params) {
  std::vector<GraphCase> out;
  for (const Graph& g : gen_connected_graphs(max_n)) {
    for (const auto& s : subsets_between(g.order(), lo, hi)) {
      for (int p : params) out.push_back({g, VertexSet(s), p});
    }
  }
  return out;
}

std::optional<VerificationFailure> packing_unsound(const Graph& g, const VertexSet& s,
                                                   const std::vector<SteinerTree>& trees, Disjointness mode,
                                                   const std::string& instance, const std::string& which) {
  if (is_valid_packing(g, s, trees, mode)) return std::nullopt;
  return failure(instance, "graph", "-", "-", which + " witness fails re-verification");
}

Plan plan_r1(const VerifyBudget& b) {
  const int max_n = b.max_n.value_or(2);
  const int max_m = b.max_m.value_or(3);
  auto insts = std::make_shared<std::vector<ThreeDMInstance>>(gen_3dm(max_n, max_m));
  Plan p;
  p.family = "3dm n<=" + std::to_string(max_n) + " m<=" + std::to_string(max_m) + " exhaustive";
  p.count = insts->size();
  p.check = [insts](std::size_t i) -> std::optional<VerificationFailure> {
    const ThreeDMInstance& inst = (*insts)[i];
    const std::string text = serialize_3dm(inst);
    const ReductionOutput out = reduce_3dm_to_p1(inst);
    const Graph& g = out.graph;
    const int n = inst.n;
    const int m = inst.m();
    if (g.order() != 3 * n + 18 * m || g.size() != 26 * m || out.threshold != n + 6 * m) {
      return failure(text, "3dm", "-", "-",
                     "size identity: V=" + std::to_string(g.order()) + " E=" + std::to_string(g.size()));
    }
    std::array<int, 3> sizes{};
    for (Vertex x = 0; x < g.order(); ++x) ++sizes[static_cast<int>(g.part(x))];
    if (sizes[0] != *out.threshold || sizes[1] != *out.threshold || sizes[2] != *out.threshold) {
      return failure(text, "3dm", "-", "-", "parts are not of size q");
    }
    for (const Edge& e : g.edges()) {
      if (g.part(e.u) == g.part(e.v)) return failure(text, "3dm", "-", "-", "edge inside one part");
    }
    const bool lhs = decide_3dm(inst);
    const bool rhs = decide_problem1(g);
    if (lhs != rhs) return failure(text, "3dm", verdict(lhs), verdict(rhs), "3dm vs rainbow partition");
    return std::nullopt;
  };
  return p;
}

Plan plan_r2(const VerifyBudget& b) {
  const int max_q = b.max_n.value_or(2);
  auto graphs = std::make_shared<std::vector<Graph>>(gen_tripartite_graphs(max_q));
  Plan p;
  p.family = "tripartite q<=" + std::to_string(max_q) + " exhaustive";
  p.count = graphs->size();
  p.check = [graphs](std::size_t i) -> std::optional<VerificationFailure> {
    const Graph& g = (*graphs)[i];
    const std::string text = graph_instance(g, std::nullopt);
    const ReductionOutput out = reduce_p1_to_kappa(g);
    const int q = g.order() / 3;
    const Graph& h = out.graph;
    if (h.order() != 3 * q + 3 || h.size() != g.size() + 3 * q || out.threshold != q) {
      return failure(text, "graph", "-", "-", "size identity");
    }
    for (Vertex apex : out.terminals) {
      if (h.degree(apex) != q) return failure(text, "graph", "-", "-", "apex degree differs from q");
    }
    const auto partition = find_problem1_partition(g);
    const auto packing = find_kappa_packing(h, out.terminals, q);
    if (partition.has_value() != packing.has_value()) {
      return failure(text, "graph", verdict(partition.has_value()), verdict(packing.has_value()),
                     "rainbow partition vs kappa");
    }
    if (partition) {
      const auto trees = apex_trees_from_partition(g, *partition);
      if (static_cast<int>(trees.size()) != q || !is_valid_packing(h, out.terminals, trees, Disjointness::Internal)) {
        return failure(text, "graph", "yes", "yes", "partition trees are not internally disjoint");
      }
      if (auto bad = packing_unsound(h, out.terminals, *packing, Disjointness::Internal, text, "kappa")) return bad;
    }
    return std::nullopt;
  };
  return p;
}

Plan plan_r3(const VerifyBudget& b) {
  const int max_n = b.max_n.value_or(5);
  auto cases = std::make_shared<std::vector<GraphCase>>(graph_cases(max_n, 2, 4, {0}));
  Plan p;
  p.family = "connected n<=" + std::to_string(max_n) + " 2<=|S|<=4";
  p.count = cases->size();
  p.check = [cases](std::size_t i) -> std::optional<VerificationFailure> {
    const auto& [g, s, unused] = (*cases)[i];
    const std::string text = graph_instance(g, s);
    const ReductionOutput out = reduce_lambda_to_kappa(g, s);
    long line_edges = 0;
    for (Vertex v = 0; v < g.order(); ++v) line_edges += static_cast<long>(g.degree(v)) * (g.degree(v) - 1) / 2;
    if (out.graph.order() != g.order() + g.size() || out.graph.size() != line_edges + 2 * g.size()) {
      return failure(text, "graph", "-", "-", "size identity");
    }
    const PackingResult lhs = lambda_set(g, s);
    const PackingResult rhs = kappa_set(out.graph, out.terminals);
    if (lhs.value != rhs.value) {
      return failure(text, "graph", std::to_string(lhs.value), std::to_string(rhs.value), "lambda(G) vs kappa(G')");
    }
    if (auto bad = packing_unsound(g, s, lhs.witness, Disjointness::Edge, text, "lambda")) return bad;
    return packing_unsound(out.graph, out.terminals, rhs.witness, Disjointness::Internal, text, "kappa");
  };
  return p;
}

Plan plan_r4(const VerifyBudget& b) {
  const int max_n = b.max_n.value_or(4);
  // param encodes (k, l) as 10k + l.
  auto cases = std::make_shared<std::vector<GraphCase>>(graph_cases(max_n, 3, 3, {42, 43, 52, 53}));
  Plan p;
  p.family = "connected n<=" + std::to_string(max_n) + " |S|=3 k in {4,5} l in {2,3}";
  p.count = cases->size();
  p.check = [cases](std::size_t i) -> std::optional<VerificationFailure> {
    const auto& [g, s, param] = (*cases)[i];
    const int k = param / 10;
    const int ell = param % 10;
    const std::string text = graph_instance(g, s, "k " + std::to_string(k) + " l " + std::to_string(ell));
    const ReductionOutput out = reduce_lambda3_to_lambdak(g, s, ell, k);
    if (out.graph.order() != g.order() + (k - 3) * (ell + 1) || out.graph.size() != g.size() + 2 * ell * (k - 3) ||
        static_cast<int>(out.terminals.size()) != k || out.threshold != ell) {
      return failure(text, "graph", "-", "-", "size identity");
    }
    const auto lhs = find_lambda_packing(g, s, ell);
    const auto rhs = find_lambda_packing(out.graph, out.terminals, ell);
    if (lhs.has_value() != rhs.has_value()) {
      return failure(text, "graph", verdict(lhs.has_value()), verdict(rhs.has_value()), "lambda3 vs lambdak");
    }
    if (lhs) {
      if (auto bad = packing_unsound(g, s, *lhs, Disjointness::Edge, text, "source")) return bad;
      return packing_unsound(out.graph, out.terminals, *rhs, Disjointness::Edge, text, "target");
    }
    return std::nullopt;
  };
  return p;
}

Plan plan_r5(const VerifyBudget& b) {
  const int max_vars = b.max_n.value_or(3);
  const int max_clauses = b.max_m.value_or(3);
  auto formulas = std::make_shared<std::vector<CnfFormula>>(gen_cnf(max_vars, max_clauses, b.seed));
  Plan p;
  p.family = "cnf exhaustive n<=2 m<=2 + 200 random n<=" + std::to_string(max_vars) + " m<=" +
             std::to_string(max_clauses);
  p.count = formulas->size();
  p.check = [formulas](std::size_t i) -> std::optional<VerificationFailure> {
    const CnfFormula& phi = (*formulas)[i];
    const std::string text = serialize_cnf(phi);
    const ReductionOutput out = reduce_3sat_to_lambda2(phi);
    if (out.graph.order() != 3 * phi.num_vars + 2 * phi.num_clauses() + 2 || out.threshold != 2) {
      return failure(text, "cnf", "-", "-", "size identity");
    }
    const bool lhs = decide_3sat(phi);
    const auto rhs = find_lambda_packing(out.graph, out.terminals, 2);
    if (lhs != rhs.has_value()) return failure(text, "cnf", verdict(lhs), verdict(rhs.has_value()), "3sat vs lambda 2");
    if (rhs) return packing_unsound(out.graph, out.terminals, *rhs, Disjointness::Edge, text, "lambda");
    return std::nullopt;
  };
  return p;
}

Plan plan_r6(const VerifyBudget& b) {
  const int max_n = b.max_n.value_or(4);
  auto cases = std::make_shared<std::vector<GraphCase>>(graph_cases(max_n, 2, max_n, {3, 4}));
  Plan p;
  p.family = "connected n<=" + std::to_string(max_n) + " |S|>=2 l in {3,4}";
  p.count = cases->size();
  p.check = [cases](std::size_t i) -> std::optional<VerificationFailure> {
    const auto& [g, s, ell] = (*cases)[i];
    const std::string text = graph_instance(g, s, "l " + std::to_string(ell));
    const ReductionOutput out = reduce_lambda2_to_lambdal(g, s, ell);
    const int k = static_cast<int>(s.size());
    if (out.graph.order() != g.order() + 3 * k + ell - 2 || out.graph.size() != g.size() + 4 * k + k * (ell - 2) ||
        out.threshold != ell) {
      return failure(text, "graph", "-", "-", "size identity");
    }
    for (Vertex v : out.terminals) {
      if (out.graph.degree(v) != ell) return failure(text, "graph", "-", "-", "new terminal degree differs from l");
    }
    const auto lhs = find_lambda_packing(g, s, 2);
    const auto rhs = find_lambda_packing(out.graph, out.terminals, ell);
    if (lhs.has_value() != rhs.has_value()) {
      return failure(text, "graph", verdict(lhs.has_value()), verdict(rhs.has_value()), "lambda 2 vs lambda l");
    }
    if (lhs) {
      if (auto bad = packing_unsound(g, s, *lhs, Disjointness::Edge, text, "source")) return bad;
      return packing_unsound(out.graph, out.terminals, *rhs, Disjointness::Edge, text, "target");
    }
    return std::nullopt;
  };
  return p;
}

Plan make_plan(const std::string& name, const VerifyBudget& b) {
  if (name == "R1") return plan_r1(b);
  if (name == "R2") return plan_r2(b);
  if (name == "R3") return plan_r3(b);
  if (name == "R4") return plan_r4(b);
  if (name == "R5") return plan_r5(b);
  if (name == "R6") return plan_r6(b);
  throw ValidationError("unknown reduction " + name);
}

std::optional<VerificationFailure> guarded(const Check& check, std::size_t i) {
  try {
    return check(i);
  } catch (const std::exception& e) {
    return failure("instance " + std::to_string(i) + "\n", "txt", "-", "-", std::string("exception: ") + e.what());
  }
}

}  // namespace

std::vector<Graph> gen_connected_graphs(int max_n) {
  guard(max_n >= 1 && max_n <= 6, "connected graphs need 1 <= max_n <= 6");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<Edge> es;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) es.push_back(pairs[i]);
      }
      Graph g(n, std::move(es));
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<ThreeDMInstance> gen_3dm(int max_n, int max_m) {
  guard(max_n >= 1 && max_n <= 2, "3-DM needs 1 <= max_n <= 2");
  guard(max_m >= 0 && max_m <= 8, "3-DM needs 0 <= max_m <= 8");
  std::vector<ThreeDMInstance> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Triple> universe;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) universe.push_back({u, v, w});
      }
    }
    const int top = std::min<int>(max_m, static_cast<int>(universe.size()));
    for (int m = 0; m <= top; ++m) {
      for (const auto& pick : combinations(static_cast<int>(universe.size()), m)) {
        ThreeDMInstance inst{n, {}};
        for (int i : pick) inst.triples.push_back(universe[i]);
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

std::vector<CnfFormula> gen_cnf_exhaustive(int max_vars, int max_clauses) {
  guard(max_vars >= 1 && max_vars <= 2 && max_clauses >= 1 && max_clauses <= 2,
        "exhaustive CNF needs n <= 2 and m <= 2");
  std::vector<CnfFormula> out;
  for (int n = 1; n <= max_vars; ++n) {
    // Literal index 2(i-1) is x_i, 2(i-1)+1 its negation.
    std::vector<std::array<int, 3>> clauses;
    for (const auto& c : multisets(2 * n, 3)) {
      std::array<int, 3> clause{};
      for (int j = 0; j < 3; ++j) clause[j] = (c[j] % 2 == 0 ? 1 : -1) * (c[j] / 2 + 1);
      clauses.push_back(clause);
    }
    for (int m = 1; m <= max_clauses; ++m) {
      for (const auto& pick : multisets(static_cast<int>(clauses.size()), m)) {
        CnfFormula phi{n, {}};
        for (int i : pick) phi.clauses.push_back(clauses[i]);
        out.push_back(std::move(phi));
      }
    }
  }
  return out;
}

std::vector<CnfFormula> gen_cnf_random(int count, int max_vars, int max_clauses, std::uint64_t seed) {
  guard(count >= 0 && max_vars >= 1 && max_vars <= kMaxSatVars && max_clauses >= 1 && max_clauses <= 64,
        "random CNF needs 1 <= n <= 24 and 1 <= m <= 64");
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the stream reproducible across standard libraries.
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<CnfFormula> out;
  for (int f = 0; f < count; ++f) {
    CnfFormula phi;
    phi.num_vars = pick(1, max_vars);
    const int m = pick(1, max_clauses);
    for (int j = 0; j < m; ++j) {
      std::array<int, 3> clause{};
      for (int& lit : clause) lit = pick(1, phi.num_vars) * (pick(0, 1) == 0 ? 1 : -1);
      phi.clauses.push_back(clause);
    }
    out.push_back(std::move(phi));
  }
  return out;
}

std::vector<CnfFormula> gen_cnf(int max_vars, int max_clauses, std::uint64_t seed) {
  std::vector<CnfFormula> out = gen_cnf_exhaustive(2, 2);
  for (auto& phi : gen_cnf_random(200, max_vars, max_clauses, seed)) out.push_back(std::move(phi));
  return out;
}

std::vector<Graph> gen_tripartite_graphs(int max_q) {
  guard(max_q >= 1 && max_q <= 2, "tripartite graphs need 1 <= q <= 2");
  std::vector<Graph> out;
  for (int q = 1; q <= max_q; ++q) {
    std::vector<Part> parts(3 * q);
    for (Vertex x = 0; x < 3 * q; ++x) parts[x] = static_cast<Part>(x / q);
    std::vector<Edge> cross;
    for (Vertex u = 0; u < 3 * q; ++u) {
      for (Vertex v = u + 1; v < 3 * q; ++v) {
        if (parts[u] != parts[v]) cross.emplace_back(u, v);
      }
    }
    for (std::uint32_t mask = 0; mask < (1U << cross.size()); ++mask) {
      std::vector<Edge> es;
      for (std::size_t i = 0; i < cross.size(); ++i) {
        if ((mask >> i) & 1U) es.push_back(cross[i]);
      }
      out.emplace_back(3 * q, std::move(es), parts);
    }
  }
  return out;
}

const std::vector<std::string>& reduction_names() {
  static const std::vector<std::string> names{"R1", "R2", "R3", "R4", "R5", "R6"};
  return names;
}

VerificationReport verify_reduction(const std::string& name, const VerifyBudget& budget) {
  const auto start = std::chrono::steady_clock::now();
  const Plan plan = make_plan(name, budget);
  std::vector<std::optional<VerificationFailure>> results(plan.count);
  const long total = static_cast<long>(plan.count);
  if (budget.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < total; ++i) results[i] = guarded(plan.check, static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < total; ++i) results[i] = guarded(plan.check, static_cast<std::size_t>(i));
  }

  VerificationReport report;
  report.reduction = name;
  report.family = plan.family;
  report.seed = budget.seed;
  report.instances_checked = total;
  report.timing = budget.timing;
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  std::sort(report.failures.begin(), report.failures.end(), [](const auto& a, const auto& b) {
    return std::tie(a.instance, a.note) < std::tie(b.instance, b.note);
  });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string serialize_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "# verification report\n";
  out << "reduction " << r.reduction << "\n";
  out << "family " << r.family << "\n";
  out << "seed " << r.seed << "\n";
  out << "instances " << r.instances_checked << "\n";
  out << "failures " << r.failures.size() << "\n";
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    const auto& f = r.failures[i];
    out << "--- failure " << i + 1 << "\n";
    out << "lhs " << f.lhs << "\n";
    out << "rhs " << f.rhs << "\n";
    out << "note " << f.note << "\n";
    out << f.instance;
    out << "--- end\n";
  }
  out << (r.passed() ? "PASS " : "FAIL ") << r.reduction << " " << r.instances_checked << " " << r.failures.size()
      << " ";
  if (r.timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    out << buf;
  } else {
    out << "-";
  }
  out << "\n";
  return out.str();
}

void write_failure_artifacts(const VerificationReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    const auto& f = report.failures[i];
    write_file(dir / (report.reduction + "-" + std::to_string(i + 1) + "." + f.extension), f.instance);
  }
}

}  // namespace gcon
