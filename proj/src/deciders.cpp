#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "gcon/errors.hpp"
#include "gcon/solver.hpp"

namespace gcon {

namespace {

bool match_from(const std::vector<std::vector<Triple>>& by_u, int u, std::vector<bool>& used_v,
                std::vector<bool>& used_w) {
  if (u == static_cast<int>(by_u.size())) return true;
  for (const Triple& t : by_u[u]) {
    if (used_v[t.v] || used_w[t.w]) continue;
    used_v[t.v] = used_w[t.w] = true;
    if (match_from(by_u, u + 1, used_v, used_w)) return true;
    used_v[t.v] = used_w[t.w] = false;
  }
  return false;
}

// Exact cover of the vertex set by candidate triples, branching on the
// uncovered vertex with the fewest live candidates.
class TripleCover {
 public:
  TripleCover(int n, std::vector<RainbowTriple> candidates)
      : candidates_(std::move(candidates)), by_vertex_(n), covered_(n, false) {
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      for (Vertex x : candidates_[i]) by_vertex_[x].push_back(static_cast<int>(i));
    }
  }

  std::optional<std::vector<RainbowTriple>> solve() {
    if (search()) return chosen_;
    return std::nullopt;
  }

 private:
  bool live(int i) const {
    const auto& t = candidates_[i];
    return !covered_[t[0]] && !covered_[t[1]] && !covered_[t[2]];
  }

  bool search() {
    int pivot = -1;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t x = 0; x < covered_.size(); ++x) {
      if (covered_[x]) continue;
      std::size_t count = 0;
      for (int i : by_vertex_[x]) count += live(i) ? 1 : 0;
      if (count < fewest) {
        fewest = count;
        pivot = static_cast<int>(x);
        if (count == 0) return false;
      }
    }
    if (pivot < 0) return true;
    for (int i : by_vertex_[pivot]) {
      if (!live(i)) continue;
      const auto& t = candidates_[i];
      for (Vertex x : t) covered_[x] = true;
      chosen_.push_back(t);
      if (search()) return true;
      chosen_.pop_back();
      for (Vertex x : t) covered_[x] = false;
    }
    return false;
  }

  std::vector<RainbowTriple> candidates_;
  std::vector<std::vector<int>> by_vertex_;
  std::vector<bool> covered_;
  std::vector<RainbowTriple> chosen_;
};

bool satisfies(const CnfFormula& phi, std::uint32_t assignment) {
  for (const auto& clause : phi.clauses) {
    bool hit = false;
    for (int lit : clause) {
      const bool value = (assignment >> (std::abs(lit) - 1)) & 1U;
      if ((lit > 0) == value) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool decide_3dm(const ThreeDMInstance& inst) {
  inst.validate();
  std::vector<std::vector<Triple>> by_u(inst.n);
  for (const Triple& t : inst.triples) by_u[t.u].push_back(t);
  std::vector<bool> used_v(inst.n, false);
  std::vector<bool> used_w(inst.n, false);
  return match_from(by_u, 0, used_v, used_w);
}

std::optional<std::vector<RainbowTriple>> find_problem1_partition(const Graph& g) {
  if (!g.is_tagged()) throw ValidationError("graph carries no tripartition");
  std::array<std::vector<Vertex>, 3> parts;
  for (Vertex x = 0; x < g.order(); ++x) parts[static_cast<int>(g.part(x))].push_back(x);
  if (parts[0].size() != parts[1].size() || parts[1].size() != parts[2].size()) {
    throw ValidationError("tripartition parts differ in size");
  }

  // A triple induces a connected graph iff at least two of its pairs are edges.
  std::vector<RainbowTriple> candidates;
  for (Vertex u : parts[0]) {
    for (Vertex v : parts[1]) {
      const int uv = g.has_edge(u, v) ? 1 : 0;
      for (Vertex w : parts[2]) {
        if (uv + (g.has_edge(u, w) ? 1 : 0) + (g.has_edge(v, w) ? 1 : 0) >= 2) candidates.push_back({u, v, w});
      }
    }
  }
  return TripleCover(g.order(), std::move(candidates)).solve();
}

bool decide_problem1(const Graph& g) { return find_problem1_partition(g).has_value(); }

std::optional<std::vector<bool>> find_satisfying_assignment(const CnfFormula& phi) {
  phi.validate();
  if (phi.num_vars > kMaxSatVars) {
    throw GuardError("exhaustive 3-SAT is limited to " + std::to_string(kMaxSatVars) + " variables");
  }
  const std::uint32_t total = 1U << phi.num_vars;
  for (std::uint32_t a = 0; a < total; ++a) {
    if (!satisfies(phi, a)) continue;
    std::vector<bool> out(phi.num_vars);
    for (int i = 0; i < phi.num_vars; ++i) out[i] = (a >> i) & 1U;
    return out;
  }
  return std::nullopt;
}

bool decide_3sat(const CnfFormula& phi) { return find_satisfying_assignment(phi).has_value(); }

}  // namespace gcon
