#include <algorithm>
#include <atomic>
#include <climits>
#include <string>
#include <vector>

#include "gcon/detail/packing.hpp"
#include "gcon/errors.hpp"
#include "gcon/graph_ops.hpp"
#include "gcon/solver.hpp"

namespace gcon {

namespace {

enum class Measure { Kappa, Lambda };

void check_global(const Graph& g, int k, bool force) {
  if (k < 2 || k > g.order()) throw ValidationError("k must satisfy 2 <= k <= n");
  if (g.order() > kGlobalGuardOrder && !force) {
    throw GuardError("graph order " + std::to_string(g.order()) + " exceeds " + std::to_string(kGlobalGuardOrder) +
                     "; pass force to override");
  }
}

std::vector<std::vector<Vertex>> k_subsets(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return out;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

int min_degree(const Graph& g) {
  int d = INT_MAX;
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

// Every k-set's value is capped by the best found so far: only whether a set
// beats the current minimum matters, so each search may stop at that cap.
int parallel_min(const Graph& g, int k, Measure measure) {
  const detail::SearchGraph sg(g);
  const auto subsets = k_subsets(g.order(), k);
  std::atomic<int> best(min_degree(g));
  const long total = static_cast<long>(subsets.size());

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) {
    const int cap = best.load(std::memory_order_relaxed);
    if (cap == 0) continue;
    const Mask terminals = detail::to_mask(VertexSet(subsets[i]));
    const int value = measure == Measure::Kappa ? detail::max_kappa_packing(sg, terminals, cap).value
                                                : detail::max_lambda_packing(sg, terminals, cap).value;
    int seen = best.load(std::memory_order_relaxed);
    while (value < seen && !best.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
    }
  }
  return best.load();
}

int serial_min(const Graph& g, int k, Measure measure) {
  int best = INT_MAX;
  for (const auto& subset : k_subsets(g.order(), k)) {
    const VertexSet s(subset);
    best = std::min(best, measure == Measure::Kappa ? kappa_set(g, s).value : lambda_set(g, s).value);
  }
  return best;
}

}  // namespace

int kappa_k(const Graph& g, int k, bool force) {
  check_global(g, k, force);
  if (!is_connected(g)) return 0;
  return parallel_min(g, k, Measure::Kappa);
}

int lambda_k(const Graph& g, int k, bool force) {
  check_global(g, k, force);
  if (!is_connected(g)) return 0;
  return parallel_min(g, k, Measure::Lambda);
}

int kappa_k_serial(const Graph& g, int k, bool force) {
  check_global(g, k, force);
  if (!is_connected(g)) return 0;
  return serial_min(g, k, Measure::Kappa);
}

int lambda_k_serial(const Graph& g, int k, bool force) {
  check_global(g, k, force);
  if (!is_connected(g)) return 0;
  return serial_min(g, k, Measure::Lambda);
}

}  // namespace gcon
