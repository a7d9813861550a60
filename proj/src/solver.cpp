#include "gcon/solver.hpp"

#include "gcon/detail/packing.hpp"
#include "gcon/errors.hpp"

namespace gcon {

namespace {

using detail::Packing;
using detail::SearchGraph;

void check_terminals(const Graph& g, const VertexSet& s) {
  if (s.size() < 2) throw ValidationError("terminal set needs at least two vertices");
  s.check_within(g.order());
}

void check_target(int target) {
  if (target < 0) throw ValidationError("packing target must be nonnegative");
}

std::vector<SteinerTree> to_trees(const SearchGraph& sg, const std::vector<Mask>& masks) {
  std::vector<SteinerTree> out;
  out.reserve(masks.size());
  for (const Mask& m : masks) out.push_back(detail::to_tree(sg, m));
  return out;
}

template <typename Kernel>
PackingResult maximize(const Graph& g, const VertexSet& s, Kernel kernel) {
  check_terminals(g, s);
  const SearchGraph sg(g);
  Packing p = kernel(sg, detail::to_mask(s), INT_MAX);
  return {p.value, to_trees(sg, p.trees)};
}

template <typename Kernel>
std::optional<std::vector<SteinerTree>> reach_target(const Graph& g, const VertexSet& s, int target, Kernel kernel) {
  check_terminals(g, s);
  check_target(target);
  if (target == 0) return std::vector<SteinerTree>{};
  const SearchGraph sg(g);
  Packing p = kernel(sg, detail::to_mask(s), target);
  if (p.value < target) return std::nullopt;
  p.trees.resize(target);
  return to_trees(sg, p.trees);
}

}  // namespace

PackingResult kappa_set(const Graph& g, const VertexSet& s) {
  return maximize(g, s, detail::max_kappa_packing);
}

PackingResult lambda_set(const Graph& g, const VertexSet& s) {
  return maximize(g, s, detail::max_lambda_packing);
}

std::optional<std::vector<SteinerTree>> find_kappa_packing(const Graph& g, const VertexSet& s, int target) {
  return reach_target(g, s, target, detail::max_kappa_packing);
}

std::optional<std::vector<SteinerTree>> find_lambda_packing(const Graph& g, const VertexSet& s, int target) {
  return reach_target(g, s, target, detail::max_lambda_packing);
}

bool decide_kappa_set(const Graph& g, const VertexSet& s, int target) {
  return find_kappa_packing(g, s, target).has_value();
}

bool decide_lambda_set(const Graph& g, const VertexSet& s, int target) {
  return find_lambda_packing(g, s, target).has_value();
}

}  // namespace gcon
