#pragma once

#include <climits>
#include <vector>

#include "gcon/detail/search_graph.hpp"

namespace gcon::detail {

struct Packing {
  int value = 0;
  std::vector<Mask> trees;  // edge masks
};

/// Largest internally disjoint packing, stopping once `cap` trees are found.
Packing max_kappa_packing(const SearchGraph& g, const Mask& terminals, int cap = INT_MAX);

/// Largest edge-disjoint packing, stopping once `cap` trees are found.
Packing max_lambda_packing(const SearchGraph& g, const Mask& terminals, int cap = INT_MAX);

}  // namespace gcon::detail
