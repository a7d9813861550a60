#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcon/graph.hpp"
#include "gcon/io.hpp"
#include "gcon/solver.hpp"

namespace gcon {

/// A constructed instance. `threshold` is q for the rainbow-partition target
/// and the packing size l otherwise; `terminals` is empty when the target
/// problem has none. `gadget_map` labels every vertex the reduction added.
struct ReductionOutput {
  std::string name;
  Graph graph;
  VertexSet terminals;
  std::optional<int> threshold;
  std::map<Vertex, std::string> gadget_map;
};

/// Graph file plus `# reduction`, `# threshold` and `# role` comment lines.
GraphDocument to_document(const ReductionOutput& out);
std::string serialize_reduction(const ReductionOutput& out);

// Per-triple gadget of the 3-DM construction. Each arm is a 7-vertex path
// position list p0..p6: (u, t1..t6), (v, t7..t12), (w, t13..t18). Every arm
// uses the same 8 edges between positions, and two center edges tie the arm
// ends t6, t12, t18 together: 3*8 + 2 = 26 edges.
inline constexpr std::array<std::pair<int, int>, 8> kArmEdges{
    {{0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {3, 4}, {4, 5}, {5, 6}}};
inline constexpr std::array<std::pair<int, int>, 2> kCenterEdges{{{6, 12}, {12, 18}}};  // gadget t-indices

/// 3-DM to rainbow connected partition. Vertices: U = 0..n-1, V = n..2n-1,
/// W = 2n..3n-1, then 18 vertices t1..t18 per triple in triple order.
/// Threshold is q = n + 6m.
ReductionOutput reduce_3dm_to_p1(const ThreeDMInstance& inst);

/// Rainbow partition to kappa({a,b,c}) >= q. Apexes a, b, c get ids n, n+1,
/// n+2 and are joined to every vertex of U-bar, V-bar, W-bar respectively.
ReductionOutput reduce_p1_to_kappa(const Graph& g);

/// lambda to kappa: the original vertices (now pairwise nonadjacent), one
/// vertex per edge (ids n + edge index) forming the line graph, and each
/// edge-vertex joined to its two endpoints. Terminals are unchanged.
ReductionOutput reduce_lambda_to_kappa(const Graph& g, const VertexSet& s);

/// Grows a 3-terminal lambda instance to k terminals. Hub i is followed by
/// its l spokes; every spoke is joined to the hub and to the first terminal.
ReductionOutput reduce_lambda3_to_lambdak(const Graph& g, const VertexSet& s, int ell, int k);

/// 3-SAT to lambda(S) >= 2. Variable i (1-based) owns ids 3(i-1)..3(i-1)+2
/// for x-hat, x, x-bar; clause j owns 3n+2(j-1) (c_j) and the next id (c'_j);
/// a and b come last.
ReductionOutput reduce_3sat_to_lambda2(const CnfFormula& phi);

/// lambda(S) >= 2 to lambda(S') >= l. Terminal v_i (sorted order) gets
/// v'_i, v^1_i, v^2_i in that order; hubs a_1..a_{l-2} come last.
ReductionOutput reduce_lambda2_to_lambdal(const Graph& g, const VertexSet& s, int ell);

/// The q internally disjoint trees of the apex construction built from a
/// rainbow partition of g: a spanning tree of each triple plus its three
/// apex edges. Trees are expressed in the ids of reduce_p1_to_kappa(g).
std::vector<SteinerTree> apex_trees_from_partition(const Graph& g, const std::vector<RainbowTriple>& partition);

}  // namespace gcon
