#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gcon/graph.hpp"

namespace gcon {

/// Maximum packing of S-trees together with a witness realizing it.
struct PackingResult {
  int value = 0;
  std::vector<SteinerTree> witness;
};

/// kappa(S): most pairwise internally disjoint S-trees. 0 when S is split
/// across components.
PackingResult kappa_set(const Graph& g, const VertexSet& s);

/// lambda(S): most pairwise edge-disjoint S-trees.
PackingResult lambda_set(const Graph& g, const VertexSet& s);

/// First packing of `target` trees found, or nullopt. The search stops as
/// soon as one exists.
std::optional<std::vector<SteinerTree>> find_kappa_packing(const Graph& g, const VertexSet& s, int target);
std::optional<std::vector<SteinerTree>> find_lambda_packing(const Graph& g, const VertexSet& s, int target);

bool decide_kappa_set(const Graph& g, const VertexSet& s, int target);
bool decide_lambda_set(const Graph& g, const VertexSet& s, int target);

/// Graphs above this order need `force` in kappa_k / lambda_k.
inline constexpr int kGlobalGuardOrder = 16;

/// min kappa(S) over all k-subsets; 0 for disconnected g. The k-subsets are
/// evaluated in parallel with a shared running minimum as search cap.
int kappa_k(const Graph& g, int k, bool force = false);
int lambda_k(const Graph& g, int k, bool force = false);

/// Reference versions: one uncapped kappa_set / lambda_set per subset, in
/// order, on the calling thread.
int kappa_k_serial(const Graph& g, int k, bool force = false);
int lambda_k_serial(const Graph& g, int k, bool force = false);

/// Classical vertex connectivity from unit-capacity vertex-split flows over
/// all nonadjacent pairs; K_n gives n-1.
int classical_kappa(const Graph& g);
/// Classical edge connectivity: min over t of the 0-t edge flow.
int classical_lambda(const Graph& g);

/// Most internally disjoint u-v paths (the edge uv counts as one path).
int local_vertex_connectivity(const Graph& g, Vertex u, Vertex v);
/// Most edge-disjoint u-v paths.
int local_edge_connectivity(const Graph& g, Vertex u, Vertex v);

/// A perfect 3-dimensional matching exists.
bool decide_3dm(const ThreeDMInstance& inst);

using RainbowTriple = std::array<Vertex, 3>;  // (U-bar, V-bar, W-bar) members

/// Partition of a balanced tripartite graph into connected rainbow triples,
/// or nullopt. Throws ValidationError for a missing or unbalanced tag.
std::optional<std::vector<RainbowTriple>> find_problem1_partition(const Graph& g);
bool decide_problem1(const Graph& g);

/// Exhaustive satisfiability; GuardError above kMaxSatVars variables.
inline constexpr int kMaxSatVars = 24;
bool decide_3sat(const CnfFormula& phi);
std::optional<std::vector<bool>> find_satisfying_assignment(const CnfFormula& phi);

}  // namespace gcon
