#include <doctest.h>

#include <set>

#include "gcon/errors.hpp"
#include "gcon/graph_ops.hpp"
#include "gcon/io.hpp"
#include "gcon/reductions.hpp"
#include "gcon/solver.hpp"
#include "gcon/tree_enum.hpp"

using namespace gcon;

namespace {

Graph complete(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  }
  return Graph(n, es);
}

const Graph kP3(3, {{0, 1}, {1, 2}});

// Induced subgraph on `vs` is connected.
bool joined(const Graph& g, std::initializer_list<Vertex> vs) { return is_connected(g, VertexSet(vs)); }

}  // namespace

TEST_CASE("3-DM gadget sizes") {
  const ReductionOutput one = reduce_3dm_to_p1({1, {{0, 0, 0}}});
  CHECK(one.graph.order() == 21);
  CHECK(one.graph.size() == 26);
  CHECK(one.threshold == 7);
  CHECK(one.gadget_map.size() == 18);
  CHECK(one.gadget_map.at(3) == "t_{1,1}");

  const ReductionOutput three = reduce_3dm_to_p1({2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}}});
  CHECK(three.graph.order() == 60);
  CHECK(three.graph.size() == 78);
  CHECK(three.threshold == 20);
  CHECK_THROWS_AS(reduce_3dm_to_p1({0, {}}), ValidationError);
}

TEST_CASE("3-DM gadget honors the part assignment and the named triples") {
  const ReductionOutput out = reduce_3dm_to_p1({1, {{0, 0, 0}}});
  const Graph& g = out.graph;
  // Vertices: u=0, v=1, w=2, t_j = 2 + j.
  auto t = [](int j) { return 2 + j; };
  for (int j : {3, 6, 7, 10, 13, 16}) CHECK(g.part(t(j)) == Part::U);
  for (int j : {1, 4, 9, 12, 14, 17}) CHECK(g.part(t(j)) == Part::V);
  for (int j : {2, 5, 8, 11, 15, 18}) CHECK(g.part(t(j)) == Part::W);

  // Sets used when the triple is in the matching, and when it is not.
  const std::vector<std::array<Vertex, 3>> named{
      {0, t(1), t(2)},     {1, t(7), t(8)},      {2, t(13), t(14)},    {t(3), t(4), t(5)},   {t(9), t(10), t(11)},
      {t(15), t(16), t(17)}, {t(6), t(12), t(18)}, {t(1), t(2), t(3)},   {t(4), t(5), t(6)},   {t(7), t(8), t(9)},
      {t(10), t(11), t(12)}, {t(13), t(14), t(15)}, {t(16), t(17), t(18)}, {t(1), t(3), t(5)}, {0, t(2), t(4)},
      {t(6), t(11), t(12)}, {t(8), t(10), 1},      {t(7), t(8), 1}};
  for (const auto& tri : named) CHECK(joined(g, {tri[0], tri[1], tri[2]}));
  CHECK(decide_problem1(g));
}

TEST_CASE("3-DM gadget preserves the answer on single-triple instances") {
  CHECK(decide_problem1(reduce_3dm_to_p1({1, {{0, 0, 0}}}).graph) == decide_3dm({1, {{0, 0, 0}}}));
  CHECK_FALSE(decide_problem1(reduce_3dm_to_p1({2, {{0, 0, 0}}}).graph));
}

TEST_CASE("apex construction") {
  using P = Part;
  const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}}, std::vector<Part>{P::U, P::V, P::W});
  const ReductionOutput out = reduce_p1_to_kappa(tri);
  CHECK(out.graph.order() == 6);
  CHECK(out.graph.size() == 6);
  CHECK(out.terminals == VertexSet{3, 4, 5});
  CHECK(out.threshold == 1);
  for (Vertex a : out.terminals) CHECK(out.graph.degree(a) == 1);
  CHECK(decide_kappa_set(out.graph, out.terminals, 1));

  const Graph bare(3, {}, std::vector<Part>{P::U, P::V, P::W});
  const ReductionOutput none = reduce_p1_to_kappa(bare);
  CHECK_FALSE(decide_kappa_set(none.graph, none.terminals, 1));
  CHECK_FALSE(decide_problem1(bare));

  CHECK_THROWS_AS(reduce_p1_to_kappa(Graph(2, {}, std::vector<Part>{P::U, P::V})), ValidationError);
  CHECK_THROWS_AS(reduce_p1_to_kappa(Graph(3)), ValidationError);
}

TEST_CASE("apex trees from a partition are internally disjoint") {
  using P = Part;
  const Graph two(6, {{0, 2}, {2, 4}, {1, 3}, {3, 5}, {0, 3}}, std::vector<Part>{P::U, P::U, P::V, P::V, P::W, P::W});
  const auto partition = find_problem1_partition(two);
  REQUIRE(partition.has_value());
  const ReductionOutput out = reduce_p1_to_kappa(two);
  const auto trees = apex_trees_from_partition(two, *partition);
  CHECK(trees.size() == 2);
  CHECK(is_valid_packing(out.graph, out.terminals, trees, Disjointness::Internal));
}

TEST_CASE("line-graph augmentation") {
  const ReductionOutput p3 = reduce_lambda_to_kappa(kP3, VertexSet{0, 2});
  CHECK(p3.graph.order() == 5);
  CHECK(p3.graph.size() == 5);
  CHECK_FALSE(p3.threshold.has_value());
  CHECK(kappa_set(p3.graph, p3.terminals).value == 1);
  CHECK(lambda_set(kP3, VertexSet{0, 2}).value == 1);

  const ReductionOutput k3 = reduce_lambda_to_kappa(complete(3), VertexSet::range(3));
  CHECK(k3.graph.order() == 6);
  CHECK(k3.graph.size() == 9);
  CHECK(kappa_set(k3.graph, k3.terminals).value == 1);

  const ReductionOutput k4 = reduce_lambda_to_kappa(complete(4), VertexSet::range(4));
  CHECK(kappa_set(k4.graph, k4.terminals).value == 2);
  CHECK(lambda_set(complete(4), VertexSet::range(4)).value == 2);

  CHECK_THROWS_AS(reduce_lambda_to_kappa(Graph(3, {{0, 1}}), VertexSet{0, 1}), ValidationError);
}

TEST_CASE("k-expansion") {
  const Graph k4 = complete(4);
  const ReductionOutput out = reduce_lambda3_to_lambdak(k4, VertexSet{0, 1, 2}, 2, 4);
  CHECK(out.graph.order() == 7);
  CHECK(out.graph.size() == 10);
  CHECK(out.terminals.size() == 4);
  CHECK(out.gadget_map.at(4) == "a^1");
  CHECK(decide_lambda_set(k4, VertexSet{0, 1, 2}, 2));
  CHECK(decide_lambda_set(out.graph, out.terminals, 2));

  const ReductionOutput big = reduce_lambda3_to_lambdak(k4, VertexSet{0, 1, 2}, 3, 5);
  CHECK(big.graph.order() == 4 + 8);
  CHECK(big.graph.size() == 6 + 12);

  const ReductionOutput p3 = reduce_lambda3_to_lambdak(kP3, VertexSet::range(3), 2, 4);
  CHECK_FALSE(decide_lambda_set(kP3, VertexSet::range(3), 2));
  CHECK_FALSE(decide_lambda_set(p3.graph, p3.terminals, 2));

  CHECK_THROWS_AS(reduce_lambda3_to_lambdak(k4, VertexSet{0, 1}, 2, 4), ValidationError);
  CHECK_THROWS_AS(reduce_lambda3_to_lambdak(k4, VertexSet{0, 1, 2}, 2, 3), ValidationError);
}

TEST_CASE("3-SAT construction sizes and small verdicts") {
  const CnfFormula single{1, {{1, 1, 1}}};
  const ReductionOutput out = reduce_3sat_to_lambda2(single);
  CHECK(out.graph.order() == 7);
  CHECK(out.threshold == 2);
  CHECK(decide_3sat(single));
  CHECK(decide_lambda_set(out.graph, out.terminals, 2));

  const CnfFormula contra{1, {{1, 1, 1}, {-1, -1, -1}}};
  CHECK_FALSE(decide_3sat(contra));
  const ReductionOutput c = reduce_3sat_to_lambda2(contra);
  CHECK_FALSE(decide_lambda_set(c.graph, c.terminals, 2));

  const CnfFormula wide{3, {{1, 2, 3}, {-1, 2, -3}}};
  CHECK(reduce_3sat_to_lambda2(wide).graph.order() == 15);
  CHECK_THROWS_AS(reduce_3sat_to_lambda2({1, {}}), ValidationError);
}

// Once a second variable exists the cross edges let one tree reach both
// x_1 and xbar_1, so an unsatisfiable formula still admits two trees.
TEST_CASE("3-SAT construction admits two trees for a contradiction over two variables") {
  const CnfFormula phi{2, {{1, 1, 1}, {-1, -1, -1}}};
  CHECK_FALSE(decide_3sat(phi));
  const ReductionOutput out = reduce_3sat_to_lambda2(phi);
  const auto trees = find_lambda_packing(out.graph, out.terminals, 2);
  REQUIRE(trees.has_value());
  CHECK(is_valid_packing(out.graph, out.terminals, *trees, Disjointness::Edge));
}

TEST_CASE("l-expansion") {
  const ReductionOutput k4 = reduce_lambda2_to_lambdal(complete(4), VertexSet{0, 1}, 3);
  CHECK(k4.graph.order() == 4 + 3 * 2 + 1);
  CHECK(k4.graph.size() == 6 + 4 * 2 + 2 * 1);
  for (Vertex v : k4.terminals) CHECK(k4.graph.degree(v) == 3);
  CHECK(decide_lambda_set(complete(4), VertexSet{0, 1}, 2));
  CHECK(decide_lambda_set(k4.graph, k4.terminals, 3));

  const ReductionOutput p3 = reduce_lambda2_to_lambdal(kP3, VertexSet{0, 2}, 3);
  CHECK_FALSE(decide_lambda_set(kP3, VertexSet{0, 2}, 2));
  CHECK_FALSE(decide_lambda_set(p3.graph, p3.terminals, 3));

  CHECK_THROWS_AS(reduce_lambda2_to_lambdal(kP3, VertexSet{0, 2}, 2), ValidationError);
}

TEST_CASE("reduction outputs serialize with roles and parse back") {
  const ReductionOutput out = reduce_lambda2_to_lambdal(kP3, VertexSet{0, 2}, 4);
  const GraphDocument doc = parse_graph_document(serialize_reduction(out));
  CHECK(doc.graph == out.graph.canonical());
  CHECK(doc.terminals == out.terminals);
  CHECK(doc.threshold == 4);
  CHECK(doc.reduction == "expand-l");
  CHECK(doc.roles == out.gadget_map);
  std::set<std::string> labels;
  for (const auto& [v, role] : out.gadget_map) labels.insert(role);
  CHECK(labels.size() == out.gadget_map.size());
}
