// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ckskit/ckskit.hpp"
#include "oracles.hpp"

namespace ckskit {
namespace {

std::vector<oracle::Mask> masks(const std::vector<EdgeSet>& v) {
  std::vector<oracle::Mask> out;
  for (EdgeSet s : v) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Mask> sorted(std::vector<oracle::Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Graph, SmallGraphsHaveExpectedSize) {
  Graph theta = theta_graph();
  EXPECT_EQ(theta.num_vertices(), 2);
  EXPECT_EQ(theta.num_edges(), 3);
  EXPECT_EQ(theta.genus(), 2);
  EXPECT_EQ(loop_graph().num_vertices(), 1);
  EXPECT_EQ(loop_graph().genus(), 1);
  EXPECT_EQ(bridge_graph().num_vertices(), 2);
  EXPECT_EQ(bridge_graph().genus(), 0);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(graph_from_dsl("a-b c-d"), DisconnectedGraph);
  EXPECT_THROW(graph_from_dsl(""), EmptyGraph);
  EXPECT_THROW(graph_from_dsl("x:a-b x:b-c"), InvalidGraph);
  EXPECT_THROW(graph_from_dsl("a-b-c"), ParseError);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"vertices": 2})")), ParseError);
}

TEST(Graph, RelabelsVerticesCanonically) {
  EXPECT_EQ(graph_from_dsl("x:p-q y:p-q z:p-q"), theta_graph());
  EXPECT_EQ(graph_from_dsl("x:q-p y:q-p z:q-p"), theta_graph());
}

TEST(Graph, JsonAndDslRoundTrip) {
  for (const auto& ng : named_graphs()) {
    EXPECT_EQ(graph_from_json(graph_to_json(ng.graph)), ng.graph) << ng.name;
    EXPECT_EQ(graph_from_dsl(graph_to_dsl(ng.graph)), ng.graph) << ng.name;
    EXPECT_EQ(serialize(graph_from_json(nlohmann::json::parse(serialize(ng.graph)))),
              serialize(ng.graph));
  }
}

TEST(Graph, JsonOrderFieldReordersEdges) {
  auto j = nlohmann::json::parse(
      R"({"vertices": 2, "edges": [[0,1],[0,1],[0,1]], "labels": ["x","y","z"],
          "order": ["z","x","y"]})");
  Graph g = graph_from_json(j);
  EXPECT_EQ(g.edge(0).label, "z");
  EXPECT_EQ(g.edge(2).label, "y");
}

TEST(Graph, DeletionAndContraction) {
  Graph theta = theta_graph();
  const int z = theta.index_of("z");
  Graph del = deletion(theta, EdgeSet{z});
  EXPECT_EQ(del.num_vertices(), 2);
  EXPECT_EQ(del.labels(del.all_edges()), (std::vector<std::string>{"x", "y"}));
  Graph con = contraction(theta, EdgeSet{z});
  EXPECT_EQ(con.num_vertices(), 1);
  EXPECT_TRUE(con.is_loop(0) && con.is_loop(1));

  Graph a = contraction(deletion(theta, EdgeSet{theta.index_of("x")}), EdgeSet{0});
  Graph b = deletion(contraction(theta, EdgeSet{theta.index_of("y")}), EdgeSet{0});
  EXPECT_EQ(a, b);
  EXPECT_THROW(deletion(bridge_graph(), EdgeSet{0}), BondDeletion);
}

TEST(Graph, BondsAndCyclesMatchBruteForce) {
  for (const auto& ng : default_corpus(4)) {
    auto el = oracle::edges_of(ng.graph);
    EXPECT_EQ(masks(enumerate_bonds(ng.graph)), sorted(oracle::bonds(el))) << ng.name;
    EXPECT_EQ(masks(enumerate_cycles(ng.graph)), sorted(oracle::cycles(el))) << ng.name;
  }
  Graph theta = theta_graph();
  EXPECT_EQ(masks(enumerate_bonds(theta)), (std::vector<oracle::Mask>{0b111}));
  EXPECT_EQ(masks(enumerate_cycles(theta)), (std::vector<oracle::Mask>{0b011, 0b101, 0b110}));
  EXPECT_TRUE(enumerate_cycles(bridge_graph()).empty());
}

TEST(Graph, FaceComplexMatchesBruteForce) {
  for (const auto& ng : default_corpus(4)) {
    EXPECT_EQ(masks(FaceComplex(ng.graph).all()),
              sorted(oracle::faces(oracle::edges_of(ng.graph))))
        << ng.name;
  }
  EXPECT_EQ(FaceComplex(theta_graph()).size(), 7u);
  EXPECT_EQ(FaceComplex(loop_graph()).size(), 2u);
  EXPECT_EQ(FaceComplex(bridge_graph()).size(), 1u);
}

TEST(Graph, BoundaryOfTheta) {
  Graph g = graph_from_dsl("x:v0-v1 y:v0-v1 z:v0-v1");
  Matrix<int> d = boundary_matrix(g);
  ASSERT_EQ(d.rows(), 2u);
  for (int e = 0; e < 3; ++e) {
    EXPECT_EQ(d(0, e), 1);
    EXPECT_EQ(d(1, e), -1);
  }
}

TEST(Graph, CycleBasisOfTheta) {
  Graph g = theta_graph();
  CycleBasis b = h1_basis(g, EdgeSet{0, 1});
  EXPECT_EQ(b.cycle_matrix(0, 0), 1);
  EXPECT_EQ(b.cycle_matrix(0, 1), 0);
  EXPECT_EQ(b.cycle_matrix(0, 2), -1);
  EXPECT_EQ(b.cycle_matrix(1, 0), 0);
  EXPECT_EQ(b.cycle_matrix(1, 1), 1);
  EXPECT_EQ(b.cycle_matrix(1, 2), -1);
  // Every basis cycle lies in the kernel of the boundary.
  Matrix<int> d = boundary_matrix(g);
  for (std::size_t r = 0; r < b.cycle_matrix.rows(); ++r) {
    for (std::size_t v = 0; v < d.rows(); ++v) {
      int sum = 0;
      for (int e = 0; e < 3; ++e) sum += d(v, e) * b.cycle_matrix(r, e);
      EXPECT_EQ(sum, 0);
    }
  }

  CycleBasis loop = h1_basis(loop_graph(), EdgeSet{0});
  EXPECT_EQ(loop.cycle_matrix(0, 0), 1);
  EXPECT_THROW(h1_basis(g, EdgeSet{0}), NotACotree);
}

TEST(Graph, PairingMatrices) {
  Graph g = theta_graph();
  CycleBasis b = h1_basis(g, EdgeSet{0, 1});
  Matrix<int> col = pairing(b, EdgeSet{2});
  ASSERT_EQ(col.rows(), 2u);
  ASSERT_EQ(col.cols(), 1u);
  EXPECT_EQ(col(0, 0), -1);
  EXPECT_EQ(col(1, 0), -1);
  EXPECT_EQ(pairing(b, EdgeSet{0, 1}), Matrix<int>::identity(2));
  EXPECT_EQ(pairing(b, g.all_edges()), b.cycle_matrix);
}

TEST(Graph, PairingMatricesAreTotallyUnimodular) {
  for (const auto& ng : default_corpus(4)) {
    for (EdgeSet c : spanning_cotrees(ng.graph)) {
      EXPECT_TRUE(totally_unimodular(h1_basis(ng.graph, c).cycle_matrix)) << ng.name;
    }
  }
  EXPECT_FALSE(totally_unimodular(Matrix<int>::from_rows({{1, 1}, {-1, 1}})));
}

TEST(Graph, GenericCharacters) {
  Graph theta = theta_graph();
  EXPECT_FALSE(is_generic_character(theta, {0, 0, 0}).generic);
  EXPECT_TRUE(is_generic_character(theta, {0, 0, 1}).generic);
  EXPECT_TRUE(is_generic_character(bridge_graph(), {5}).generic);
  EXPECT_THROW(is_generic_character(theta, {0, 0}), DimensionMismatch);
}

TEST(Graph, GenericityAgreesWithLineIntersections) {
  // Θ in the basis (γ_x, γ_y): the lines p_x = a, p_y = b, -p_x - p_y = c
  // are concurrent exactly when a + b + c = 0.
  Graph theta = theta_graph();
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      for (int c = -2; c <= 2; ++c) {
        EXPECT_EQ(is_generic_character(theta, {a, b, c}).generic, a + b + c != 0);
      }
    }
  }
}

TEST(Graph, SpanningTreeCountMatchesEnumeration) {
  EXPECT_EQ(spanning_tree_count(theta_graph()), 3);
  EXPECT_EQ(spanning_tree_count(loop_graph()), 1);
  EXPECT_EQ(spanning_tree_count(bridge_graph()), 1);
  EXPECT_EQ(spanning_tree_count(k4_graph()), 16);
  for (const auto& ng : default_corpus(5)) {
    EXPECT_EQ(spanning_tree_count(ng.graph), oracle::spanning_trees(oracle::edges_of(ng.graph)))
        << ng.name;
  }
}

TEST(Graph, WedgeAddsGenus) {
  Graph w = wedge(theta_graph(), loop_graph());
  EXPECT_EQ(w.num_vertices(), 2);
  EXPECT_EQ(w.genus(), 3);
  Graph ll = wedge(loop_graph(), loop_graph());
  EXPECT_EQ(ll.num_vertices(), 1);
  EXPECT_EQ(ll.genus(), 2);
  EXPECT_EQ(ll.edge(1).label, "e'");
}

TEST(Corpus, CountsMatchAugmentationOracle) {
  std::vector<int> expect = oracle::count_multigraphs(4);
  std::vector<int> got(4, 0);
  for (const auto& ng : enumerate_multigraphs(4)) ++got[ng.graph.num_edges() - 1];
  EXPECT_EQ(got, expect);
  EXPECT_EQ(got, (std::vector<int>{2, 4, 11, 30}));
}

TEST(Corpus, FiveEdgeCountIsFrozen) {
  // 95 for five edges, pinned after the four-edge agreement above.
  EXPECT_EQ(enumerate_multigraphs(5).size(), 2u + 4u + 11u + 30u + 95u);
}

TEST(Corpus, Bounds) {
  EXPECT_THROW(enumerate_multigraphs(0), InvalidGraph);
  EXPECT_THROW(enumerate_multigraphs(8), ResourceGuard);
  EXPECT_EQ(default_corpus(1).size(), 2u + named_graphs().size());
}

}  // namespace
}  // namespace ckskit
