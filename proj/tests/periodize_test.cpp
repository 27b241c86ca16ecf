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

#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ckskit/ckskit.hpp"
#include "oracles.hpp"

namespace ckskit {
namespace {

std::set<std::vector<std::string>> basis_labels(const Graph& g, const CoherentCotree& c) {
  std::set<std::vector<std::string>> out;
  for (const auto& level : c.basis()) {
    for (EdgeSet s : level) out.insert(g.labels(s));
  }
  return out;
}

TEST(Periodize, LoopLevelOneIsATriangle) {
  PeriodizedGraph pg = periodize_graph(loop_graph(), 1);
  EXPECT_EQ(pg.graph.num_edges(), 3);
  EXPECT_EQ(pg.graph.num_vertices(), 3);
  EXPECT_EQ(pg.graph.genus(), 1);
  EXPECT_EQ(pg.graph.labels(pg.graph.all_edges()),
            (std::vector<std::string>{"e_-1", "e_0", "e_1"}));
  EXPECT_THROW(periodize_graph(loop_graph(), -1), InvalidGraph);
}

TEST(Periodize, LevelZeroIsTheBaseGraph) {
  PeriodizedGraph pg = periodize_graph(theta_graph(), 0);
  EXPECT_EQ(pg.graph.num_edges(), 3);
  EXPECT_EQ(pg.graph.num_vertices(), 2);
  CoherentCotree c = coherent_cotree(theta_graph());
  CoherentCotree c0 = periodized_cotree(c, pg);
  for (const auto& level : c0.basis()) {
    for (EdgeSet s : level) EXPECT_TRUE(c.in_basis(s));
  }
}

TEST(Periodize, LoopBasis) {
  PeriodizedGraph pg = periodize_graph(loop_graph(), 1);
  CoherentCotree c = periodized_cotree(coherent_cotree(loop_graph()), pg);
  std::set<std::vector<std::string>> expect = {{}, {"e_-1"}, {"e_1"}};
  EXPECT_EQ(basis_labels(pg.graph, c), expect);
  EXPECT_EQ(c.cotree_in(pg.graph.edge_set({"e_0"})), pg.graph.edge_set({"e_0"}));
  EXPECT_TRUE(c.cotree_in(pg.graph.edge_set({"e_1"})).empty());
}

TEST(Periodize, FaceCountGrowsPerEdge) {
  for (const auto& ng : default_corpus(3)) {
    FaceComplex base(ng.graph);
    for (int n = 1; n <= 2; ++n) {
      std::size_t expect = 0;
      for (EdgeSet s : base.all()) {
        std::size_t m = 1;
        for (int i = 0; i < s.size(); ++i) m *= 2 * n + 1;
        expect += m;
      }
      PeriodizedGraph pg = periodize_graph(ng.graph, n);
      CoherentCotree c = periodized_cotree(coherent_cotree(ng.graph), pg);
      EXPECT_EQ(c.faces().size(), expect) << ng.name << " n=" << n;
      if (pg.graph.num_edges() <= 12) {
        EXPECT_EQ(oracle::faces(oracle::edges_of(pg.graph)).size(), expect) << ng.name;
      }
    }
  }
}

TEST(Periodize, BasisSizesMatchTutteOracle) {
  for (const Graph& g : {theta_graph(), loop_graph(), bridge_graph(), loop_wedge_loop()}) {
    for (int n = 1; n <= 2; ++n) {
      PeriodizedGraph pg = periodize_graph(g, n);
      if (pg.graph.num_edges() > 15) continue;
      auto b = periodized_cotree(coherent_cotree(g), pg).basis();
      Poly1 h = oracle::tutte_subsets(oracle::edges_of(pg.graph)).at_x_one();
      const int d = pg.graph.genus();
      for (int k = 0; k <= d; ++k) EXPECT_EQ(h.coefficient(d - k), b[k].size());
    }
  }
}

TEST(Periodize, InFormulaOnCorpus) {
  for (const auto& ng : default_corpus(4)) {
    CoherentCotree c = coherent_cotree(ng.graph);
    for (int n = 1; n <= 2; ++n) {
      PeriodizationReport r = check_periodization(c, n, ng.graph.num_edges() * (2 * n + 1) <= 15);
      EXPECT_TRUE(r.ok()) << ng.name << " n=" << n << " " << r.witness;
    }
  }
}

TEST(Periodize, LevelContraction) {
  for (const auto& ng : default_corpus(4)) {
    CoherentCotree c = coherent_cotree(ng.graph);
    for (int n = 0; n <= 1; ++n) {
      ContractionReport r = check_level_contraction(c, n);
      EXPECT_TRUE(r.graph_matches) << ng.name;
      EXPECT_TRUE(r.basis_onto) << ng.name;
    }
  }
}

TEST(Periodize, DeletionContractionOnTheta) {
  Graph g = theta_graph();
  PeriodicDelCon dc = delcon_r_periodized(g, g.index_of("z"), 1);
  EXPECT_TRUE(dc.ok());
  // (Γ∖z)_1 is a 6-cycle with T(1, q) = 5 + q.
  EXPECT_EQ(dc.dims_deletion, (std::vector<std::size_t>{1, 5, 0}));
  // 3 * |B(Γ∖z)_1| one level down plus |B((Γ/z)_1)|.
  for (std::size_t k = 0; k < dc.dims.size(); ++k) {
    std::size_t del = k == 0 ? 0 : dc.dims_deletion[k - 1];
    EXPECT_EQ(dc.dims[k], 3 * del + dc.dims_contraction[k]);
  }
}

TEST(Periodize, DeletionContractionOnCorpus) {
  for (const auto& ng : default_corpus(3)) {
    for (int e : admissible_edges(ng.graph)) {
      for (int n = 1; n <= 2; ++n) {
        PeriodicDelCon dc = delcon_r_periodized(ng.graph, e, n);
        EXPECT_TRUE(dc.dims_identity) << ng.name << " n=" << n;
        EXPECT_TRUE(dc.partition) << ng.name << " n=" << n;
      }
    }
  }
}

}  // namespace
}  // namespace ckskit
