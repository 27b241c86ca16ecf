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

#ifndef CKSKIT_CORPUS_HPP_
#define CKSKIT_CORPUS_HPP_

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ckskit/errors.hpp"
#include "ckskit/graph.hpp"
#include "ckskit/graph_io.hpp"

namespace ckskit {

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline Graph theta_graph() { return graph_from_dsl("x:a-b y:a-b z:a-b"); }
inline Graph loop_graph() { return graph_from_dsl("e:a-a"); }
inline Graph bridge_graph() { return graph_from_dsl("e:a-b"); }
inline Graph k4_graph() { return graph_from_dsl("a:0-1 b:0-2 c:0-3 d:1-2 e:1-3 f:2-3"); }
inline Graph loop_wedge_loop() { return graph_from_dsl("a:v-v b:v-v"); }

inline std::vector<NamedGraph> named_graphs() {
  return {{"theta", theta_graph()},
          {"k4", k4_graph()},
          {"loop", loop_graph()},
          {"bridge", bridge_graph()},
          {"loop^loop", loop_wedge_loop()}};
}

namespace internal {

using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList normalized(EdgeList edges) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Smallest relabeled edge list over all vertex permutations.
inline EdgeList canonical_form(const EdgeList& edges, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList mapped;
    for (auto [a, b] : edges) mapped.push_back({perm[a], perm[b]});
    mapped = normalized(std::move(mapped));
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool connected_spanning(const EdgeList& edges, int n) {
  UnionFind uf(n);
  std::vector<bool> used(n, false);
  for (auto [a, b] : edges) {
    uf.unite(a, b);
    used[a] = used[b] = true;
  }
  return uf.count() == 1 && std::all_of(used.begin(), used.end(), [](bool u) { return u; });
}

}  // namespace internal

// All connected multigraphs (loops and parallel edges allowed) with
// 1..max_edges edges, one per isomorphism class, by edge count and then
// canonical form. Edges are labeled e0, e1, ... and oriented from the larger
// to the smaller canonical vertex.
inline std::vector<NamedGraph> enumerate_multigraphs(int max_edges) {
  if (max_edges < 1) throw InvalidGraph("corpus bound must be at least 1");
  if (max_edges > 7) throw ResourceGuard("corpus bound above 7 edges");
  std::vector<NamedGraph> out;
  for (int m = 1; m <= max_edges; ++m) {
    std::set<internal::EdgeList> seen;
    for (int n = 1; n <= m + 1; ++n) {
      std::vector<std::pair<int, int>> slots;
      for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) slots.push_back({a, b});
      }
      // Multisets of m slots as non-decreasing index sequences.
      std::vector<int> idx(m, 0);
      const int k = static_cast<int>(slots.size());
      while (true) {
        internal::EdgeList edges;
        for (int i : idx) edges.push_back(slots[i]);
        if (internal::connected_spanning(edges, n)) {
          seen.insert(internal::canonical_form(edges, n));
        }
        int i = m - 1;
        while (i >= 0 && idx[i] == k - 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[i];
      }
    }
    int count = 0;
    for (const auto& edges : seen) {
      std::vector<std::pair<int, int>> ht;
      for (auto [a, b] : edges) ht.push_back({b, a});
      out.push_back({"m" + std::to_string(m) + "." + std::to_string(count++),
                     build_graph(ht)});
    }
  }
  return out;
}

// Enumerated graphs plus the named ones.
inline std::vector<NamedGraph> default_corpus(int max_edges = 5) {
  std::vector<NamedGraph> out = enumerate_multigraphs(max_edges);
  for (auto& g : named_graphs()) out.push_back(std::move(g));
  return out;
}

}  // namespace ckskit

#endif  // CKSKIT_CORPUS_HPP_
