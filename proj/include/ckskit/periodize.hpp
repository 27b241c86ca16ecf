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

#ifndef CKSKIT_PERIODIZE_HPP_
#define CKSKIT_PERIODIZE_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ckskit/activity.hpp"
#include "ckskit/edge_set.hpp"
#include "ckskit/errors.hpp"
#include "ckskit/graph.hpp"
#include "ckskit/ht.hpp"

namespace ckskit {

// Γ_n: every edge e split into segments e_{-n}, ..., e_n, in that order
// from t(e) to h(e).
struct PeriodizedGraph {
  Graph base;
  int level = 0;
  Graph graph;
  // For each edge of `graph`: (base edge, segment index i).
  std::vector<std::pair<int, int>> origin;

  int edge(int base_edge, int i) const {
    return base_edge * (2 * level + 1) + (i + level);
  }
};

inline std::string segment_label(const std::string& base, int i) {
  return base + "_" + std::to_string(i);
}

inline PeriodizedGraph periodize_graph(const Graph& g, int n) {
  if (n < 0) throw InvalidGraph("level must be non-negative");
  PeriodizedGraph out;
  out.base = g;
  out.level = n;
  const int nv = g.num_vertices();
  const int per_edge = 2 * n;  // interior vertices (i, e), i in [-n, n-1]
  auto inner = [&](int e, int i) { return nv + e * per_edge + (i + n); };
  std::vector<Edge> edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& base = g.edge(e);
    for (int i = -n; i <= n; ++i) {
      int head = i == n ? base.head : inner(e, i);
      int tail = i == -n ? base.tail : inner(e, i - 1);
      edges.push_back({segment_label(base.label, i), head, tail});
      out.origin.push_back({e, i});
    }
  }
  out.graph = Graph(nv + g.num_edges() * per_edge, std::move(edges));
  return out;
}

// C(S_I) = {e_0 : e ∈ C(S)} on every face S_I of Γ_n.
inline CoherentCotree periodized_cotree(const CoherentCotree& c, const PeriodizedGraph& pg) {
  const int n = pg.level;
  std::unordered_map<EdgeSet, EdgeSet> table;
  for (EdgeSet s : c.faces().all()) {
    EdgeSet zero;
    for (int e : c.cotree(s)) zero = zero.with(pg.edge(e, 0));
    std::vector<int> members = s.to_vector();
    std::vector<int> idx(members.size(), -n);
    while (true) {
      EdgeSet lifted;
      for (std::size_t j = 0; j < members.size(); ++j) {
        lifted = lifted.with(pg.edge(members[j], idx[j]));
      }
      table.emplace(lifted, zero);
      std::size_t j = 0;
      while (j < idx.size() && idx[j] == n) idx[j++] = -n;
      if (j == idx.size()) break;
      ++idx[j];
    }
  }
  return CoherentCotree::from_table(pg.graph, std::move(table));
}

// In(S_I) = {e_0 : e ∈ In(S), I_e = 0} against the direct computation.
struct PeriodizationReport {
  int level = 0;
  std::size_t faces = 0;
  bool in_formula = true;
  bool basis_formula = true;
  bool genus_preserved = true;
  bool h_two_routes = true;  // |B_k(Γ_n)| = coefficient of T_{Γ_n}(1, q)
  std::string witness;

  bool ok() const { return in_formula && basis_formula && genus_preserved && h_two_routes; }
};

inline PeriodizationReport check_periodization(const CoherentCotree& c, int n,
                                               bool with_tutte = true) {
  PeriodizationReport r;
  r.level = n;
  PeriodizedGraph pg = periodize_graph(c.graph(), n);
  CoherentCotree cn = periodized_cotree(c, pg);
  r.faces = cn.faces().size();
  r.genus_preserved = pg.graph.genus() == c.graph().genus();
  for (EdgeSet si : cn.faces().all()) {
    EdgeSet s;
    EdgeSet support;  // base edges with I_e != 0
    for (int f : si) {
      auto [e, i] = pg.origin[f];
      s = s.with(e);
      if (i != 0) support = support.with(e);
    }
    EdgeSet expected;
    for (int e : c.cotree_in(s) - support) expected = expected.with(pg.edge(e, 0));
    if (cn.cotree_in(si) != expected) {
      r.in_formula = false;
      if (r.witness.empty()) r.witness = pg.graph.describe(si);
    }
    bool in_b = c.cotree_in(s).subset_of(support);
    if (in_b != cn.in_basis(si)) r.basis_formula = false;
  }
  if (with_tutte) {
    Poly1 h = h_polynomial(pg.graph);
    auto b = cn.basis();
    const int d = pg.graph.genus();
    for (int k = 0; k <= d; ++k) {
      if (h.coefficient(d - k) != b[k].size()) r.h_two_routes = false;
    }
  }
  return r;
}

// Contracting the end segments of Γ_{n+1} gives Γ_n, and B(Γ_{n+1})
// restricted to segments in [-n, n] maps onto B(Γ_n).
struct ContractionReport {
  bool graph_matches = true;
  bool basis_onto = true;
  bool ok() const { return graph_matches && basis_onto; }
};

inline ContractionReport check_level_contraction(const CoherentCotree& c, int n) {
  ContractionReport r;
  PeriodizedGraph big = periodize_graph(c.graph(), n + 1);
  PeriodizedGraph small = periodize_graph(c.graph(), n);
  EdgeSet ends;
  for (int e = 0; e < c.graph().num_edges(); ++e) {
    ends = ends.with(big.edge(e, -(n + 1))).with(big.edge(e, n + 1));
  }
  r.graph_matches = contraction(big.graph, ends) == small.graph;

  CoherentCotree cb = periodized_cotree(c, big);
  CoherentCotree cs = periodized_cotree(c, small);
  std::set<std::vector<std::string>> image;
  for (const auto& level : cb.basis()) {
    for (EdgeSet s : level) {
      if (s.intersects(ends)) continue;
      image.insert(big.graph.labels(s));
    }
  }
  std::set<std::vector<std::string>> target;
  for (const auto& level : cs.basis()) {
    for (EdgeSet s : level) target.insert(small.graph.labels(s));
  }
  r.basis_onto = image == target;
  return r;
}

// dim R^{2k}(Γ_n) = (2n+1) dim R^{2k-2}((Γ∖e)_n) + dim R^{2k}((Γ/e)_n), and
// the matching partition of B(Γ_n).
struct PeriodicDelCon {
  int level = 0;
  std::vector<std::size_t> dims, dims_deletion, dims_contraction;
  bool dims_identity = true;
  bool partition = true;
  bool ok() const { return dims_identity && partition; }
};

inline PeriodicDelCon delcon_r_periodized(const Graph& input, int e_input, int n) {
  PeriodicDelCon out;
  out.level = n;
  const std::string label = input.edge(e_input).label;
  Graph g = order_for_contraction(input, e_input);
  const int e = g.index_of(label);
  CoherentCotree c = coherent_cotree(g);
  CoherentCotree cd = induced_on_deletion(c, e);
  CoherentCotree cc = induced_on_contraction(c, e);

  PeriodizedGraph pg = periodize_graph(g, n);
  PeriodizedGraph pd = periodize_graph(cd.graph(), n);
  PeriodizedGraph pc = periodize_graph(cc.graph(), n);
  auto b = periodized_cotree(c, pg).basis();
  auto bd = periodized_cotree(cd, pd).basis();
  auto bc = periodized_cotree(cc, pc).basis();
  const int d = g.genus();
  auto dim = [](const std::vector<std::vector<EdgeSet>>& v, int k) {
    return k >= 0 && k < static_cast<int>(v.size()) ? v[k].size() : std::size_t{0};
  };
  for (int k = 0; k <= d; ++k) {
    out.dims.push_back(dim(b, k));
    out.dims_deletion.push_back(dim(bd, k));
    out.dims_contraction.push_back(dim(bc, k));
    if (dim(b, k) != static_cast<std::size_t>(2 * n + 1) * dim(bd, k - 1) + dim(bc, k)) {
      out.dims_identity = false;
    }
  }

  // Compare as sets of sorted label lists.
  auto sorted_labels = [](const Graph& gr, EdgeSet s) {
    std::vector<std::string> l = gr.labels(s);
    std::sort(l.begin(), l.end());
    return l;
  };
  std::multiset<std::vector<std::string>> parts;
  for (const auto& level : bd) {
    for (EdgeSet s : level) {
      for (int i = -n; i <= n; ++i) {
        std::vector<std::string> l = sorted_labels(pd.graph, s);
        l.push_back(segment_label(label, i));
        std::sort(l.begin(), l.end());
        parts.insert(l);
      }
    }
  }
  for (const auto& level : bc) {
    for (EdgeSet s : level) parts.insert(sorted_labels(pc.graph, s));
  }
  std::multiset<std::vector<std::string>> whole;
  for (const auto& level : b) {
    for (EdgeSet s : level) whole.insert(sorted_labels(pg.graph, s));
  }
  out.partition = parts == whole;
  return out;
}

}  // namespace ckskit

#endif  // CKSKIT_PERIODIZE_HPP_
