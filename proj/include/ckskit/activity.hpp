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

#ifndef CKSKIT_ACTIVITY_HPP_
#define CKSKIT_ACTIVITY_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ckskit/bigint.hpp"
#include "ckskit/edge_set.hpp"
#include "ckskit/errors.hpp"
#include "ckskit/graph.hpp"
#include "ckskit/poly.hpp"

namespace ckskit {

// Spanning cotrees in lexicographic order with their restriction sets.
struct Shelling {
  std::vector<EdgeSet> cotrees;
  std::vector<EdgeSet> restrictions;

  // Whether s lies in the complex generated by the first k cotrees.
  bool in_partial_complex(EdgeSet s, std::size_t k) const {
    for (std::size_t i = 0; i < k && i < cotrees.size(); ++i) {
      if (s.subset_of(cotrees[i])) return true;
    }
    return false;
  }

  // All faces of the complex generated by the first k cotrees.
  std::vector<EdgeSet> partial_complex(std::size_t k) const {
    std::vector<EdgeSet> out;
    std::unordered_map<EdgeSet, bool> seen;
    for (std::size_t i = 0; i < k && i < cotrees.size(); ++i) {
      for_each_subset(cotrees[i], [&](EdgeSet s) {
        if (seen.emplace(s, true).second) out.push_back(s);
      });
    }
    std::sort(out.begin(), out.end(), [](EdgeSet a, EdgeSet b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return lex_less(a, b);
    });
    return out;
  }
};

// R(T_k) = {x in T_k : T_k \ x lies in the complex of T_1..T_{k-1}}.
inline Shelling lex_shelling(const Graph& g) {
  Shelling sh;
  sh.cotrees = spanning_cotrees(g);
  for (std::size_t k = 0; k < sh.cotrees.size(); ++k) {
    EdgeSet r;
    for (int x : sh.cotrees[k]) {
      if (sh.in_partial_complex(sh.cotrees[k].without(x), k)) r = r.with(x);
    }
    sh.restrictions.push_back(r);
  }
  return sh;
}

// Checks that each T_k meets the earlier complex in a pure complex of
// codimension one, and that the new faces at step k are exactly the
// interval [R(T_k), T_k].
inline bool verify_shelling(const Shelling& sh, std::string* why = nullptr) {
  for (std::size_t k = 1; k < sh.cotrees.size(); ++k) {
    EdgeSet t = sh.cotrees[k];
    // Maximal faces of the intersection must all have size |T| - 1.
    bool pure = true;
    for_each_subset(t, [&](EdgeSet s) {
      if (!pure || s == t || !sh.in_partial_complex(s, k)) return;
      bool maximal = true;
      for (int x : t - s) {
        if (sh.in_partial_complex(s.with(x), k)) maximal = false;
      }
      if (maximal && s.size() != t.size() - 1) pure = false;
    });
    if (!pure) {
      if (why) *why = "intersection at step " + std::to_string(k + 1) + " is not pure";
      return false;
    }
    bool interval = true;
    for_each_subset(t, [&](EdgeSet s) {
      bool is_new = !sh.in_partial_complex(s, k);
      bool in_interval = sh.restrictions[k].subset_of(s);
      if (is_new != in_interval) interval = false;
    });
    if (!interval) {
      if (why) *why = "new faces at step " + std::to_string(k + 1) +
                      " differ from [R, T]";
      return false;
    }
  }
  return true;
}

// A coherent cotree S -> C(S) on the coindependence complex, stored as a
// full table.
class CoherentCotree {
 public:
  // The construction from the lexicographic shelling of g.
  static CoherentCotree from_shelling(const Graph& g) {
    CoherentCotree c(g);
    c.shelling_ = lex_shelling(g);
    const Shelling& sh = *c.shelling_;
    for (std::size_t k = 0; k < sh.cotrees.size(); ++k) {
      EdgeSet t = sh.cotrees[k];
      EdgeSet r = sh.restrictions[k];
      for_each_subset(t - r, [&](EdgeSet extra) {
        EdgeSet s = r | extra;
        if (!c.table_.emplace(s, t - s).second) {
          throw InvalidCoherentCotree("face " + g.describe(s) +
                                      " assigned twice by the shelling");
        }
      });
    }
    c.validate();
    return c;
  }

  // Wraps an explicit table; throws InvalidCoherentCotree unless the table
  // covers the complex, gives spanning cotrees of each deletion, and is
  // monotone.
  static CoherentCotree from_table(const Graph& g,
                                   std::unordered_map<EdgeSet, EdgeSet> table) {
    CoherentCotree c(g);
    c.table_ = std::move(table);
    c.validate();
    return c;
  }

  const Graph& graph() const { return graph_; }
  const FaceComplex& faces() const { return faces_; }
  const std::optional<Shelling>& shelling() const { return shelling_; }
  int genus() const { return faces_.genus(); }
  const std::unordered_map<EdgeSet, EdgeSet>& table() const { return table_; }

  bool contains(EdgeSet s) const { return table_.count(s) > 0; }

  EdgeSet cotree(EdgeSet s) const {
    auto it = table_.find(s);
    if (it == table_.end()) {
      throw FaceNotInComplex(graph_.describe(s) + " contains a bond");
    }
    return it->second;
  }

  // T(S) = E \ S \ C(S), a spanning tree of Γ∖S.
  EdgeSet tree(EdgeSet s) const { return graph_.all_edges() - s - cotree(s); }

  // In(S) = {e in S : e in C(S \ e)}.
  EdgeSet cotree_in(EdgeSet s) const {
    if (!contains(s)) {
      throw FaceNotInComplex(graph_.describe(s) + " contains a bond");
    }
    EdgeSet in;
    for (int e : s) {
      if (cotree(s.without(e)).contains(e)) in = in.with(e);
    }
    return in;
  }

  // B = {S : In(S) empty}, by cardinality.
  std::vector<std::vector<EdgeSet>> basis() const {
    std::vector<std::vector<EdgeSet>> out(genus() + 1);
    for (int k = 0; k <= genus(); ++k) {
      for (EdgeSet s : faces_.level(k)) {
        if (cotree_in(s).empty()) out[k].push_back(s);
      }
    }
    return out;
  }

  bool in_basis(EdgeSet s) const { return cotree_in(s).empty(); }

 private:
  explicit CoherentCotree(const Graph& g) : graph_(g), faces_(g) {}

  void validate() const {
    const int d = genus();
    if (table_.size() != faces_.size()) {
      throw InvalidCoherentCotree("table has " + std::to_string(table_.size()) +
                                  " entries but the complex has " +
                                  std::to_string(faces_.size()) + " faces");
    }
    for (const auto& [s, c] : table_) {
      if (!faces_.contains(s)) {
        throw InvalidCoherentCotree(graph_.describe(s) + " is not a face");
      }
      if (c.intersects(s) || c.size() != d - s.size() ||
          !graph_.is_spanning_tree(graph_.all_edges() - s - c)) {
        throw InvalidCoherentCotree(graph_.describe(c) +
                                    " is not a spanning cotree of the deletion of " +
                                    graph_.describe(s));
      }
    }
    // Monotonicity on covering pairs implies it everywhere.
    for (const auto& [s, c] : table_) {
      for (int e : graph_.all_edges() - s) {
        auto it = table_.find(s.with(e));
        if (it == table_.end()) continue;
        if (!it->second.subset_of(c)) {
          throw InvalidCoherentCotree("C(" + graph_.describe(s.with(e)) +
                                      ") is not contained in C(" +
                                      graph_.describe(s) + ")");
        }
      }
    }
  }

  Graph graph_;
  FaceComplex faces_;
  std::unordered_map<EdgeSet, EdgeSet> table_;
  std::optional<Shelling> shelling_;
};

inline CoherentCotree coherent_cotree(const Graph& g) {
  return CoherentCotree::from_shelling(g);
}

// Coherent cotree of Γ∖e induced by C: S -> C(S ∪ e), re-indexed.
inline CoherentCotree induced_on_deletion(const CoherentCotree& c, int e) {
  const Graph& g = c.graph();
  Graph del = deletion(g, EdgeSet{e});
  std::unordered_map<EdgeSet, EdgeSet> table;
  EdgeSet removed{e};
  for (const auto& [s, cs] : c.table()) {
    if (!s.contains(e)) continue;
    table.emplace(compress(s, removed), compress(cs, removed));
  }
  return CoherentCotree::from_table(del, std::move(table));
}

// Coherent cotree of Γ/e induced by C when e lies in T(∅): S -> C(S).
inline CoherentCotree induced_on_contraction(const CoherentCotree& c, int e) {
  const Graph& g = c.graph();
  Graph con = contraction(g, EdgeSet{e});
  std::unordered_map<EdgeSet, EdgeSet> table;
  EdgeSet removed{e};
  for (const auto& [s, cs] : c.table()) {
    if (s.contains(e)) continue;
    table.emplace(compress(s, removed), compress(cs, removed));
  }
  return CoherentCotree::from_table(con, std::move(table));
}

// Edges f outside T such that f is the smallest edge of its fundamental
// cycle (as an undirected edge set).
inline EdgeSet external_activity(const Graph& g, EdgeSet tree) {
  if (!g.is_spanning_tree(tree)) {
    throw NotASpanningTree(g.describe(tree) + " is not a spanning tree");
  }
  TreePaths paths(g, tree);
  EdgeSet active;
  for (int f : g.all_edges() - tree) {
    std::vector<int> cycle = fundamental_cycle(g, paths, f);
    int smallest = f;
    for (int e = 0; e < f; ++e) {
      if (cycle[e] != 0) {
        smallest = e;
        break;
      }
    }
    if (smallest == f) active = active.with(f);
  }
  return active;
}

// Edges e in T that are the smallest edge of their fundamental cut.
inline EdgeSet internal_activity(const Graph& g, EdgeSet tree) {
  if (!g.is_spanning_tree(tree)) {
    throw NotASpanningTree(g.describe(tree) + " is not a spanning tree");
  }
  EdgeSet active;
  for (int e : tree) {
    // Components of T \ e; the cut is every edge joining them.
    internal::UnionFind uf(g.num_vertices());
    for (int f : tree.without(e)) uf.unite(g.edge(f).head, g.edge(f).tail);
    bool smallest = true;
    for (int f = 0; f < e; ++f) {
      if (uf.find(g.edge(f).head) != uf.find(g.edge(f).tail)) {
        smallest = false;
        break;
      }
    }
    if (smallest) active = active.with(e);
  }
  return active;
}

// Rank-nullity expansion: sum over S of (x-1)^{k(S)-1} (y-1)^{k(S)+|S|-|V|}.
inline Poly2 tutte(const Graph& g) {
  guard_subsets(g, "Tutte polynomial");
  const int n = g.num_vertices();
  std::map<std::pair<int, int>, BigInt> counts;
  const EdgeSet::Mask total = EdgeSet::Mask{1} << g.num_edges();
  for (EdgeSet::Mask m = 0; m < total; ++m) {
    EdgeSet s(m);
    int k = g.components(s);
    counts[{k - 1, k + s.size() - n}] += 1;
  }
  Poly2 xm = Poly2::x() - Poly2(1);
  Poly2 ym = Poly2::y() - Poly2(1);
  Poly2 out;
  for (const auto& [ab, c] : counts) {
    out = out + Poly2::monomial(0, 0, c) * xm.pow(ab.first) * ym.pow(ab.second);
  }
  return out;
}

// Sum over spanning trees of x^{|IA(T)|} y^{|EA(T)|}.
inline Poly2 tutte_by_activity(const Graph& g) {
  Poly2 out;
  for (EdgeSet c : spanning_cotrees(g)) {
    EdgeSet t = g.all_edges() - c;
    out.add(internal_activity(g, t).size(), external_activity(g, t).size(), 1);
  }
  return out;
}

// h(q) = T(1, q).
inline Poly1 h_polynomial(const Graph& g) { return tutte(g).at_x_one(); }

}  // namespace ckskit

#endif  // CKSKIT_ACTIVITY_HPP_
