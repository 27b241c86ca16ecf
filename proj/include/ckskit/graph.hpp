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

#ifndef CKSKIT_GRAPH_HPP_
#define CKSKIT_GRAPH_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ckskit/bigint.hpp"
#include "ckskit/edge_set.hpp"
#include "ckskit/errors.hpp"
#include "ckskit/matrix.hpp"
#include "ckskit/smith.hpp"

namespace ckskit {

struct Edge {
  std::string label;
  int head = 0;
  int tail = 0;

  bool operator==(const Edge&) const = default;
};

namespace internal {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    --count_;
    return true;
  }
  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

}  // namespace internal

// Connected oriented multigraph with loops. Edge i is the i-th edge in the
// total edge order; vertices are numbered by first appearance along that
// order (head before tail).
class Graph {
 public:
  Graph() : num_vertices_(1) {}

  // Validates references, label uniqueness and connectivity. A graph
  // without edges is allowed only with a single vertex.
  Graph(int num_vertices, std::vector<Edge> edges) : edges_(std::move(edges)) {
    if (num_vertices < 1) throw InvalidGraph("graph needs a vertex");
    if (static_cast<int>(edges_.size()) > EdgeSet::kMaxEdges) {
      throw ResourceGuard("at most 64 edges are supported");
    }
    std::unordered_set<std::string> seen;
    for (const Edge& e : edges_) {
      if (e.head < 0 || e.head >= num_vertices || e.tail < 0 ||
          e.tail >= num_vertices) {
        throw InvalidGraph("edge " + e.label + " references a missing vertex");
      }
      if (!seen.insert(e.label).second) {
        throw InvalidGraph("duplicate edge label " + e.label);
      }
    }
    std::vector<int> relabel(num_vertices, -1);
    int next = 0;
    for (Edge& e : edges_) {
      for (int* v : {&e.head, &e.tail}) {
        if (relabel[*v] < 0) relabel[*v] = next++;
        *v = relabel[*v];
      }
    }
    if (edges_.empty()) next = 1;
    if (next != num_vertices) {
      throw DisconnectedGraph("graph has isolated vertices");
    }
    num_vertices_ = num_vertices;
    if (components(all_edges()) != 1) {
      throw DisconnectedGraph("graph is not connected");
    }
  }

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(i); }
  EdgeSet all_edges() const { return EdgeSet::range(num_edges()); }

  // |E| - |V| + 1.
  int genus() const { return num_edges() - num_vertices_ + 1; }

  bool is_loop(int e) const { return edges_[e].head == edges_[e].tail; }

  // Number of connected components of (V, kept).
  int components(EdgeSet kept) const {
    internal::UnionFind uf(num_vertices_);
    for (int e : kept) uf.unite(edges_[e].head, edges_[e].tail);
    return uf.count();
  }

  // S lies in the coindependence complex iff it contains no bond, i.e.
  // deleting it keeps the graph connected.
  bool is_face(EdgeSet s) const { return components(all_edges() - s) == 1; }

  bool is_bridge(int e) const { return !is_face(EdgeSet{e}); }

  bool is_spanning_tree(EdgeSet t) const {
    return t.subset_of(all_edges()) && t.size() == num_vertices_ - 1 &&
           components(t) == 1;
  }

  bool is_spanning_cotree(EdgeSet c) const {
    return c.subset_of(all_edges()) && is_spanning_tree(all_edges() - c);
  }

  // Index of the edge with this label, or -1.
  int index_of(std::string_view label) const {
    for (int i = 0; i < num_edges(); ++i) {
      if (edges_[i].label == label) return i;
    }
    return -1;
  }

  std::vector<std::string> labels(EdgeSet s) const {
    std::vector<std::string> out;
    for (int e : s) out.push_back(edges_[e].label);
    return out;
  }

  // "{x,y}" in edge order.
  std::string describe(EdgeSet s) const {
    std::string out = "{";
    bool first = true;
    for (int e : s) {
      if (!first) out += ",";
      out += edges_[e].label;
      first = false;
    }
    return out + "}";
  }

  // Edge set from labels; throws InvalidGraph on unknown labels.
  EdgeSet edge_set(const std::vector<std::string>& labels) const {
    EdgeSet s;
    for (const std::string& l : labels) {
      int i = index_of(l);
      if (i < 0) throw InvalidGraph("unknown edge label " + l);
      s = s.with(i);
    }
    return s;
  }

  bool operator==(const Graph& other) const = default;

 private:
  int num_vertices_ = 1;
  std::vector<Edge> edges_;
};

// Builds a graph from (head, tail) pairs. `order`, when given, lists the
// input positions in the desired edge order. Missing labels become e0, e1...
inline Graph build_graph(const std::vector<std::pair<int, int>>& edge_list,
                         const std::vector<int>& order = {},
                         const std::vector<std::string>& labels = {}) {
  if (edge_list.empty()) throw EmptyGraph("edge list is empty");
  if (!labels.empty() && labels.size() != edge_list.size()) {
    throw InvalidGraph("label count differs from edge count");
  }
  int max_vertex = -1;
  for (auto [h, t] : edge_list) {
    if (h < 0 || t < 0) throw InvalidGraph("negative vertex id");
    max_vertex = std::max({max_vertex, h, t});
  }
  std::vector<int> perm = order;
  if (perm.empty()) {
    perm.resize(edge_list.size());
    std::iota(perm.begin(), perm.end(), 0);
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != edge_list.size() || sorted[i] != static_cast<int>(i)) {
      throw InvalidGraph("order is not a permutation of the edges");
    }
  }
  // Vertex ids may be sparse; compact them before validation.
  std::vector<int> used(max_vertex + 1, -1);
  int n = 0;
  for (auto [h, t] : edge_list) {
    if (used[h] < 0) used[h] = n++;
    if (used[t] < 0) used[t] = n++;
  }
  std::vector<Edge> edges;
  for (int i : perm) {
    auto [h, t] = edge_list[i];
    std::string label = labels.empty() ? "e" + std::to_string(i) : labels[i];
    edges.push_back({label, used[h], used[t]});
  }
  return Graph(n, std::move(edges));
}

// Same graph with a new edge order: order[k] is the current index of the
// k-th edge of the result.
inline Graph reorder(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.num_edges()) {
    throw InvalidGraph("order must list every edge once");
  }
  std::vector<bool> seen(g.num_edges(), false);
  std::vector<Edge> edges;
  for (int i : order) {
    if (i < 0 || i >= g.num_edges() || seen[i]) {
      throw InvalidGraph("order is not a permutation of the edges");
    }
    seen[i] = true;
    edges.push_back(g.edge(i));
  }
  return Graph(g.num_vertices(), std::move(edges));
}

// Moves edge e to the end of the order, keeping the others in place.
inline Graph move_edge_last(const Graph& g, int e) {
  std::vector<int> order;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (i != e) order.push_back(i);
  }
  order.push_back(e);
  return reorder(g, order);
}

// Deletion Γ∖S. Throws BondDeletion when S contains a bond.
inline Graph deletion(const Graph& g, EdgeSet s) {
  if (!g.is_face(s)) {
    throw BondDeletion("deleting " + g.describe(s) + " disconnects the graph");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!s.contains(i)) edges.push_back(g.edge(i));
  }
  return Graph(g.num_vertices(), std::move(edges));
}

// Contraction Γ/S. Loops created along the way are kept.
inline Graph contraction(const Graph& g, EdgeSet s) {
  internal::UnionFind uf(g.num_vertices());
  for (int e : s) uf.unite(g.edge(e).head, g.edge(e).tail);
  std::vector<int> id(g.num_vertices(), -1);
  int n = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = uf.find(v);
    if (id[r] < 0) id[r] = n++;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (s.contains(i)) continue;
    Edge e = g.edge(i);
    e.head = id[uf.find(e.head)];
    e.tail = id[uf.find(e.tail)];
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

// Wedge sum: identifies vertex v1 of g1 with vertex v2 of g2. Edges of g2
// follow those of g1; clashing labels of g2 get a prime appended.
inline Graph wedge(const Graph& g1, const Graph& g2, int v1 = 0, int v2 = 0) {
  std::vector<Edge> edges = g1.edges();
  std::unordered_set<std::string> taken;
  for (const Edge& e : edges) taken.insert(e.label);
  int n1 = g1.num_vertices();
  auto map2 = [&](int v) {
    if (v == v2) return v1;
    return n1 + (v < v2 ? v : v - 1);
  };
  for (Edge e : g2.edges()) {
    while (taken.count(e.label)) e.label += "'";
    taken.insert(e.label);
    e.head = map2(e.head);
    e.tail = map2(e.tail);
    edges.push_back(e);
  }
  return Graph(n1 + g2.num_vertices() - 1, std::move(edges));
}

// Splits an arbitrary edge list into connected graphs (isolated vertices
// become single-vertex graphs).
inline std::vector<Graph> split_components(
    int num_vertices, const std::vector<std::pair<int, int>>& edge_list,
    const std::vector<std::string>& labels = {}) {
  internal::UnionFind uf(num_vertices);
  for (auto [h, t] : edge_list) uf.unite(h, t);
  std::vector<int> root_index(num_vertices, -1);
  std::vector<std::vector<int>> members;
  for (int v = 0; v < num_vertices; ++v) {
    int r = uf.find(v);
    if (root_index[r] < 0) {
      root_index[r] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[root_index[r]].push_back(v);
  }
  std::vector<Graph> out;
  for (const auto& comp : members) {
    std::unordered_map<int, int> local;
    for (int v : comp) local.emplace(v, static_cast<int>(local.size()));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
      auto [h, t] = edge_list[i];
      if (!local.count(h)) continue;
      std::string label = labels.empty() ? "e" + std::to_string(i) : labels[i];
      edges.push_back({label, local[h], local[t]});
    }
    out.emplace_back(static_cast<int>(comp.size()), std::move(edges));
  }
  return out;
}

// Subset enumeration is exhaustive; refuse graphs where 2^|E| is too big.
inline void guard_subsets(const Graph& g, const std::string& what) {
  if (g.num_edges() > 30) {
    throw ResourceGuard(what + " enumerates all edge subsets; |E| = " +
                        std::to_string(g.num_edges()) + " is too large");
  }
  guard_cells(std::size_t{1} << g.num_edges(), what);
}

// All minimal edge cuts, in numeric mask order.
inline std::vector<EdgeSet> enumerate_bonds(const Graph& g) {
  guard_subsets(g, "bond enumeration");
  std::vector<EdgeSet> out;
  const EdgeSet::Mask total = EdgeSet::Mask{1} << g.num_edges();
  for (EdgeSet::Mask m = 1; m < total; ++m) {
    EdgeSet s(m);
    if (g.is_face(s)) continue;
    bool minimal = true;
    for (int e : s) {
      if (!g.is_face(s.without(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// All circuits (minimal dependent edge sets), in numeric mask order.
inline std::vector<EdgeSet> enumerate_cycles(const Graph& g) {
  guard_subsets(g, "cycle enumeration");
  auto independent = [&](EdgeSet s) {
    return g.components(s) == g.num_vertices() - s.size();
  };
  std::vector<EdgeSet> out;
  const EdgeSet::Mask total = EdgeSet::Mask{1} << g.num_edges();
  for (EdgeSet::Mask m = 1; m < total; ++m) {
    EdgeSet s(m);
    if (independent(s)) continue;
    bool minimal = true;
    for (int e : s) {
      if (!independent(s.without(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// Faces of the coindependence complex, by cardinality, each level in
// lexicographic order.
class FaceComplex {
 public:
  FaceComplex() = default;
  explicit FaceComplex(const Graph& g) : genus_(g.genus()) {
    const int m = g.num_edges();
    std::size_t budget = 0;
    levels_.resize(genus_ + 1);
    for (int k = 0; k <= genus_; ++k) {
      for_each_combination(m, k, [&](EdgeSet s) {
        guard_cells(++budget, "face enumeration");
        if (g.is_face(s)) {
          levels_[k].push_back(s);
          index_.emplace(s, levels_[k].size() - 1);
        }
      });
    }
  }

  int genus() const { return genus_; }
  const std::vector<EdgeSet>& level(int k) const { return levels_.at(k); }
  const std::vector<std::vector<EdgeSet>>& levels() const { return levels_; }
  bool contains(EdgeSet s) const { return index_.count(s) > 0; }
  // Position of s within its level.
  std::size_t position(EdgeSet s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw FaceNotInComplex("not a face");
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

  // All faces, level by level.
  std::vector<EdgeSet> all() const {
    std::vector<EdgeSet> out;
    for (const auto& l : levels_) out.insert(out.end(), l.begin(), l.end());
    return out;
  }

 private:
  int genus_ = 0;
  std::vector<std::vector<EdgeSet>> levels_;
  std::unordered_map<EdgeSet, std::size_t> index_;
};

inline FaceComplex face_complex(const Graph& g) { return FaceComplex(g); }

// Spanning cotrees in lexicographic order of the edge order.
inline std::vector<EdgeSet> spanning_cotrees(const Graph& g) {
  std::vector<EdgeSet> out;
  std::size_t budget = 0;
  for_each_combination(g.num_edges(), g.genus(), [&](EdgeSet c) {
    guard_cells(++budget, "cotree enumeration");
    if (g.is_spanning_cotree(c)) out.push_back(c);
  });
  return out;
}

// V x E incidence matrix: column e has +1 at h(e) and -1 at t(e).
inline Matrix<int> boundary_matrix(const Graph& g) {
  Matrix<int> d(g.num_vertices(), g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) continue;
    d(g.edge(e).head, e) += 1;
    d(g.edge(e).tail, e) -= 1;
  }
  return d;
}

// Rooted spanning tree giving oriented paths between vertices.
class TreePaths {
 public:
  TreePaths(const Graph& g, EdgeSet tree)
      : g_(&g),
        parent_(g.num_vertices(), -1),
        parent_edge_(g.num_vertices(), -1),
        depth_(g.num_vertices(), -1) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices());
    for (int e : tree) {
      adj[g.edge(e).head].push_back({g.edge(e).tail, e});
      adj[g.edge(e).tail].push_back({g.edge(e).head, e});
    }
    std::queue<int> q;
    depth_[0] = 0;
    q.push(0);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : adj[v]) {
        if (depth_[w] >= 0) continue;
        depth_[w] = depth_[v] + 1;
        parent_[w] = v;
        parent_edge_[w] = e;
        q.push(w);
      }
    }
    for (int d : depth_) {
      if (d < 0) throw NotASpanningTree("tree does not span");
    }
  }

  // Adds to `chain` the tree chain c with boundary b - a.
  void add_path(int a, int b, std::vector<int>& chain) const {
    while (depth_[a] > depth_[b]) a = step_up(a, +1, chain);
    while (depth_[b] > depth_[a]) b = step_up(b, -1, chain);
    while (a != b) {
      a = step_up(a, +1, chain);
      b = step_up(b, -1, chain);
    }
  }

 private:
  // Walks from v to its parent (sign +1) or from the parent to v (sign -1).
  int step_up(int v, int sign, std::vector<int>& chain) const {
    int e = parent_edge_[v];
    int p = parent_[v];
    // Moving v -> p along e: +e when e points from v to p (head is p).
    int along = g_->edge(e).head == p ? 1 : -1;
    chain[e] += sign * along;
    return p;
  }

  const Graph* g_;
  std::vector<int> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> depth_;
};

// Fundamental cycle of x with respect to a spanning tree not containing x,
// as a vector in Z^E with coefficient +1 on x.
inline std::vector<int> fundamental_cycle(const Graph& g, const TreePaths& paths,
                                          int x) {
  std::vector<int> cycle(g.num_edges(), 0);
  cycle[x] = 1;
  if (!g.is_loop(x)) paths.add_path(g.edge(x).head, g.edge(x).tail, cycle);
  return cycle;
}

// Basis of H_1 given by fundamental cycles of a spanning cotree.
struct CycleBasis {
  EdgeSet cotree;
  std::vector<int> rows;   // cotree edges in order
  Matrix<int> cycle_matrix;  // rows x E

  int coefficient(int x, int e) const {
    return cycle_matrix(static_cast<std::size_t>(cotree.rank_of(x)), e);
  }
};

inline CycleBasis h1_basis(const Graph& g, EdgeSet cotree) {
  if (!g.is_spanning_cotree(cotree)) {
    throw NotACotree(g.describe(cotree) + " is not a spanning cotree");
  }
  TreePaths paths(g, g.all_edges() - cotree);
  CycleBasis b;
  b.cotree = cotree;
  b.rows = cotree.to_vector();
  b.cycle_matrix = Matrix<int>(b.rows.size(), g.num_edges());
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    std::vector<int> c = fundamental_cycle(g, paths, b.rows[i]);
    for (int e = 0; e < g.num_edges(); ++e) b.cycle_matrix(i, e) = c[e];
  }
  return b;
}

// Matrix of <gamma_x, e> for x in the basis cotree and e in S.
inline Matrix<int> pairing(const CycleBasis& basis, EdgeSet s) {
  std::vector<int> cols = s.to_vector();
  Matrix<int> p(basis.rows.size(), cols.size());
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      p(i, j) = basis.cycle_matrix(i, cols[j]);
    }
  }
  return p;
}

struct GenericityViolation {
  EdgeSet cotree;                  // hyperplanes defining the vertex
  EdgeSet extra;                   // further hyperplanes through it
  std::vector<BigInt> point;       // vertex in the reference cycle basis
};

struct GenericityReport {
  bool generic = true;
  EdgeSet reference_cotree;
  std::vector<GenericityViolation> violations;
};

// Checks whether the hyperplanes <p, e> = theta_e in H_1(Γ; Q) are in
// general position. Each spanning cotree defines a vertex; the character is
// generic iff no other hyperplane passes through any vertex. Bridges pair
// to zero with every cycle and define no hyperplane, so they are skipped.
inline GenericityReport is_generic_character(const Graph& g,
                                             const std::vector<BigInt>& theta) {
  if (static_cast<int>(theta.size()) != g.num_edges()) {
    throw DimensionMismatch("theta needs one entry per edge");
  }
  GenericityReport report;
  std::vector<EdgeSet> cotrees = spanning_cotrees(g);
  report.reference_cotree = cotrees.front();
  CycleBasis ref = h1_basis(g, report.reference_cotree);
  const std::size_t d = ref.rows.size();
  for (EdgeSet t : cotrees) {
    std::vector<int> tv = t.to_vector();
    IntMatrix a(d, d);
    std::vector<BigInt> rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a(i, j) = ref.cycle_matrix(j, tv[i]);
      rhs[i] = theta[tv[i]];
    }
    auto sol = solve_rational(a, rhs);
    if (!sol) throw NotACotree("cotree system is singular");
    std::vector<BigInt> point(d);
    for (std::size_t j = 0; j < d; ++j) {
      if ((*sol)[j].get_den() != 1) {
        throw InvalidGraph("non-integral vertex; unimodularity violated");
      }
      point[j] = (*sol)[j].get_num();
    }
    EdgeSet extra;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (t.contains(e) || g.is_bridge(e)) continue;
      BigInt value = 0;
      for (std::size_t j = 0; j < d; ++j) value += point[j] * ref.cycle_matrix(j, e);
      if (value == theta[e]) extra = extra.with(e);
    }
    if (!extra.empty()) {
      report.generic = false;
      report.violations.push_back({t, extra, point});
    }
  }
  return report;
}

// Kirchhoff: determinant of the Laplacian with the first row and column
// removed. Loops do not contribute.
inline BigInt spanning_tree_count(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 1) return 1;
  IntMatrix lap(n - 1, n - 1);
  for (const Edge& e : g.edges()) {
    if (e.head == e.tail) continue;
    int a = e.head - 1;
    int b = e.tail - 1;
    if (a >= 0) lap(a, a) += 1;
    if (b >= 0) lap(b, b) += 1;
    if (a >= 0 && b >= 0) {
      lap(a, b) -= 1;
      lap(b, a) -= 1;
    }
  }
  return determinant(lap);
}

}  // namespace ckskit

#endif  // CKSKIT_GRAPH_HPP_
