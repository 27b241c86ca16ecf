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

#ifndef CKSKIT_HT_HPP_
#define CKSKIT_HT_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ckskit/activity.hpp"
#include "ckskit/bigint.hpp"
#include "ckskit/cochain.hpp"
#include "ckskit/edge_set.hpp"
#include "ckskit/errors.hpp"
#include "ckskit/face_cycles.hpp"
#include "ckskit/graph.hpp"
#include "ckskit/matrix.hpp"
#include "ckskit/smith.hpp"

namespace ckskit {

using CellVector = std::map<Cell, BigInt>;
using FaceVector = std::map<EdgeSet, BigInt>;

template <class K>
void add_scaled(std::map<K, BigInt>& acc, const std::map<K, BigInt>& v,
                const BigInt& k) {
  if (k == 0) return;
  for (const auto& [key, x] : v) {
    BigInt& slot = acc[key];
    slot += k * x;
    if (slot == 0) acc.erase(key);
  }
}

template <class K>
void add_term(std::map<K, BigInt>& acc, const K& key, const BigInt& k) {
  if (k == 0) return;
  BigInt& slot = acc[key];
  slot += k;
  if (slot == 0) acc.erase(key);
}

// The q-subsets of `pool`, in lexicographic order.
inline std::vector<EdgeSet> subsets_of_size(EdgeSet pool, int q) {
  std::vector<int> elems = pool.to_vector();
  std::vector<EdgeSet> out;
  for_each_combination(static_cast<int>(elems.size()), q, [&](EdgeSet pick) {
    EdgeSet s;
    for (int i : pick) s = s.with(elems[i]);
    out.push_back(s);
  });
  return out;
}

// The complex ⊕_S Λ^q H_1(Γ∖S) with d = Σ_e ι_e, bigraded by (2|S|, q).
class HTComplex {
 public:
  explicit HTComplex(CoherentCotree cotree) : data_(std::move(cotree)) {
    const int d = genus();
    std::size_t total = 0;
    for (EdgeSet s : data_.cotree().faces().all()) {
      total += std::size_t{1} << data_.cotree().cotree(s).size();
      guard_cells(total, "HT complex");
    }
    blocks_.assign(d + 1, {});
    for (int p = 0; p <= d; ++p) {
      blocks_[p].assign(d - p + 1, {});
      for (EdgeSet s : data_.cotree().faces().level(p)) {
        EdgeSet c = data_.cotree().cotree(s);
        for (int q = 0; q <= d - p; ++q) {
          for (EdgeSet w : subsets_of_size(c, q)) {
            index_.emplace(Cell{s, w}, blocks_[p][q].size());
            blocks_[p][q].push_back(Cell{s, w});
          }
        }
      }
    }
  }

  const FaceCycles& cycles() const { return data_; }
  const CoherentCotree& cotree() const { return data_.cotree(); }
  const Graph& graph() const { return data_.graph(); }
  int genus() const { return data_.genus(); }

  // Basis of HT^{2p,q}: faces in level order, wedges in lexicographic order.
  const std::vector<Cell>& cells(int p, int q) const {
    static const std::vector<Cell> kEmpty;
    if (p < 0 || q < 0 || p > genus() || q > genus() - p) return kEmpty;
    return blocks_[p][q];
  }

  bool has_cell(const Cell& c) const { return index_.count(c) > 0; }

  std::size_t index(const Cell& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw FaceNotInComplex("no cell " + label(c));
    return it->second;
  }

  // d(1_S w) = Σ_{e ∉ S, S∪e ∈ F} 1_{S∪e} ι_e(w).
  CellVector apply_d(const Cell& c) const {
    CellVector out;
    for (int e : graph().all_edges() - c.face) {
      EdgeSet up = c.face.with(e);
      if (!cotree().contains(up)) continue;
      for (const WedgeTerm& t : data_.interior(c.face, c.wedge, e)) {
        add_term(out, Cell{up, t.wedge}, BigInt(t.coeff));
      }
    }
    return out;
  }

  // d: HT^{2p,q} -> HT^{2p+2,q-1}.
  IntMatrix differential(int p, int q) const {
    const auto& src = cells(p, q);
    const auto& dst = cells(p + 1, q - 1);
    IntMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (const auto& [cell, v] : apply_d(src[j])) m(index(cell), j) = v;
    }
    return m;
  }

  // gr^k: degree p holds HT^{2p,k-p}, for p = 0..k.
  CochainComplex graded_piece(int k) const {
    CochainComplex out;
    for (int p = 0; p <= k; ++p) {
      out.dims.push_back(cells(p, k - p).size());
      std::vector<std::string> names;
      for (const Cell& c : cells(p, k - p)) names.push_back(label(c));
      out.labels.push_back(std::move(names));
      if (p < k) out.differentials.push_back(differential(p, k - p));
    }
    return out;
  }

  // "{x,z}|y^z"; an empty wedge prints as 1.
  std::string label(const Cell& c) const {
    std::string w;
    for (int e : c.wedge) w += (w.empty() ? "" : "^") + graph().edge(e).label;
    return graph().describe(c.face) + "|" + (w.empty() ? "1" : w);
  }

 private:
  FaceCycles data_;
  std::vector<std::vector<std::vector<Cell>>> blocks_;
  std::unordered_map<Cell, std::size_t, CellHash> index_;
};

// Integral cohomology of every graded piece gr^k, k = 0..d.
inline std::vector<GradedCohomology> ht_cohomology(const HTComplex& ht) {
  std::vector<GradedCohomology> out;
  for (int k = 0; k <= ht.genus(); ++k) out.push_back(cohomology(ht.graded_piece(k)));
  return out;
}

// S -> [S] ∈ In(S) on the faces outside the basis B.
class ChoiceFunction {
 public:
  // [S] = min In(S).
  static ChoiceFunction minimal(const CoherentCotree& c) {
    ChoiceFunction f;
    for (EdgeSet s : c.faces().all()) {
      EdgeSet in = c.cotree_in(s);
      if (!in.empty()) f.table_.emplace(s, in.min());
    }
    return f;
  }

  // Throws ChoiceOutsideIn unless the table is defined exactly on F∖B with
  // values in In(S).
  static ChoiceFunction from_table(const CoherentCotree& c,
                                   std::unordered_map<EdgeSet, int> table) {
    const Graph& g = c.graph();
    for (EdgeSet s : c.faces().all()) {
      EdgeSet in = c.cotree_in(s);
      auto it = table.find(s);
      if (in.empty()) {
        if (it != table.end()) {
          throw ChoiceOutsideIn(g.describe(s) + " is in the basis; no choice allowed");
        }
      } else if (it == table.end()) {
        throw ChoiceOutsideIn("no choice for " + g.describe(s));
      } else if (!in.contains(it->second)) {
        throw ChoiceOutsideIn("[" + g.describe(s) + "] = " +
                              g.edge(it->second).label + " is not in In = " +
                              g.describe(in));
      }
    }
    for (const auto& [s, x] : table) {
      if (!c.contains(s)) throw ChoiceOutsideIn("choice on a non-face " + g.describe(s));
    }
    ChoiceFunction f;
    f.table_ = std::move(table);
    return f;
  }

  int operator()(EdgeSet s) const {
    auto it = table_.find(s);
    if (it == table_.end()) throw ChoiceOutsideIn("no choice defined on this face");
    return it->second;
  }
  bool defined(EdgeSet s) const { return table_.count(s) > 0; }
  const std::unordered_map<EdgeSet, int>& table() const { return table_; }

 private:
  std::unordered_map<EdgeSet, int> table_;
};

// Choices on the three-edge theta graph with labels x, y, z:
// [x] = x, [y] = y, [x,y] = x, [x,z] = x.
inline ChoiceFunction theta_preset_choice(const CoherentCotree& c) {
  const Graph& g = c.graph();
  for (const char* l : {"x", "y", "z"}) {
    if (g.index_of(l) < 0) throw MismatchedGraph("theta preset needs edges x, y, z");
  }
  if (g.num_edges() != 3 || g.num_vertices() != 2) {
    throw MismatchedGraph("theta preset needs the three-edge theta graph");
  }
  int x = g.index_of("x");
  int y = g.index_of("y");
  int z = g.index_of("z");
  std::unordered_map<EdgeSet, int> t = {{EdgeSet{x}, x},
                                        {EdgeSet{y}, y},
                                        {EdgeSet{x, y}, x},
                                        {EdgeSet{x, z}, x}};
  return ChoiceFunction::from_table(c, std::move(t));
}

// The reduction f: Z^F -> Z^B and the homotopy h, memoized.
class Homotopy {
 public:
  Homotopy(const HTComplex& ht, ChoiceFunction choice)
      : ht_(&ht), choice_(std::move(choice)) {}

  const ChoiceFunction& choice() const { return choice_; }

  // f(1_S) in B-coordinates:
  // 1_S if S ∈ B, else -Σ_{t ∈ T(S∖x)} <γ^{S∖x}_x, t> f(1_{S∖x∪t}), x = [S].
  const FaceVector& project(EdgeSet s) const {
    auto it = f_memo_.find(s);
    if (it != f_memo_.end()) return it->second;
    const CoherentCotree& c = ht_->cotree();
    FaceVector out;
    if (c.in_basis(s)) {
      out.emplace(s, 1);
    } else {
      int x = choice_(s);
      EdgeSet base = s.without(x);
      for (int t : c.tree(base)) {
        int p = ht_->cycles().pair(base, x, t);
        if (p == 0) continue;
        add_scaled(out, project(base.with(t)), BigInt(-p));
      }
    }
    return f_memo_.emplace(s, std::move(out)).first->second;
  }

  // h(1_S w) by the three-case recursion.
  const CellVector& operator()(const Cell& cell) const {
    auto it = h_memo_.find(cell);
    if (it != h_memo_.end()) return it->second;
    CellVector out;
    const CoherentCotree& c = ht_->cotree();
    EdgeSet s = cell.face;
    EdgeSet w = cell.wedge;
    EdgeSet all = s | w;
    if (!(w.empty() && c.in_basis(s))) {
      int x0 = choice_(all);
      if (s.contains(x0)) {
        EdgeSet base = s.without(x0);
        EdgeSet lead = w.with(x0);
        int sign = insertion_sign(w, x0);
        out.emplace(Cell{base, lead}, sign);
        for (int t : c.tree(base)) {
          EdgeSet up = base.with(t);
          if (!c.contains(up)) continue;  // t is a bridge of Γ∖base: ι_t = 0
          for (const WedgeTerm& term : ht_->cycles().interior(base, lead, t)) {
            add_scaled(out, (*this)(Cell{up, term.wedge}), BigInt(-sign * term.coeff));
          }
        }
      }
    }
    return h_memo_.emplace(cell, std::move(out)).first->second;
  }

 private:
  const HTComplex* ht_;
  ChoiceFunction choice_;
  mutable std::unordered_map<EdgeSet, FaceVector> f_memo_;
  mutable std::unordered_map<Cell, CellVector, CellHash> h_memo_;
};

// Matrices of f, g and h on every graded piece.
struct HomotopyMaps {
  std::vector<std::vector<EdgeSet>> basis;  // B_k
  std::vector<IntMatrix> f;                 // B_k x F_k
  std::vector<IntMatrix> g;                 // F_k x B_k
  // h[p][q]: HT^{2p,q} -> HT^{2p-2,q+1}; empty for p = 0.
  std::vector<std::vector<IntMatrix>> h;
};

inline HomotopyMaps maps_fgh(const HTComplex& ht, const Homotopy& hom) {
  const int d = ht.genus();
  const CoherentCotree& c = ht.cotree();
  HomotopyMaps out;
  out.basis = c.basis();
  for (int k = 0; k <= d; ++k) {
    const auto& faces = c.faces().level(k);
    const auto& b = out.basis[k];
    std::unordered_map<EdgeSet, std::size_t> bpos;
    for (std::size_t i = 0; i < b.size(); ++i) bpos.emplace(b[i], i);
    IntMatrix f(b.size(), faces.size());
    IntMatrix g(faces.size(), b.size());
    for (std::size_t j = 0; j < faces.size(); ++j) {
      for (const auto& [s, v] : hom.project(faces[j])) f(bpos.at(s), j) = v;
    }
    for (std::size_t i = 0; i < b.size(); ++i) g(c.faces().position(b[i]), i) = 1;
    out.f.push_back(std::move(f));
    out.g.push_back(std::move(g));
  }
  out.h.assign(d + 1, {});
  for (int p = 0; p <= d; ++p) {
    out.h[p].assign(d - p + 1, IntMatrix());
    if (p == 0) continue;
    for (int q = 0; q <= d - p; ++q) {
      const auto& src = ht.cells(p, q);
      IntMatrix m(ht.cells(p - 1, q + 1).size(), src.size());
      for (std::size_t j = 0; j < src.size(); ++j) {
        for (const auto& [cell, v] : hom(src[j])) m(ht.index(cell), j) = v;
      }
      out.h[p][q] = std::move(m);
    }
  }
  return out;
}

inline HomotopyMaps maps_fgh(const HTComplex& ht, const ChoiceFunction& choice) {
  Homotopy hom(ht, choice);
  return maps_fgh(ht, hom);
}

// Outcome of the exact identities relating d, f, g and h.
struct IdentityReport {
  bool d_squared_zero = true;
  bool fg_identity = true;
  bool fd_zero = true;
  bool homotopy = true;
  // First failure, as "k=2 p=1".
  std::string witness;

  bool ok() const { return d_squared_zero && fg_identity && fd_zero && homotopy; }
};

inline IdentityReport check_identities(const HTComplex& ht, const HomotopyMaps& m) {
  IdentityReport r;
  const int d = ht.genus();
  auto note = [&](bool& flag, const std::string& what) {
    if (flag && r.witness.empty()) r.witness = what;
    flag = false;
  };
  auto dmat = [&](int p, int q) { return ht.differential(p, q); };
  for (int k = 0; k <= d; ++k) {
    std::string at = "k=" + std::to_string(k);
    if (ht.graded_piece(k).first_nonzero_square() >= 0) note(r.d_squared_zero, at);
    if (!(m.f[k] * m.g[k] == IntMatrix::identity(m.basis[k].size()))) {
      note(r.fg_identity, at);
    }
    if (k >= 1 && !(m.f[k] * dmat(k - 1, 1)).is_zero()) note(r.fd_zero, at);
    for (int p = 0; p <= k; ++p) {
      const int q = k - p;
      const std::size_t n = ht.cells(p, q).size();
      IntMatrix lhs = IntMatrix::identity(n);
      if (q == 0) lhs = lhs - m.g[k] * m.f[k];
      IntMatrix rhs(n, n);
      if (q >= 1 && p + 1 <= d) rhs = rhs + m.h[p + 1][q - 1] * dmat(p, q);
      if (p >= 1) rhs = rhs + dmat(p - 1, q + 1) * m.h[p][q];
      if (!(lhs == rhs)) note(r.homotopy, at + " p=" + std::to_string(p));
    }
  }
  return r;
}

// Splitting and exactness facts for each gr^k.
struct SplitReport {
  std::vector<bool> direct_sum;    // Z^{F_k} = im d ⊕ Z^{B_k}
  std::vector<bool> exact;         // 0 -> gr^k_0 -> ... -> gr^k_k -> R^{2k} -> 0
  std::vector<bool> j_basis;       // {d(1_S x) : [S∪x] = x} is a basis of im d
  std::vector<std::size_t> j_size;

  bool ok() const {
    auto all = [](const std::vector<bool>& v) {
      return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    return all(direct_sum) && all(exact) && all(j_basis);
  }
};

inline SplitReport check_splitting(const HTComplex& ht, const HomotopyMaps& m,
                                   const ChoiceFunction& choice) {
  SplitReport r;
  const CoherentCotree& c = ht.cotree();
  for (int k = 0; k <= ht.genus(); ++k) {
    const std::size_t nf = c.faces().level(k).size();
    const std::size_t nb = m.basis[k].size();
    IntMatrix image = k == 0 ? IntMatrix(nf, 0) : ht.differential(k - 1, 1);
    r.direct_sum.push_back(verify_direct_sum(nf, image, m.g[k]));

    // Ranks of gr^k: all cohomology vanishes below the top, and the top
    // cokernel is free of rank |B_k| with f inducing the isomorphism.
    GradedCohomology h = cohomology(ht.graded_piece(k));
    bool exact = true;
    for (int p = 0; p < k; ++p) exact = exact && h.at(p) == DegreeCohomology{};
    exact = exact && h.at(k).rank == nb && h.at(k).torsion.empty();
    exact = exact && rank(m.f[k]) == nb && (k == 0 || (m.f[k] * image).is_zero());
    r.exact.push_back(exact);

    IntMatrix j(nf, 0);
    std::vector<std::vector<BigInt>> cols;
    if (k >= 1) {
      for (const Cell& cell : ht.cells(k - 1, 1)) {
        int x = cell.wedge.min();
        EdgeSet up = cell.face.with(x);
        if (!choice.defined(up) || choice(up) != x) continue;
        std::vector<BigInt> col(nf, 0);
        for (const auto& [t, v] : ht.apply_d(cell)) col[c.faces().position(t.face)] = v;
        cols.push_back(std::move(col));
      }
      j = IntMatrix(nf, cols.size());
      for (std::size_t jj = 0; jj < cols.size(); ++jj) {
        for (std::size_t i = 0; i < nf; ++i) j(i, jj) = cols[jj][i];
      }
    }
    r.j_size.push_back(cols.size());
    bool jb = cols.size() == nf - nb && rank(j) == cols.size() &&
              rank(j) == rank(image) && verify_direct_sum(nf, j, m.g[k]);
    r.j_basis.push_back(jb);
  }
  return r;
}

// For x ≠ y in C(∅): d(1_x y) - d(1_y x) against
// Σ_{t ∈ T(∅)} d(1_t(<y,t>x - <x,t>y)) and Σ_t (<y,t>1_{xt} - <x,t>1_{yt}).
struct CotreeElimResult {
  int x = -1;
  int y = -1;
  FaceVector lhs;
  FaceVector rhs;
  FaceVector closed_form;
  bool ok() const { return lhs == rhs && lhs == closed_form; }
};

inline std::vector<CotreeElimResult> check_cotree_elimination(const HTComplex& ht) {
  std::vector<CotreeElimResult> out;
  const CoherentCotree& c = ht.cotree();
  const FaceCycles& cyc = ht.cycles();
  EdgeSet c0 = c.cotree(EdgeSet{});
  auto to_faces = [](const CellVector& v) {
    FaceVector f;
    for (const auto& [cell, k] : v) add_term(f, cell.face, k);
    return f;
  };
  for (int x : c0) {
    for (int y : c0) {
      if (x >= y) continue;
      CotreeElimResult r;
      r.x = x;
      r.y = y;
      CellVector lhs = ht.apply_d(Cell{EdgeSet{x}, EdgeSet{y}});
      add_scaled(lhs, ht.apply_d(Cell{EdgeSet{y}, EdgeSet{x}}), BigInt(-1));
      r.lhs = to_faces(lhs);
      CellVector rhs;
      for (int t : c.tree(EdgeSet{})) {
        EdgeSet st{t};
        int yt = cyc.pair(EdgeSet{}, y, t);
        int xt = cyc.pair(EdgeSet{}, x, t);
        if (!c.contains(st)) continue;
        // <y,t>x - <x,t>y lies in H_1(Γ∖t); project to C({t}) coordinates.
        EdgeSet ct = c.cotree(st);
        std::map<int, int> coords;
        if (ct.contains(x)) coords[x] += yt;
        if (ct.contains(y)) coords[y] -= xt;
        for (auto [z, k] : coords) {
          add_scaled(rhs, ht.apply_d(Cell{st, EdgeSet{z}}), BigInt(k));
        }
        if (c.contains(EdgeSet{x, t})) add_term(r.closed_form, EdgeSet{x, t}, BigInt(yt));
        if (c.contains(EdgeSet{y, t})) add_term(r.closed_form, EdgeSet{y, t}, BigInt(-xt));
      }
      r.rhs = to_faces(rhs);
      out.push_back(std::move(r));
    }
  }
  return out;
}

// Rewrites E^σ for supp σ ∈ F as a combination of square-free monomials
// 1_S, S ∈ F, by lowering the exponent of the largest repeated edge.
// Monomials whose support contains a bond vanish along the way.
namespace internal {

inline FaceVector reduce_rec(const HTComplex& ht, std::vector<int> sigma) {
  const Graph& g = ht.graph();
  EdgeSet s;
  int top = -1;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (sigma[e] > 0) s = s.with(e);
    if (sigma[e] > 1) top = e;
  }
  FaceVector out;
  if (!ht.cotree().contains(s)) return out;
  if (top < 0) {
    out.emplace(s, 1);
    return out;
  }
  // A cycle of Γ∖(S∖top) with coefficient 1 on top: the fundamental cycle of
  // top in T(S), a spanning tree of Γ∖S.
  TreePaths paths(g, ht.cotree().tree(s));
  std::vector<int> gamma = fundamental_cycle(g, paths, top);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (e == top || gamma[e] == 0) continue;
    std::vector<int> next = sigma;
    --next[top];
    ++next[e];
    add_scaled(out, reduce_rec(ht, std::move(next)), BigInt(-gamma[e]));
  }
  return out;
}

}  // namespace internal

// Throws SupportContainsBond when supp σ is not a face.
inline FaceVector reduce_monomial(const HTComplex& ht, const std::vector<int>& sigma) {
  const Graph& g = ht.graph();
  if (static_cast<int>(sigma.size()) != g.num_edges()) {
    throw DimensionMismatch("exponent vector needs one entry per edge");
  }
  EdgeSet s;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (sigma[e] < 0) throw DimensionMismatch("negative exponent");
    if (sigma[e] > 0) s = s.with(e);
  }
  if (!ht.cotree().contains(s)) throw SupportContainsBond(g.describe(s));
  return internal::reduce_rec(ht, sigma);
}

// The class of E^σ in R, in B-coordinates; zero when supp σ contains a bond.
inline FaceVector monomial_class(const HTComplex& ht, const Homotopy& hom,
                                 const std::vector<int>& sigma) {
  FaceVector out;
  for (const auto& [s, k] : internal::reduce_rec(ht, sigma)) {
    add_scaled(out, hom.project(s), k);
  }
  return out;
}

// R = Z[E]/(bond monomials, linear forms of H^1) in the monomial basis B.
struct RRing {
  std::vector<std::vector<EdgeSet>> basis;
  // product[{a, b}] for a <= b (by mask), in B-coordinates.
  std::map<std::pair<EdgeSet, EdgeSet>, FaceVector> product;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis) out.push_back(b.size());
    return out;
  }

  const FaceVector& multiply(EdgeSet a, EdgeSet b) const {
    if (b < a) std::swap(a, b);
    auto it = product.find({a, b});
    if (it == product.end()) throw FaceNotInComplex("not a basis element");
    return it->second;
  }

  FaceVector multiply(const FaceVector& u, const FaceVector& v) const {
    FaceVector out;
    for (const auto& [a, x] : u) {
      for (const auto& [b, y] : v) add_scaled(out, multiply(a, b), x * y);
    }
    return out;
  }
};

inline RRing r_ring(const HTComplex& ht, const Homotopy& hom) {
  RRing r;
  r.basis = ht.cotree().basis();
  std::vector<EdgeSet> all;
  for (const auto& level : r.basis) all.insert(all.end(), level.begin(), level.end());
  const int m = ht.graph().num_edges();
  for (EdgeSet a : all) {
    for (EdgeSet b : all) {
      if (b < a) continue;
      std::vector<int> sigma(m, 0);
      for (int e : a) ++sigma[e];
      for (int e : b) ++sigma[e];
      r.product.emplace(std::make_pair(a, b), monomial_class(ht, hom, sigma));
    }
  }
  return r;
}

struct RingReport {
  bool unit = true;
  bool commutative = true;  // holds by construction of the table
  bool associative = true;
  bool graded = true;
  bool dims_match_h = true;
  bool ok() const { return unit && commutative && associative && graded && dims_match_h; }
};

inline RingReport check_ring(const RRing& r, const Graph& g) {
  RingReport out;
  std::vector<EdgeSet> all;
  for (const auto& level : r.basis) all.insert(all.end(), level.begin(), level.end());
  EdgeSet one;
  for (EdgeSet a : all) {
    FaceVector ea{{a, BigInt(1)}};
    if (r.multiply(one, a) != ea) out.unit = false;
    for (EdgeSet b : all) {
      for (const auto& [s, v] : r.multiply(a, b)) {
        (void)v;
        if (s.size() != a.size() + b.size()) out.graded = false;
      }
      for (EdgeSet c : all) {
        FaceVector ec{{c, BigInt(1)}};
        FaceVector left = r.multiply(r.multiply(a, b), ec);
        FaceVector ea2{{a, BigInt(1)}};
        FaceVector right = r.multiply(ea2, r.multiply(b, c));
        if (left != right) out.associative = false;
      }
    }
  }
  // dim R^{2k} is the coefficient of q^{d-k} in T(1, q).
  Poly1 h = h_polynomial(g);
  const int d = g.genus();
  for (int k = 0; k <= d; ++k) {
    if (h.coefficient(d - k) != r.basis[k].size()) out.dims_match_h = false;
  }
  return out;
}

// Graph with edge e moved so that e lies in T(∅) of the shelling cotree:
// placing e last keeps it out of the lexicographically first cotree.
inline Graph order_for_contraction(const Graph& g, int e) {
  if (g.is_loop(e) || g.is_bridge(e)) {
    throw EdgeIsBondOrLoop(g.edge(e).label + " is a bridge or a loop");
  }
  CoherentCotree c = coherent_cotree(g);
  if (c.tree(EdgeSet{}).contains(e)) return g;
  return move_edge_last(g, e);
}

// The short exact sequence 0 -> R^{•-2}(Γ∖e) -> R(Γ) -> R(Γ/e) -> 0 in
// monomial bases.
struct DelConR {
  Graph graph;  // possibly reordered so that e ∈ T(∅)
  int edge = -1;
  std::vector<std::vector<EdgeSet>> basis, basis_deletion, basis_contraction;
  std::vector<IntMatrix> inclusion;   // B_k(Γ) x B_{k-1}(Γ∖e)
  std::vector<IntMatrix> projection;  // B_k(Γ/e) x B_k(Γ)
  bool inclusion_well_defined = true;
  bool projection_well_defined = true;
  bool partition = true;
  bool exact = true;
  bool dims_add = true;

  bool ok() const {
    return inclusion_well_defined && projection_well_defined && partition && exact &&
           dims_add;
  }
};

inline DelConR delcon_r(const Graph& input, int e_input) {
  DelConR out;
  const std::string label = input.edge(e_input).label;
  out.graph = order_for_contraction(input, e_input);
  const Graph& g = out.graph;
  const int e = g.index_of(label);
  out.edge = e;
  const EdgeSet removed{e};

  CoherentCotree cg = coherent_cotree(g);
  HTComplex ht(cg);
  HTComplex ht_del(induced_on_deletion(cg, e));
  HTComplex ht_con(induced_on_contraction(cg, e));
  Homotopy hom(ht, ChoiceFunction::minimal(ht.cotree()));
  Homotopy hom_del(ht_del, ChoiceFunction::minimal(ht_del.cotree()));
  Homotopy hom_con(ht_con, ChoiceFunction::minimal(ht_con.cotree()));
  out.basis = ht.cotree().basis();
  out.basis_deletion = ht_del.cotree().basis();
  out.basis_contraction = ht_con.cotree().basis();

  const int d = g.genus();
  auto positions = [](const std::vector<EdgeSet>& v) {
    std::unordered_map<EdgeSet, std::size_t> m;
    for (std::size_t i = 0; i < v.size(); ++i) m.emplace(v[i], i);
    return m;
  };
  for (int k = 0; k <= d; ++k) {
    const auto& b = out.basis[k];
    auto bpos = positions(b);
    const std::vector<EdgeSet> empty;
    const auto& bd = k >= 1 && k - 1 < static_cast<int>(out.basis_deletion.size())
                         ? out.basis_deletion[k - 1]
                         : empty;
    const auto& bc = k < static_cast<int>(out.basis_contraction.size())
                         ? out.basis_contraction[k]
                         : empty;
    auto cpos = positions(bc);

    IntMatrix inc(b.size(), bd.size());
    for (std::size_t j = 0; j < bd.size(); ++j) {
      for (const auto& [s, v] : hom.project(expand(bd[j], removed).with(e))) {
        inc(bpos.at(s), j) = v;
      }
    }
    IntMatrix proj(bc.size(), b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].contains(e)) continue;
      for (const auto& [s, v] : hom_con.project(compress(b[j], removed))) {
        proj(cpos.at(s), j) = v;
      }
    }

    // im d is carried into im d: f ∘ (map) ∘ d = 0 on the relevant pieces.
    if (k >= 2) {
      for (const Cell& cell : ht_del.cells(k - 2, 1)) {
        FaceVector acc;
        for (const auto& [t, v] : ht_del.apply_d(cell)) {
          add_scaled(acc, hom.project(expand(t.face, removed).with(e)), v);
        }
        if (!acc.empty()) out.inclusion_well_defined = false;
      }
    }
    if (k >= 1) {
      for (const Cell& cell : ht.cells(k - 1, 1)) {
        FaceVector acc;
        for (const auto& [t, v] : ht.apply_d(cell)) {
          if (t.face.contains(e)) continue;
          add_scaled(acc, hom_con.project(compress(t.face, removed)), v);
        }
        if (!acc.empty()) out.projection_well_defined = false;
      }
    }

    // B(Γ) = {S ∪ e : S ∈ B(Γ∖e)} ⊔ B(Γ/e).
    std::vector<EdgeSet> parts;
    for (EdgeSet s : bd) parts.push_back(expand(s, removed).with(e));
    for (EdgeSet s : bc) parts.push_back(expand(s, removed));
    std::vector<EdgeSet> sorted_b = b;
    std::sort(parts.begin(), parts.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (parts != sorted_b) out.partition = false;

    if (bd.size() + bc.size() != b.size()) out.dims_add = false;
    if (rank(inc) != bd.size() || rank(proj) != bc.size() || !(proj * inc).is_zero()) {
      out.exact = false;
    }
    out.inclusion.push_back(std::move(inc));
    out.projection.push_back(std::move(proj));
  }
  return out;
}

}  // namespace ckskit

#endif  // CKSKIT_HT_HPP_
