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

#ifndef CKSKIT_CKS_HPP_
#define CKSKIT_CKS_HPP_

#include <map>
#include <string>
#include <tuple>
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
#include "ckskit/ht.hpp"
#include "ckskit/matrix.hpp"
#include "ckskit/poly.hpp"
#include "ckskit/smith.hpp"

namespace ckskit {

// 1_S (∧_{x∈wedge} γ^S_x) ⊗ (∧_{y∈coweight} [y]), wedge and coweight ⊆ C(S).
struct CksCell {
  EdgeSet face;
  EdgeSet wedge;
  EdgeSet coweight;

  bool operator==(const CksCell&) const = default;
  friend bool operator<(const CksCell& a, const CksCell& b) {
    return std::make_tuple(a.face.bits(), a.wedge.bits(), a.coweight.bits()) <
           std::make_tuple(b.face.bits(), b.wedge.bits(), b.coweight.bits());
  }
};

struct CksCellHash {
  std::size_t operator()(const CksCell& c) const noexcept {
    std::uint64_t h = c.face.bits() * 0x9E3779B97F4A7C15ULL;
    h ^= c.wedge.bits() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= c.coweight.bits() + 0x85EBCA77C2B2AE63ULL + (h << 6) + (h >> 2);
    return std::hash<std::uint64_t>()(h);
  }
};

using Tridegree = std::tuple<int, int, int>;  // (p, q, r) for CKS^{2p,q,r}

// ⊕_S Λ^q H_1(Γ∖S) ⊗ Λ^r H^1(Γ∖S) with d = Σ_e ι_e ⊗ π_e.
class CKSComplex {
 public:
  explicit CKSComplex(CoherentCotree cotree) : data_(std::move(cotree)) {
    const int d = genus();
    std::size_t total = 0;
    for (EdgeSet s : data_.cotree().faces().all()) {
      total += std::size_t{1} << (2 * data_.cotree().cotree(s).size());
      guard_cells(total, "CKS complex");
    }
    blocks_.assign(d + 1, {});
    for (int p = 0; p <= d; ++p) {
      const int top = d - p;
      blocks_[p].assign(top + 1, std::vector<std::vector<CksCell>>(top + 1));
      for (EdgeSet s : data_.cotree().faces().level(p)) {
        EdgeSet c = data_.cotree().cotree(s);
        for (int q = 0; q <= top; ++q) {
          std::vector<EdgeSet> ws = subsets_of_size(c, q);
          for (int r = 0; r <= top; ++r) {
            std::vector<EdgeSet> as = subsets_of_size(c, r);
            for (EdgeSet w : ws) {
              for (EdgeSet a : as) {
                CksCell cell{s, w, a};
                index_.emplace(cell, blocks_[p][q][r].size());
                blocks_[p][q][r].push_back(cell);
              }
            }
          }
        }
      }
    }
  }

  const FaceCycles& cycles() const { return data_; }
  const CoherentCotree& cotree() const { return data_.cotree(); }
  const Graph& graph() const { return data_.graph(); }
  int genus() const { return data_.genus(); }

  const std::vector<CksCell>& cells(int p, int q, int r) const {
    static const std::vector<CksCell> kEmpty;
    const int d = genus();
    if (p < 0 || q < 0 || r < 0 || p > d || q > d - p || r > d - p) return kEmpty;
    return blocks_[p][q][r];
  }

  std::size_t size() const { return index_.size(); }
  bool has_cell(const CksCell& c) const { return index_.count(c) > 0; }

  std::size_t index(const CksCell& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw FaceNotInComplex("no cell " + label(c));
    return it->second;
  }

  // π_e(∧_{y∈a} [y]) in C(S∪e) coordinates. Only the dropped edge c moves:
  // [c] restricts to Σ_{y ∈ C(S∪e)} <γ^{S∪e}_y, c> [y].
  std::vector<WedgeTerm> restrict_coweight(EdgeSet s, EdgeSet a, int e) const {
    int c = data_.dropped(s, e);
    if (!a.contains(c)) return {{a, 1}};
    std::vector<WedgeTerm> out;
    EdgeSet up = s.with(e);
    EdgeSet rest = a.without(c);
    int i = a.rank_of(c);
    for (int y : cotree().cotree(up)) {
      int coef = data_.pair(up, y, c);
      if (coef == 0 || rest.contains(y)) continue;
      int j = rest.rank_of(y);
      int sign = ((i > j ? i - j : j - i) % 2 == 0) ? 1 : -1;
      out.push_back({rest.with(y), sign * coef});
    }
    return out;
  }

  std::map<CksCell, BigInt> apply_d(const CksCell& cell) const {
    std::map<CksCell, BigInt> out;
    for (int e : graph().all_edges() - cell.face) {
      EdgeSet up = cell.face.with(e);
      if (!cotree().contains(up)) continue;
      std::vector<WedgeTerm> ws = data_.interior(cell.face, cell.wedge, e);
      if (ws.empty()) continue;
      std::vector<WedgeTerm> as = restrict_coweight(cell.face, cell.coweight, e);
      for (const WedgeTerm& w : ws) {
        for (const WedgeTerm& a : as) {
          add_term(out, CksCell{up, w.wedge, a.wedge}, BigInt(w.coeff * a.coeff));
        }
      }
    }
    return out;
  }

  // d: CKS^{2p,q,r} -> CKS^{2p+2,q-1,r}.
  IntMatrix differential(int p, int q, int r) const {
    const auto& src = cells(p, q, r);
    const auto& dst = cells(p + 1, q - 1, r);
    IntMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (const auto& [cell, v] : apply_d(src[j])) m(index(cell), j) = v;
    }
    return m;
  }

  // gr^{k,l}: degree p holds CKS^{2p,k-p,l}, p = 0..k.
  CochainComplex graded_piece(int k, int l) const {
    CochainComplex out;
    for (int p = 0; p <= k; ++p) {
      out.dims.push_back(cells(p, k - p, l).size());
      if (p < k) out.differentials.push_back(differential(p, k - p, l));
    }
    return out;
  }

  // "{x}|y|x^z"; empty factors print as 1.
  std::string label(const CksCell& c) const {
    auto join = [&](EdgeSet s) {
      std::string w;
      for (int e : s) w += (w.empty() ? "" : "^") + graph().edge(e).label;
      return w.empty() ? std::string("1") : w;
    };
    return graph().describe(c.face) + "|" + join(c.wedge) + "|" + join(c.coweight);
  }

 private:
  FaceCycles data_;
  std::vector<std::vector<std::vector<std::vector<CksCell>>>> blocks_;
  std::unordered_map<CksCell, std::size_t, CksCellHash> index_;
};

// Cohomology of CKS at every tridegree (p, q, r).
struct TrigradedCohomology {
  int genus = 0;
  std::map<Tridegree, DegreeCohomology> groups;

  std::size_t rank(int p, int q, int r) const {
    auto it = groups.find({p, q, r});
    return it == groups.end() ? 0 : it->second.rank;
  }
  bool torsion_free() const {
    for (const auto& [t, h] : groups) {
      if (!h.torsion.empty()) return false;
    }
    return true;
  }
  // Nonzero ranks only.
  std::map<Tridegree, std::size_t> ranks() const {
    std::map<Tridegree, std::size_t> out;
    for (const auto& [t, h] : groups) {
      if (h.rank > 0) out.emplace(t, h.rank);
    }
    return out;
  }
};

inline TrigradedCohomology cks_cohomology(const CKSComplex& cks) {
  TrigradedCohomology out;
  const int d = cks.genus();
  out.genus = d;
  for (int k = 0; k <= d; ++k) {
    for (int l = 0; l <= d; ++l) {
      GradedCohomology h = cohomology(cks.graded_piece(k, l));
      for (int p = 0; p <= k; ++p) {
        if (cks.cells(p, k - p, l).empty()) continue;
        out.groups.emplace(Tridegree{p, k - p, l}, h.at(p));
      }
    }
  }
  return out;
}

inline TrigradedCohomology cks_cohomology(const Graph& g) {
  return cks_cohomology(CKSComplex(coherent_cotree(g)));
}

// e(k, l) = Σ_p (-1)^p rank H^{2p,k-p,l}, indexed [k][l], 0 <= k, l <= d.
using EulerTable = std::vector<std::vector<BigInt>>;

inline EulerTable euler_table(const TrigradedCohomology& h) {
  const int d = h.genus;
  EulerTable e(d + 1, std::vector<BigInt>(d + 1, 0));
  for (const auto& [t, grp] : h.groups) {
    auto [p, q, r] = t;
    e[p + q][r] += (p % 2 == 0 ? 1 : -1) * static_cast<long>(grp.rank);
  }
  return e;
}

// The same table from cell counts; must agree with the cohomological one.
inline EulerTable euler_table_from_cells(const CKSComplex& cks) {
  const int d = cks.genus();
  EulerTable e(d + 1, std::vector<BigInt>(d + 1, 0));
  for (int p = 0; p <= d; ++p) {
    for (int q = 0; q <= d - p; ++q) {
      for (int r = 0; r <= d - p; ++r) {
        e[p + q][r] += (p % 2 == 0 ? 1 : -1) * static_cast<long>(cks.cells(p, q, r).size());
      }
    }
  }
  return e;
}

// (-1)^d Σ e(k,l) x^{d-k} y^l.
inline Poly2 h_hat(const EulerTable& e) {
  const int d = static_cast<int>(e.size()) - 1;
  Poly2 out;
  for (int k = 0; k <= d; ++k) {
    for (int l = 0; l <= d; ++l) out.add(d - k, l, (d % 2 == 0 ? 1 : -1) * e[k][l]);
  }
  return out;
}

inline Poly2 h_hat(const Graph& g) { return h_hat(euler_table(cks_cohomology(g))); }

// w = -(x + y + xy).
inline Poly2 loop_weight() { return -(Poly2::x() + Poly2::y() + Poly2::x() * Poly2::y()); }

// T(w, 1): the first Tutte argument replaced by w.
inline Poly2 tutte_specialization(const Graph& g) {
  return tutte(g).substitute(loop_weight(), Poly2(1));
}

// T(1, w): bridges weigh 1 and loops weigh w. This is the form that
// satisfies the deletion-contraction recurrence of the Euler table.
inline Poly2 tutte_specialization_dual(const Graph& g) {
  return tutte(g).substitute(Poly2(1), loop_weight());
}

// Σ over tridegrees of (-1)^{2p+q+r} rank.
inline BigInt total_euler_characteristic(const TrigradedCohomology& h) {
  BigInt out = 0;
  for (const auto& [t, grp] : h.groups) {
    auto [p, q, r] = t;
    (void)p;
    out += ((q + r) % 2 == 0 ? 1 : -1) * static_cast<long>(grp.rank);
  }
  return out;
}

// (n, k) -> Σ_{p+q=n+k} rank H^p(gr^{k,q}).
inline std::map<std::pair<int, int>, std::size_t> group_cohomology_table(
    const TrigradedCohomology& h) {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [t, grp] : h.groups) {
    if (grp.rank == 0) continue;
    auto [p, qq, l] = t;
    int k = p + qq;
    int n = p + l - k;
    if (n < 0) continue;
    out[{n, k}] += grp.rank;
  }
  return out;
}

// Ranks after the bigrading (2p, q + r).
inline std::map<std::pair<int, int>, std::size_t> bigraded_ranks(
    const TrigradedCohomology& h) {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [t, grp] : h.groups) {
    auto [p, q, r] = t;
    if (grp.rank > 0) out[{p, q + r}] += grp.rank;
  }
  return out;
}

// Graded convolution of two rank tables.
inline std::map<Tridegree, std::size_t> kunneth_ranks(const TrigradedCohomology& a,
                                                      const TrigradedCohomology& b) {
  std::map<Tridegree, std::size_t> out;
  for (const auto& [ta, ra] : a.ranks()) {
    for (const auto& [tb, rb] : b.ranks()) {
      auto [p1, q1, r1] = ta;
      auto [p2, q2, r2] = tb;
      out[{p1 + p2, q1 + q2, r1 + r2}] += ra * rb;
    }
  }
  return out;
}

// The short exact sequence 0 -> CKS^{•-2}(Γ∖e) -> CKS(Γ) -> CKS(Γ/e) -> 0.
struct DelConCKS {
  Graph graph;
  int edge = -1;
  bool chain_maps = true;
  bool short_exact = true;
  bool euler_recurrence = true;
  std::string witness;

  bool ok() const { return chain_maps && short_exact && euler_recurrence; }
};

inline DelConCKS delcon_cks(const Graph& input, int e_input) {
  DelConCKS out;
  const std::string label = input.edge(e_input).label;
  out.graph = order_for_contraction(input, e_input);
  const Graph& g = out.graph;
  const int e = g.index_of(label);
  out.edge = e;
  const EdgeSet removed{e};
  CoherentCotree cg = coherent_cotree(g);
  CKSComplex full(cg);
  CKSComplex del(induced_on_deletion(cg, e));
  CKSComplex con(induced_on_contraction(cg, e));
  const int d = g.genus();

  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && out.witness.empty()) out.witness = why;
    flag = false;
  };
  auto inc_cell = [&](const CksCell& c) {
    return CksCell{expand(c.face, removed).with(e), expand(c.wedge, removed),
                   expand(c.coweight, removed)};
  };
  auto proj_cell = [&](const CksCell& c) {
    return CksCell{compress(c.face, removed), compress(c.wedge, removed),
                   compress(c.coweight, removed)};
  };
  // Inclusion block (p-1,q,r) of Γ∖e into (p,q,r) of Γ.
  auto inclusion = [&](int p, int q, int r) {
    const auto& src = del.cells(p - 1, q, r);
    IntMatrix m(full.cells(p, q, r).size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) m(full.index(inc_cell(src[j])), j) = 1;
    return m;
  };
  auto projection = [&](int p, int q, int r) {
    const auto& src = full.cells(p, q, r);
    IntMatrix m(con.cells(p, q, r).size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      if (src[j].face.contains(e)) continue;
      m(con.index(proj_cell(src[j])), j) = 1;
    }
    return m;
  };

  for (int p = 0; p <= d; ++p) {
    for (int q = 0; q <= d - p; ++q) {
      for (int r = 0; r <= d - p; ++r) {
        std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + "," +
                         std::to_string(r) + ")";
        IntMatrix i0 = inclusion(p, q, r);
        IntMatrix p0 = projection(p, q, r);
        if (rank(i0) != i0.cols() || rank(p0) != p0.rows() || !(p0 * i0).is_zero() ||
            i0.cols() + p0.rows() != i0.rows()) {
          fail(out.short_exact, at);
        }
        if (q >= 1) {
          IntMatrix lhs = full.differential(p, q, r) * i0;
          IntMatrix rhs = inclusion(p + 1, q - 1, r) * del.differential(p - 1, q, r);
          if (!(lhs == rhs)) fail(out.chain_maps, "inclusion at " + at);
          IntMatrix lhs2 = projection(p + 1, q - 1, r) * full.differential(p, q, r);
          IntMatrix rhs2 = con.differential(p, q, r) * p0;
          if (!(lhs2 == rhs2)) fail(out.chain_maps, "projection at " + at);
        }
      }
    }
  }

  // Each graph with its own shelling cotree.
  EulerTable eg = euler_table(cks_cohomology(g));
  EulerTable ed = euler_table(cks_cohomology(deletion(g, removed)));
  EulerTable ec = euler_table(cks_cohomology(contraction(g, removed)));
  auto at = [](const EulerTable& t, int k, int l) {
    if (k < 0 || l < 0 || k >= static_cast<int>(t.size()) ||
        l >= static_cast<int>(t.size())) {
      return BigInt(0);
    }
    return t[k][l];
  };
  for (int k = 0; k <= d; ++k) {
    for (int l = 0; l <= d; ++l) {
      if (eg[k][l] != at(ec, k, l) - at(ed, k - 1, l)) {
        fail(out.euler_recurrence,
             "e(" + std::to_string(k) + "," + std::to_string(l) + ")");
      }
    }
  }
  return out;
}

}  // namespace ckskit

#endif  // CKSKIT_CKS_HPP_
