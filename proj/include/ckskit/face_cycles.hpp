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

#ifndef CKSKIT_FACE_CYCLES_HPP_
#define CKSKIT_FACE_CYCLES_HPP_

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ckskit/activity.hpp"
#include "ckskit/edge_set.hpp"
#include "ckskit/errors.hpp"
#include "ckskit/graph.hpp"

namespace ckskit {

// Basis element of Λ^q H_1(Γ∖S): the wedge of γ^S_x over x in `wedge`,
// in increasing edge order, where wedge ⊆ C(S).
struct Cell {
  EdgeSet face;
  EdgeSet wedge;

  bool operator==(const Cell&) const = default;
  friend bool operator<(const Cell& a, const Cell& b) {
    if (a.face.bits() != b.face.bits()) return a.face.bits() < b.face.bits();
    return a.wedge.bits() < b.wedge.bits();
  }
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    return std::hash<std::uint64_t>()(c.face.bits() * 0x9E3779B97F4A7C15ULL ^
                                      c.wedge.bits());
  }
};

// A signed wedge monomial.
struct WedgeTerm {
  EdgeSet wedge;
  int coeff;
};

// Fundamental cycles γ^S_x of every face S with respect to the spanning
// tree T(S) = E∖S∖C(S) of Γ∖S, and the interior products built on them.
class FaceCycles {
 public:
  explicit FaceCycles(CoherentCotree cotree) : cotree_(std::move(cotree)) {
    const Graph& g = cotree_.graph();
    for (EdgeSet s : cotree_.faces().all()) {
      EdgeSet c = cotree_.cotree(s);
      TreePaths paths(g, g.all_edges() - s - c);
      std::vector<std::vector<int>> rows;
      for (int x : c) rows.push_back(fundamental_cycle(g, paths, x));
      cycles_.emplace(s, std::move(rows));
    }
  }

  const CoherentCotree& cotree() const { return cotree_; }
  const Graph& graph() const { return cotree_.graph(); }
  int genus() const { return cotree_.genus(); }

  // γ^S_x in Z^E, for x in C(S).
  const std::vector<int>& cycle(EdgeSet s, int x) const {
    auto it = cycles_.find(s);
    if (it == cycles_.end()) throw FaceNotInComplex(graph().describe(s));
    EdgeSet c = cotree_.cotree(s);
    if (!c.contains(x)) {
      throw InvalidGraph(graph().edge(x).label + " is not in C(" +
                         graph().describe(s) + ")");
    }
    return it->second[c.rank_of(x)];
  }

  // <γ^S_x, e>.
  int pair(EdgeSet s, int x, int e) const { return cycle(s, x)[e]; }

  // The single edge of C(S) that is not in C(S ∪ e).
  int dropped(EdgeSet s, int e) const {
    EdgeSet diff = cotree_.cotree(s) - cotree_.cotree(s.with(e));
    if (diff.size() != 1) throw InvalidCoherentCotree("C(S u e) not of corank 1");
    return diff.min();
  }

  // ι_e(∧_{x∈w} γ^S_x) = Σ_i (-1)^i <γ^S_{x_i}, e> ∧_{j≠i} γ^S_{x_j}, written
  // in C(S ∪ e) coordinates by dropping the monomials that contain the
  // dropped edge. Requires S ∪ e to be a face.
  std::vector<WedgeTerm> interior(EdgeSet s, EdgeSet w, int e) const {
    std::vector<WedgeTerm> out;
    int c = dropped(s, e);
    int i = 0;
    for (int x : w) {
      int p = pair(s, x, e);
      EdgeSet rest = w.without(x);
      if (p != 0 && !rest.contains(c)) {
        out.push_back({rest, (i % 2 == 0 ? 1 : -1) * p});
      }
      ++i;
    }
    return out;
  }

 private:
  CoherentCotree cotree_;
  std::unordered_map<EdgeSet, std::vector<std::vector<int>>> cycles_;
};

// Wedge sign: x ∧ (∧ w) = sign * ∧(w ∪ x) for x not in w.
inline int insertion_sign(EdgeSet w, int x) { return w.rank_of(x) % 2 == 0 ? 1 : -1; }

}  // namespace ckskit

#endif  // CKSKIT_FACE_CYCLES_HPP_
