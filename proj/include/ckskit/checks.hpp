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

#ifndef CKSKIT_CHECKS_HPP_
#define CKSKIT_CHECKS_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckskit/activity.hpp"
#include "ckskit/cks.hpp"
#include "ckskit/graph.hpp"
#include "ckskit/graph_io.hpp"
#include "ckskit/ht.hpp"
#include "ckskit/periodize.hpp"
#include "ckskit/smith.hpp"
#include <nlohmann/json.hpp>

namespace ckskit {

struct CheckResult {
  std::string name;
  bool pass = true;
  nlohmann::json witness;  // null when passing
};

struct CheckOptions {
  std::string choice = "min";  // "min" or "theta"
  std::vector<int> levels = {1, 2};
  int max_periodize_edges = 4;
  int max_unimodular_edges = 6;
};

// Every square minor lies in {-1, 0, 1}. On failure `bad` gets the rows
// and columns of an offending minor.
inline bool totally_unimodular(const Matrix<int>& m,
                               std::pair<std::vector<int>, std::vector<int>>* bad = nullptr) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    bool ok = true;
    for_each_combination(rows, k, [&](EdgeSet rs) {
      if (!ok) return;
      for_each_combination(cols, k, [&](EdgeSet cs) {
        if (!ok) return;
        IntMatrix sub(k, k);
        int i = 0;
        for (int r : rs) {
          int j = 0;
          for (int c : cs) sub(i, j++) = m(r, c);
          ++i;
        }
        BigInt det = determinant(sub);
        if (det > 1 || det < -1) {
          ok = false;
          if (bad) *bad = {rs.to_vector(), cs.to_vector()};
        }
      });
    });
    if (!ok) return false;
  }
  return true;
}

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> kNames = {
      "graph.roundtrip",      "graph.unimodular",     "activity.shelling",
      "activity.tutte_orders", "activity.tutte_delcon", "activity.kirchhoff",
      "activity.basis_h",     "ht.identities",        "ht.exactness",
      "ht.split",             "ht.j_basis",           "ht.cotree_elim",
      "ht.ring",              "ht.delcon",            "cks.d_squared",
      "cks.euler_cells",      "cks.tutte",            "cks.tutte_literal",
      "cks.spanning_trees",   "cks.delcon",           "periodize.in_formula",
      "periodize.contraction", "periodize.delcon"};
  return kNames;
}

// Everything except the literal first-argument Tutte form, which does not
// hold in general and is available on request.
inline std::vector<std::string> default_check_names() {
  std::vector<std::string> out;
  for (const auto& n : all_check_names()) {
    if (n != "cks.tutte_literal") out.push_back(n);
  }
  return out;
}

// Edges that are neither bridges nor loops.
inline std::vector<int> admissible_edges(const Graph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!g.is_loop(e) && !g.is_bridge(e)) out.push_back(e);
  }
  return out;
}

namespace internal {

// Lazily built per-graph data shared between checks.
class CheckContext {
 public:
  CheckContext(const Graph& g, const CheckOptions& opt) : g_(g), opt_(opt) {}

  const Graph& graph() const { return g_; }
  const CheckOptions& options() const { return opt_; }

  const CoherentCotree& cotree() {
    if (!cotree_) cotree_.emplace(coherent_cotree(g_));
    return *cotree_;
  }
  const HTComplex& ht() {
    if (!ht_) ht_ = std::make_unique<HTComplex>(cotree());
    return *ht_;
  }
  const ChoiceFunction& choice() {
    if (!choice_) {
      choice_.emplace(opt_.choice == "theta" ? theta_preset_choice(cotree())
                                             : ChoiceFunction::minimal(cotree()));
    }
    return *choice_;
  }
  const Homotopy& homotopy() {
    if (!hom_) hom_ = std::make_unique<Homotopy>(ht(), choice());
    return *hom_;
  }
  const HomotopyMaps& maps() {
    if (!maps_) maps_.emplace(maps_fgh(ht(), homotopy()));
    return *maps_;
  }
  const SplitReport& split() {
    if (!split_) split_.emplace(check_splitting(ht(), maps(), choice()));
    return *split_;
  }
  const CKSComplex& cks() {
    if (!cks_) cks_ = std::make_unique<CKSComplex>(cotree());
    return *cks_;
  }
  const TrigradedCohomology& cks_h() {
    if (!cks_h_) cks_h_.emplace(cks_cohomology(cks()));
    return *cks_h_;
  }
  const Poly2& tutte_poly() {
    if (!tutte_) tutte_.emplace(tutte(g_));
    return *tutte_;
  }

 private:
  const Graph& g_;
  const CheckOptions& opt_;
  std::optional<CoherentCotree> cotree_;
  std::unique_ptr<HTComplex> ht_;
  std::optional<ChoiceFunction> choice_;
  std::unique_ptr<Homotopy> hom_;
  std::optional<HomotopyMaps> maps_;
  std::optional<SplitReport> split_;
  std::unique_ptr<CKSComplex> cks_;
  std::optional<TrigradedCohomology> cks_h_;
  std::optional<Poly2> tutte_;
};

inline nlohmann::json bools(const std::vector<bool>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

inline CheckResult run_one(const std::string& name, CheckContext& cx) {
  const Graph& g = cx.graph();
  const CheckOptions& opt = cx.options();
  CheckResult r;
  r.name = name;
  auto fail = [&](nlohmann::json w) {
    r.pass = false;
    r.witness = std::move(w);
  };
  auto skip = [&](const std::string& why) { r.witness = {{"skipped", why}}; };

  if (name == "graph.roundtrip") {
    Graph a = graph_from_json(graph_to_json(g));
    Graph b = graph_from_dsl(graph_to_dsl(g));
    if (!(a == g) || !(b == g)) fail({{"json", a == g}, {"dsl", b == g}});
  } else if (name == "graph.unimodular") {
    if (g.num_edges() > opt.max_unimodular_edges) {
      skip("more than " + std::to_string(opt.max_unimodular_edges) + " edges");
      return r;
    }
    std::pair<std::vector<int>, std::vector<int>> bad;
    if (!totally_unimodular(boundary_matrix(g), &bad)) {
      fail({{"matrix", "boundary"}, {"rows", bad.first}, {"cols", bad.second}});
      return r;
    }
    for (EdgeSet c : spanning_cotrees(g)) {
      if (!totally_unimodular(h1_basis(g, c).cycle_matrix, &bad)) {
        fail({{"cotree", g.labels(c)}, {"rows", bad.first}, {"cols", bad.second}});
        return r;
      }
    }
  } else if (name == "activity.shelling") {
    std::string why;
    if (!verify_shelling(lex_shelling(g), &why)) fail({{"reason", why}});
  } else if (name == "activity.tutte_orders") {
    const int m = g.num_edges();
    std::vector<std::vector<int>> orders(3, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
      orders[0][i] = i;
      orders[1][i] = m - 1 - i;
      orders[2][i] = (i + 1) % m;
    }
    for (const auto& o : orders) {
      Poly2 t = tutte_by_activity(reorder(g, o));
      if (!(t == cx.tutte_poly())) {
        fail({{"order", o}, {"activity", t.to_string()},
              {"rank_nullity", cx.tutte_poly().to_string()}});
        return r;
      }
    }
  } else if (name == "activity.tutte_delcon") {
    for (int e = 0; e < g.num_edges(); ++e) {
      Poly2 expect;
      if (g.is_loop(e)) {
        expect = Poly2::y() * tutte(deletion(g, EdgeSet{e}));
      } else if (g.is_bridge(e)) {
        expect = Poly2::x() * tutte(contraction(g, EdgeSet{e}));
      } else {
        expect = tutte(deletion(g, EdgeSet{e})) + tutte(contraction(g, EdgeSet{e}));
      }
      if (!(expect == cx.tutte_poly())) {
        fail({{"edge", g.edge(e).label}, {"recurrence", expect.to_string()}});
        return r;
      }
    }
  } else if (name == "activity.kirchhoff") {
    BigInt trees = spanning_tree_count(g);
    BigInt h1 = cx.tutte_poly().evaluate(1, 1);
    std::size_t b = 0;
    for (const auto& level : cx.cotree().basis()) b += level.size();
    if (trees != h1 || trees != b) {
      fail({{"kirchhoff", to_json_value(trees)}, {"h(1)", to_json_value(h1)},
            {"basis", b}});
    }
  } else if (name == "activity.basis_h") {
    Poly1 h = h_polynomial(g);
    auto b = cx.cotree().basis();
    const int d = g.genus();
    for (int k = 0; k <= d; ++k) {
      if (h.coefficient(k) != b[d - k].size()) {
        fail({{"q_power", k}, {"coefficient", to_json_value(h.coefficient(k))},
              {"basis_count", b[d - k].size()}});
        return r;
      }
    }
  } else if (name == "ht.identities") {
    IdentityReport ir = check_identities(cx.ht(), cx.maps());
    if (!ir.ok()) {
      fail({{"piece", ir.witness},
            {"d_squared_zero", ir.d_squared_zero},
            {"fg_identity", ir.fg_identity},
            {"fd_zero", ir.fd_zero},
            {"homotopy", ir.homotopy}});
    }
  } else if (name == "ht.exactness") {
    const SplitReport& s = cx.split();
    if (std::find(s.exact.begin(), s.exact.end(), false) != s.exact.end()) {
      fail({{"exact_by_k", bools(s.exact)}});
    }
  } else if (name == "ht.split") {
    const SplitReport& s = cx.split();
    if (std::find(s.direct_sum.begin(), s.direct_sum.end(), false) != s.direct_sum.end()) {
      fail({{"direct_sum_by_k", bools(s.direct_sum)}});
    }
  } else if (name == "ht.j_basis") {
    const SplitReport& s = cx.split();
    if (std::find(s.j_basis.begin(), s.j_basis.end(), false) != s.j_basis.end()) {
      fail({{"j_basis_by_k", bools(s.j_basis)}, {"sizes", s.j_size}});
    }
  } else if (name == "ht.cotree_elim") {
    for (const auto& e : check_cotree_elimination(cx.ht())) {
      if (!e.ok()) {
        fail({{"x", g.edge(e.x).label}, {"y", g.edge(e.y).label}});
        return r;
      }
    }
  } else if (name == "ht.ring") {
    RRing ring = r_ring(cx.ht(), cx.homotopy());
    RingReport rr = check_ring(ring, g);
    if (!rr.ok()) {
      fail({{"unit", rr.unit}, {"associative", rr.associative}, {"graded", rr.graded},
            {"dims_match_h", rr.dims_match_h}});
    }
  } else if (name == "ht.delcon") {
    for (int e : admissible_edges(g)) {
      DelConR dc = delcon_r(g, e);
      if (!dc.ok()) {
        fail({{"edge", g.edge(e).label},
              {"inclusion_well_defined", dc.inclusion_well_defined},
              {"projection_well_defined", dc.projection_well_defined},
              {"partition", dc.partition},
              {"exact", dc.exact},
              {"dims_add", dc.dims_add}});
        return r;
      }
    }
  } else if (name == "cks.d_squared") {
    const CKSComplex& c = cx.cks();
    for (int k = 0; k <= g.genus(); ++k) {
      for (int l = 0; l <= g.genus(); ++l) {
        int bad = c.graded_piece(k, l).first_nonzero_square();
        if (bad >= 0) {
          fail({{"k", k}, {"l", l}, {"p", bad}});
          return r;
        }
      }
    }
  } else if (name == "cks.euler_cells") {
    if (euler_table(cx.cks_h()) != euler_table_from_cells(cx.cks())) {
      fail({{"reason", "Euler table from ranks differs from cell counts"}});
    }
  } else if (name == "cks.tutte") {
    Poly2 hh = h_hat(euler_table(cx.cks_h()));
    Poly2 t = tutte_specialization_dual(g);
    if (!(hh == t)) fail({{"h_hat", hh.to_string()}, {"T(1,w)", t.to_string()}});
  } else if (name == "cks.tutte_literal") {
    if (admissible_edges(g).empty()) {
      skip("no edge is neither a bridge nor a loop");
      return r;
    }
    Poly2 hh = h_hat(euler_table(cx.cks_h()));
    Poly2 t = tutte_specialization(g);
    if (!(hh == t)) fail({{"h_hat", hh.to_string()}, {"T(w,1)", t.to_string()}});
  } else if (name == "cks.spanning_trees") {
    BigInt chi = total_euler_characteristic(cx.cks_h());
    BigInt at = h_hat(euler_table(cx.cks_h())).evaluate(-1, -1);
    BigInt trees = spanning_tree_count(g);
    if (chi != trees || at != trees) {
      fail({{"chi", to_json_value(chi)}, {"h_hat(-1,-1)", to_json_value(at)},
            {"spanning_trees", to_json_value(trees)}});
    }
  } else if (name == "cks.delcon") {
    for (int e : admissible_edges(g)) {
      DelConCKS dc = delcon_cks(g, e);
      if (!dc.ok()) {
        fail({{"edge", g.edge(e).label},
              {"chain_maps", dc.chain_maps},
              {"short_exact", dc.short_exact},
              {"euler_recurrence", dc.euler_recurrence},
              {"at", dc.witness}});
        return r;
      }
    }
  } else if (name == "periodize.in_formula") {
    if (g.num_edges() > opt.max_periodize_edges) {
      skip("more than " + std::to_string(opt.max_periodize_edges) + " edges");
      return r;
    }
    for (int n : opt.levels) {
      PeriodizationReport p = check_periodization(cx.cotree(), n);
      if (!p.ok()) {
        fail({{"level", n}, {"in_formula", p.in_formula}, {"basis_formula", p.basis_formula},
              {"genus_preserved", p.genus_preserved}, {"h_two_routes", p.h_two_routes},
              {"face", p.witness}});
        return r;
      }
    }
  } else if (name == "periodize.contraction") {
    if (g.num_edges() > opt.max_periodize_edges) {
      skip("more than " + std::to_string(opt.max_periodize_edges) + " edges");
      return r;
    }
    for (int n : opt.levels) {
      ContractionReport c = check_level_contraction(cx.cotree(), n - 1);
      if (!c.ok()) {
        fail({{"from_level", n}, {"graph_matches", c.graph_matches},
              {"basis_onto", c.basis_onto}});
        return r;
      }
    }
  } else if (name == "periodize.delcon") {
    if (g.num_edges() > opt.max_periodize_edges) {
      skip("more than " + std::to_string(opt.max_periodize_edges) + " edges");
      return r;
    }
    for (int n : opt.levels) {
      for (int e : admissible_edges(g)) {
        PeriodicDelCon dc = delcon_r_periodized(g, e, n);
        if (!dc.ok()) {
          fail({{"level", n}, {"edge", g.edge(e).label}, {"dims", dc.dims},
                {"dims_deletion", dc.dims_deletion},
                {"dims_contraction", dc.dims_contraction}, {"partition", dc.partition}});
          return r;
        }
      }
    }
  } else {
    throw ParseError("unknown check " + name);
  }
  return r;
}

}  // namespace internal

// Throws ParseError on unknown names; anything a check throws is recorded
// as a failure with the error in the witness.
inline void validate_check_names(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    const auto& all = all_check_names();
    if (std::find(all.begin(), all.end(), n) == all.end()) {
      throw ParseError("unknown check " + n);
    }
  }
}

inline std::vector<CheckResult> run_checks(const Graph& g,
                                           const std::vector<std::string>& names,
                                           const CheckOptions& opt = {}) {
  validate_check_names(names);
  internal::CheckContext cx(g, opt);
  std::vector<CheckResult> out;
  for (const auto& n : names) {
    try {
      out.push_back(internal::run_one(n, cx));
    } catch (const Error& e) {
      out.push_back({n, false, {{"error", e.kind()}, {"message", e.what()}}});
    }
  }
  return out;
}

inline nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j = {{"name", r.name}, {"pass", r.pass}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

}  // namespace ckskit

#endif  // CKSKIT_CHECKS_HPP_
