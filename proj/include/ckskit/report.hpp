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

#ifndef CKSKIT_REPORT_HPP_
#define CKSKIT_REPORT_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ckskit/activity.hpp"
#include "ckskit/checks.hpp"
#include "ckskit/cks.hpp"
#include "ckskit/graph_io.hpp"
#include "ckskit/ht.hpp"
#include "ckskit/periodize.hpp"

// JSON reports. Keys are sorted by the json object type, so equal inputs
// give byte-identical dumps.
namespace ckskit {

inline constexpr int kSchemaVersion = 1;

namespace internal {

inline std::string tridegree_key(int p, int q, int r) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

inline std::string pair_key(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

inline nlohmann::json set_list(const Graph& g, const std::vector<EdgeSet>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (EdgeSet s : sets) out.push_back(edge_set_to_json(g, s));
  return out;
}

inline nlohmann::json face_vector_json(const Graph& g, const FaceVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [s, c] : v) out.push_back({{"face", g.labels(s)}, {"coeff", to_json_value(c)}});
  return out;
}

}  // namespace internal

inline nlohmann::json activity_json(const CoherentCotree& c) {
  const Graph& g = c.graph();
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["graph"] = graph_to_json(g);
  nlohmann::json shelling = nlohmann::json::array();
  nlohmann::json restrictions = nlohmann::json::array();
  if (c.shelling()) {
    for (std::size_t k = 0; k < c.shelling()->cotrees.size(); ++k) {
      shelling.push_back(g.labels(c.shelling()->cotrees[k]));
      restrictions.push_back(g.labels(c.shelling()->restrictions[k]));
    }
  }
  j["shelling"] = shelling;
  j["restriction_sets"] = restrictions;
  nlohmann::json cotree = nlohmann::json::array();
  nlohmann::json in_table = nlohmann::json::array();
  for (EdgeSet s : c.faces().all()) {
    cotree.push_back({{"face", g.labels(s)}, {"cotree", g.labels(c.cotree(s))}});
    in_table.push_back({{"face", g.labels(s)}, {"in", g.labels(c.cotree_in(s))}});
  }
  j["coherent_cotree"] = cotree;
  j["In_table"] = in_table;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& level : c.basis()) basis.push_back(internal::set_list(g, level));
  j["basis_B"] = basis;
  Poly2 t = tutte(g);
  j["tutte"] = {{"string", t.to_string()}, {"terms", t.to_json()}};
  Poly1 h = t.at_x_one();
  j["h_poly"] = {{"string", h.to_string()}, {"coefficients", h.to_json()}};
  return j;
}

struct HtReportOptions {
  std::string choice = "min";
  bool with_maps = false;
};

inline nlohmann::json ht_json(const CoherentCotree& c, const HtReportOptions& opt = {}) {
  const Graph& g = c.graph();
  HTComplex ht(c);
  ChoiceFunction choice =
      opt.choice == "theta" ? theta_preset_choice(c) : ChoiceFunction::minimal(c);
  Homotopy hom(ht, choice);
  HomotopyMaps maps = maps_fgh(ht, hom);
  const int d = g.genus();

  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["graph"] = graph_to_json(g);
  j["choice"] = opt.choice;

  nlohmann::json cells = nlohmann::json::object();
  nlohmann::json diffs = nlohmann::json::array();
  for (int p = 0; p <= d; ++p) {
    for (int q = 0; p + q <= d; ++q) {
      cells[internal::pair_key(p, q)] = ht.cells(p, q).size();
      if (p + 1 > d || q < 1) continue;
      IntMatrix m = ht.differential(p, q);
      diffs.push_back({{"from", {p, q}},
                       {"to", {p + 1, q - 1}},
                       {"rows", m.rows()},
                       {"cols", m.cols()},
                       {"entries", sparse_triples(m)}});
    }
  }
  nlohmann::json labels = nlohmann::json::object();
  for (int p = 0; p <= d; ++p) {
    for (int q = 0; p + q <= d; ++q) {
      nlohmann::json l = nlohmann::json::array();
      for (const Cell& cell : ht.cells(p, q)) l.push_back(ht.label(cell));
      labels[internal::pair_key(p, q)] = l;
    }
  }
  j["cells"] = labels;
  j["differentials"] = diffs;
  nlohmann::json basis = nlohmann::json::array();
  nlohmann::json basis_dims = nlohmann::json::array();
  for (const auto& level : maps.basis) {
    basis.push_back(internal::set_list(g, level));
    basis_dims.push_back(level.size());
  }
  j["basis_B"] = basis;
  j["dims"] = {{"cells", cells}, {"basis", basis_dims}};

  nlohmann::json cohom = nlohmann::json::array();
  for (const GradedCohomology& gc : ht_cohomology(ht)) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& deg : gc.degrees) row.push_back(to_json(deg));
    cohom.push_back(row);
  }
  j["cohomology_by_k"] = cohom;

  IdentityReport ir = check_identities(ht, maps);
  SplitReport sr = check_splitting(ht, maps, choice);
  RingReport rr = check_ring(r_ring(ht, hom), g);
  bool cotree_elim = true;
  for (const auto& e : check_cotree_elimination(ht)) cotree_elim = cotree_elim && e.ok();
  j["identities"] = {{"d_squared_zero", ir.d_squared_zero},
                     {"fg_identity", ir.fg_identity},
                     {"fd_zero", ir.fd_zero},
                     {"homotopy", ir.homotopy},
                     {"direct_sum", internal::bools(sr.direct_sum)},
                     {"exact", internal::bools(sr.exact)},
                     {"j_basis", internal::bools(sr.j_basis)},
                     {"cotree_elimination", cotree_elim},
                     {"ring", rr.ok()}};
  if (!ir.witness.empty()) j["identities"]["witness"] = ir.witness;

  if (opt.with_maps) {
    nlohmann::json f = nlohmann::json::array();
    nlohmann::json gm = nlohmann::json::array();
    for (int k = 0; k <= d; ++k) {
      f.push_back(matrix_to_json(maps.f[k]));
      gm.push_back(matrix_to_json(maps.g[k]));
    }
    nlohmann::json h = nlohmann::json::object();
    for (int p = 1; p <= d; ++p) {
      for (int q = 0; p + q <= d; ++q) {
        h[internal::pair_key(p, q)] = matrix_to_json(maps.h[p][q]);
      }
    }
    nlohmann::json table = nlohmann::json::array();
    for (EdgeSet s : c.faces().all()) {
      if (!s.empty() && choice.defined(s)) {
        table.push_back({{"face", g.labels(s)}, {"choice", g.edge(choice(s)).label}});
      }
    }
    j["maps"] = {{"f", f}, {"g", gm}, {"h", h}, {"choice_table", table}};
  }
  return j;
}

inline nlohmann::json cks_json(const CoherentCotree& c, bool with_recurrence = true) {
  const Graph& g = c.graph();
  CKSComplex cks(c);
  TrigradedCohomology h = cks_cohomology(cks);
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["graph"] = graph_to_json(g);

  nlohmann::json ranks = nlohmann::json::object();
  nlohmann::json torsion = nlohmann::json::object();
  for (const auto& [t, grp] : h.groups) {
    auto [p, q, r] = t;
    if (grp.rank > 0) ranks[internal::tridegree_key(p, q, r)] = grp.rank;
    if (!grp.torsion.empty()) {
      nlohmann::json tj = nlohmann::json::array();
      for (const BigInt& v : grp.torsion) tj.push_back(to_json_value(v));
      torsion[internal::tridegree_key(p, q, r)] = tj;
    }
  }
  j["ranks_by_tridegree"] = ranks;
  j["torsion"] = torsion;

  nlohmann::json bigraded = nlohmann::json::object();
  for (const auto& [k, v] : bigraded_ranks(h)) bigraded[internal::pair_key(k.first, k.second)] = v;
  j["ranks_bigraded"] = bigraded;
  nlohmann::json gc = nlohmann::json::object();
  for (const auto& [k, v] : group_cohomology_table(h)) gc[internal::pair_key(k.first, k.second)] = v;
  j["group_cohomology"] = gc;

  EulerTable e = euler_table(h);
  nlohmann::json et = nlohmann::json::array();
  for (const auto& row : e) {
    nlohmann::json r = nlohmann::json::array();
    for (const BigInt& v : row) r.push_back(to_json_value(v));
    et.push_back(r);
  }
  j["euler_table"] = et;
  Poly2 hh = h_hat(e);
  j["h_hat"] = {{"string", hh.to_string()}, {"terms", hh.to_json()}};
  Poly2 dual = tutte_specialization_dual(g);
  Poly2 literal = tutte_specialization(g);
  j["tutte_specialization"] = {
      {"T(1,w)", dual.to_string()},
      {"T(w,1)", literal.to_string()},
      {"w", loop_weight().to_string()},
      {"matches_T(1,w)", hh == dual},
      {"matches_T(w,1)", hh == literal}};
  BigInt chi = total_euler_characteristic(h);
  j["total_euler_characteristic"] = to_json_value(chi);
  j["spanning_trees"] = to_json_value(spanning_tree_count(g));

  if (with_recurrence) {
    nlohmann::json rec = nlohmann::json::array();
    for (int edge : admissible_edges(g)) {
      DelConCKS dc = delcon_cks(g, edge);
      nlohmann::json item = {{"edge", g.edge(edge).label},
                             {"chain_maps", dc.chain_maps},
                             {"short_exact", dc.short_exact},
                             {"euler_recurrence", dc.euler_recurrence}};
      if (!dc.witness.empty()) item["witness"] = dc.witness;
      rec.push_back(item);
    }
    j["recurrence_checks"] = rec;
  }
  return j;
}

// Euler table as CSV: header "k,l0,l1,...", one row per k.
inline std::string euler_csv(const EulerTable& e) {
  std::string out = "k";
  const std::size_t width = e.empty() ? 0 : e[0].size();
  for (std::size_t l = 0; l < width; ++l) out += ",l" + std::to_string(l);
  out += "\n";
  for (std::size_t k = 0; k < e.size(); ++k) {
    out += std::to_string(k);
    for (const BigInt& v : e[k]) out += "," + v.get_str();
    out += "\n";
  }
  return out;
}

inline nlohmann::json periodize_json(const CoherentCotree& c, int n,
                                     const HtReportOptions& opt = {}) {
  PeriodizedGraph pg = periodize_graph(c.graph(), n);
  CoherentCotree cn = periodized_cotree(c, pg);
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["level"] = n;
  j["base"] = graph_to_json(c.graph());
  j["activity"] = activity_json(cn);
  HtReportOptions ho = opt;
  ho.choice = "min";  // the named preset refers to the base graph's edges
  j["ht"] = ht_json(cn, ho);

  PeriodizationReport pr = check_periodization(c, n);
  nlohmann::json checks = {{"in_formula", pr.in_formula},
                           {"basis_formula", pr.basis_formula},
                           {"genus_preserved", pr.genus_preserved},
                           {"h_two_routes", pr.h_two_routes}};
  if (n >= 1) {
    ContractionReport cr = check_level_contraction(c, n - 1);
    checks["contraction_graph"] = cr.graph_matches;
    checks["contraction_basis_onto"] = cr.basis_onto;
  }
  nlohmann::json dc = nlohmann::json::array();
  for (int e : admissible_edges(c.graph())) {
    PeriodicDelCon p = delcon_r_periodized(c.graph(), e, n);
    dc.push_back({{"edge", c.graph().edge(e).label},
                  {"dims_identity", p.dims_identity},
                  {"partition", p.partition}});
  }
  checks["delcon"] = dc;
  j["checks"] = checks;
  return j;
}

// Overview used by `analyze` and attached to verification reports.
inline nlohmann::json analyze_json(const Graph& g) {
  CoherentCotree c = coherent_cotree(g);
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["graph"] = graph_to_json(g);
  j["vertices"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["genus"] = g.genus();
  j["spanning_trees"] = to_json_value(spanning_tree_count(g));
  Poly2 t = tutte(g);
  j["tutte"] = t.to_string();
  j["h_poly"] = t.at_x_one().to_string();
  nlohmann::json faces = nlohmann::json::array();
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& level : c.faces().levels()) faces.push_back(level.size());
  for (const auto& level : c.basis()) basis.push_back(level.size());
  j["faces_by_size"] = faces;
  j["basis_by_size"] = basis;
  TrigradedCohomology h = cks_cohomology(CKSComplex(c));
  nlohmann::json ranks = nlohmann::json::object();
  for (const auto& [t3, r] : h.ranks()) {
    auto [p, q, rr] = t3;
    ranks[internal::tridegree_key(p, q, rr)] = r;
  }
  j["cks_ranks"] = ranks;
  j["cks_torsion_free"] = h.torsion_free();
  j["h_hat"] = h_hat(euler_table(h)).to_string();
  return j;
}

inline nlohmann::json checks_json(const std::vector<CheckResult>& results) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : results) out.push_back(to_json(r));
  return out;
}

inline bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace ckskit

#endif  // CKSKIT_REPORT_HPP_
