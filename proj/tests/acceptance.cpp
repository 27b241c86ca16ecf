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

// Acceptance criteria 1-8. `acceptance N` runs criterion N, `acceptance`
// runs all of them. One PASS/FAIL line per criterion; exit status 0 only if
// every requested criterion passes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "ckskit/ckskit.hpp"
#include "oracles.hpp"

namespace {

using namespace ckskit;

class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }
  bool pass() const { return failures_.empty(); }

  void print(int n, const std::string& title) const {
    std::cout << "criterion " << n << ": " << (pass() ? "PASS" : "FAIL") << " " << title << " ("
              << checked_ - failures_.size() << "/" << checked_ << " assertions)\n";
    for (const auto& f : failures_) std::cout << "  fail: " << f << "\n";
    for (const auto& m : notes_) std::cout << "  note: " << m << "\n";
  }

 private:
  std::size_t checked_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

EdgeSet S(const Graph& g, std::vector<std::string> labels) { return g.edge_set(labels); }

// Runs the named library checks on every graph and records each failure.
void corpus_checks(Outcome& out, const std::vector<NamedGraph>& corpus,
                   const std::vector<std::string>& names, const CheckOptions& opt = {}) {
  std::map<std::string, std::size_t> skipped;
  for (const auto& ng : corpus) {
    for (const CheckResult& r : run_checks(ng.graph, names, opt)) {
      out.require(r.pass, ng.name + " " + r.name + " " + r.witness.dump());
      if (r.pass && r.witness.is_object() && r.witness.contains("skipped")) ++skipped[r.name];
    }
  }
  out.note(std::to_string(corpus.size()) + " graphs");
  for (const auto& [name, count] : skipped) {
    out.note(name + " skipped on " + std::to_string(count) + " graphs");
  }
}

// 1. Θ worked examples.
Outcome theta_golden() {
  Outcome out;
  Graph g = theta_graph();
  const int x = g.index_of("x");
  const int y = g.index_of("y");
  const int z = g.index_of("z");
  CoherentCotree c = coherent_cotree(g);

  Shelling sh = lex_shelling(g);
  out.require(sh.cotrees == std::vector<EdgeSet>{S(g, {"x", "y"}), S(g, {"x", "z"}),
                                                 S(g, {"y", "z"})},
              "shelling order");
  out.require(sh.restrictions[1] == S(g, {"z"}), "restriction set of the second cotree");

  const std::vector<EdgeSet> faces = {EdgeSet{},        S(g, {"x"}),      S(g, {"y"}),
                                      S(g, {"z"}),      S(g, {"x", "y"}), S(g, {"x", "z"}),
                                      S(g, {"y", "z"})};
  const std::vector<EdgeSet> cotree = {S(g, {"x", "y"}), S(g, {"y"}), S(g, {"x"}), S(g, {"x"}),
                                       EdgeSet{},        EdgeSet{},   EdgeSet{}};
  const std::vector<EdgeSet> in = {EdgeSet{}, S(g, {"x"}),      S(g, {"y"}), EdgeSet{},
                                   S(g, {"x", "y"}), S(g, {"x"}), EdgeSet{}};
  for (std::size_t i = 0; i < faces.size(); ++i) {
    out.require(c.cotree(faces[i]) == cotree[i], "C(" + g.describe(faces[i]) + ")");
    out.require(c.cotree_in(faces[i]) == in[i], "In(" + g.describe(faces[i]) + ")");
  }
  auto b = c.basis();
  out.require(b[0] == std::vector<EdgeSet>{EdgeSet{}} && b[1] == std::vector<EdgeSet>{EdgeSet{z}} &&
                  b[2] == std::vector<EdgeSet>{EdgeSet{y, z}},
              "B = {{}, {z}, {y,z}}");

  HTComplex ht(c);
  ChoiceFunction choice = theta_preset_choice(c);
  Homotopy hom(ht, choice);
  // Degree one monomials agree, so z^2 ~ yz; xyz is supported on the bond.
  out.require(monomial_class(ht, hom, {0, 0, 2}) == monomial_class(ht, hom, {0, 1, 1}),
              "z^2 and yz have the same class");
  out.require(monomial_class(ht, hom, {1, 1, 1}).empty(), "xyz = 0");
  CellVector dz = {{Cell{EdgeSet{x, z}, {}}, BigInt(1)}, {Cell{EdgeSet{y, z}, {}}, BigInt(-1)}};
  out.require(ht.apply_d(Cell{EdgeSet{z}, EdgeSet{x}}) == dz, "d({z}|x) = 1_{xz} - 1_{yz}");

  // The stated homotopy table in this complex's cell labels. The stated
  // cycles are γ_x = y - z, γ_y = x - z, γ_z = x - y; here {}|x is x - z and
  // {}|y is y - z, so γ_y ∧ γ_x is {}|x^y.
  auto one = [](const Cell& c0, long v = 1) { return CellVector{{c0, BigInt(v)}}; };
  const CellVector zero;
  struct Row {
    std::string name;
    Cell in;
    CellVector stated;
  };
  const std::vector<Row> table = {
      {"h(1_{})", Cell{EdgeSet{}, {}}, zero},
      {"h(1_x)", Cell{EdgeSet{x}, {}}, one(Cell{EdgeSet{}, EdgeSet{x}})},
      {"h(1_y)", Cell{EdgeSet{y}, {}}, one(Cell{EdgeSet{}, EdgeSet{y}})},
      {"h(1_z)", Cell{EdgeSet{z}, {}}, zero},
      {"h(1_x γ_x)", Cell{EdgeSet{x}, EdgeSet{y}}, one(Cell{EdgeSet{}, EdgeSet{x, y}})},
      {"h(1_y γ_y)", Cell{EdgeSet{y}, EdgeSet{x}}, one(Cell{EdgeSet{}, EdgeSet{x, y}}, -1)},
      {"h(1_z γ_z)", Cell{EdgeSet{z}, EdgeSet{x}}, zero},
      {"h(1_xy)", Cell{EdgeSet{x, y}, {}}, one(Cell{EdgeSet{y}, EdgeSet{x}})},
      {"h(1_xz)", Cell{EdgeSet{x, z}, {}}, one(Cell{EdgeSet{z}, EdgeSet{x}})},
      {"h(1_yz)", Cell{EdgeSet{y, z}, {}}, zero},
  };
  auto show = [&](const CellVector& v) {
    if (v.empty()) return std::string("0");
    std::string s;
    for (const auto& [cell, coef] : v) {
      s += (s.empty() ? "" : " + ") + coef.get_str() + "*" + ht.label(cell);
    }
    return s;
  };
  HomotopyMaps m = maps_fgh(ht, hom);
  out.require(check_identities(ht, m).ok(), "computed h satisfies the homotopy identities");
  for (const Row& row : table) {
    CellVector got = hom(row.in);
    out.require(got == row.stated, row.name + ": computed " + show(got) + ", stated " +
                                       show(row.stated));
  }
  // Substituting the stated value breaks id - gf = hd + dh.
  HomotopyMaps stated = m;
  stated.h[1][1](0, ht.index(Cell{EdgeSet{y}, EdgeSet{x}})) = -1;
  IdentityReport r = check_identities(ht, stated);
  if (!r.homotopy) {
    out.note("with the stated h(1_y γ_y) the identity id - gf = hd + dh fails at " + r.witness +
             "; the computed value 0 satisfies it");
  }
  return out;
}

// 2. Loop and bridge worked examples.
Outcome loop_bridge_golden() {
  Outcome out;
  using Ranks = std::map<Tridegree, std::size_t>;
  TrigradedCohomology loop = cks_cohomology(loop_graph());
  out.require(loop.ranks() == Ranks{{{0, 0, 0}, 1}, {{0, 0, 1}, 1}, {{0, 1, 1}, 1}},
              "loop ranks at (0,0,0), (0,0,1), (0,1,1)");
  out.require(loop.torsion_free(), "loop torsion free");
  out.require(h_hat(loop_graph()) == loop_weight(), "loop: -(x + y + xy)");
  out.require(h_hat(bridge_graph()) == Poly2(1), "bridge: 1");
  TrigradedCohomology bridge = cks_cohomology(bridge_graph());
  out.require(bridge.ranks() == Ranks{{{0, 0, 0}, 1}}, "bridge ranks");

  // rank H^n in degree k = Σ_{p+q=n+k} rank H^p(gr^{k,q}).
  auto gc = group_cohomology_table(loop);
  std::map<std::pair<int, int>, std::size_t> expect = {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}};
  out.require(gc == expect, "group cohomology table of the loop");
  std::map<std::pair<int, int>, std::size_t> summed;
  // A tridegree (p, q, l) is cohomological degree p of gr^{p+q, l}.
  for (const auto& [t, rk] : loop.ranks()) {
    auto [p, q, l] = t;
    const int k = p + q;
    if (rk > 0 && p + l - k >= 0) summed[{p + l - k, k}] += rk;
  }
  out.require(summed == gc, "table equals the sum over p + q = n + k");
  return out;
}

// 3. Homotopy identities and exactness on the corpus.
Outcome homotopy_suite() {
  Outcome out;
  corpus_checks(out, default_corpus(5), {"ht.identities", "ht.exactness"});
  return out;
}

// 4. Splitting, basis sizes and h(1).
Outcome basis_suite() {
  Outcome out;
  corpus_checks(out, default_corpus(5), {"ht.split", "activity.basis_h", "activity.kirchhoff"});
  return out;
}

// 5. Tutte by activity, deletion-contraction, total unimodularity.
Outcome tutte_suite() {
  Outcome out;
  corpus_checks(out, default_corpus(5),
                {"activity.tutte_orders", "activity.tutte_delcon", "graph.unimodular"});
  return out;
}

// 6. Ĥ against T(w, 1), Euler recurrence, deletion-contraction for CKS.
Outcome cks_suite() {
  Outcome out;
  std::size_t eligible = 0, literal = 0, dual = 0;
  std::string first;
  for (const auto& ng : default_corpus(5)) {
    if (admissible_edges(ng.graph).empty()) continue;
    ++eligible;
    Poly2 hh = h_hat(euler_table(cks_cohomology(ng.graph)));
    Poly2 tw1 = tutte_specialization(ng.graph);
    if (hh == tw1) {
      ++literal;
    } else if (first.empty()) {
      first = ng.name + ": H = " + hh.to_string() + ", T(w,1) = " + tw1.to_string();
    }
    if (hh == tutte_specialization_dual(ng.graph)) ++dual;
  }
  out.require(literal == eligible, "H = T(w,1) on " + std::to_string(literal) + " of " +
                                       std::to_string(eligible) + " graphs; first mismatch " +
                                       first);
  out.note("H = T(1,w) on " + std::to_string(dual) + " of " + std::to_string(eligible) +
           " graphs");
  corpus_checks(out, default_corpus(5), {"cks.delcon", "cks.euler_cells", "cks.spanning_trees"});
  return out;
}

// 7. Periodization.
Outcome periodize_suite() {
  Outcome out;
  CheckOptions opt;
  opt.levels = {1, 2};
  opt.max_periodize_edges = 4;
  corpus_checks(out, default_corpus(4),
                {"periodize.in_formula", "periodize.contraction", "periodize.delcon"}, opt);
  return out;
}

std::string run_cli(const std::string& args, int* status) {
  std::string cmd = std::string(CKS_KIT_BINARY) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  *status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

// 8. Each pinned example value recomputed by its independent oracle.
Outcome oracle_suite() {
  Outcome out;
  Graph theta = theta_graph();
  auto tl = oracle::edges_of(theta);
  const int x = theta.index_of("x");
  const int y = theta.index_of("y");
  const int z = theta.index_of("z");

  // Minimal dependent sets by subset brute force.
  std::vector<oracle::Mask> cyc = oracle::cycles(tl);
  std::sort(cyc.begin(), cyc.end());
  out.require(cyc == std::vector<oracle::Mask>{0b011, 0b101, 0b110}, "Θ cycles (oracle)");
  std::vector<oracle::Mask> lib;
  for (EdgeSet s : enumerate_cycles(theta)) lib.push_back(s.bits());
  std::sort(lib.begin(), lib.end());
  out.require(lib == cyc, "Θ cycles (library)");

  // ker ∂ with an identity block on {x, y} is spanned by x - z and y - z.
  CycleBasis cb = h1_basis(theta, EdgeSet{x, y});
  Matrix<int> bd = boundary_matrix(theta);
  bool kernel = true;
  for (std::size_t r = 0; r < cb.cycle_matrix.rows(); ++r) {
    for (std::size_t v = 0; v < bd.rows(); ++v) {
      int s = 0;
      for (int e = 0; e < 3; ++e) s += bd(v, e) * cb.cycle_matrix(r, e);
      kernel = kernel && s == 0;
    }
  }
  out.require(kernel, "cycle basis lies in ker ∂");
  out.require(cb.cycle_matrix == Matrix<int>::from_rows({{1, 0, -1}, {0, 1, -1}}),
              "γ_x = x - z, γ_y = y - z");
  out.require(pairing(cb, EdgeSet{z}) == Matrix<int>::from_rows({{-1}, {-1}}),
              "pairing column on {z}");

  // The lines p_x = a, p_y = b, -p_x - p_y = c meet in a point iff a + b + c = 0.
  for (std::vector<BigInt> th : {std::vector<BigInt>{0, 0, 0}, std::vector<BigInt>{0, 0, 1}}) {
    bool concurrent = th[0] + th[1] + th[2] == 0;
    out.require(is_generic_character(theta, th).generic == !concurrent, "Θ genericity");
  }

  // Kirchhoff: reduced Laplacian determinants.
  out.require(oracle::det_cofactor({{3}}) == 3 && spanning_tree_count(theta) == 3,
              "Θ spanning trees = 3");
  out.require(oracle::det_cofactor({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}) == 16 &&
                  spanning_tree_count(k4_graph()) == 16 &&
                  oracle::spanning_trees(oracle::edges_of(k4_graph())) == 16,
              "K4 spanning trees = 16");

  auto lb = coherent_cotree(loop_graph());
  out.require(lb.basis()[0] == std::vector<EdgeSet>{EdgeSet{}} && lb.basis()[1].empty() &&
                  lb.cotree_in(EdgeSet{0}) == EdgeSet{0},
              "loop B = {{}}, In({e}) = {e}");

  // Subset-rank Tutte.
  Poly2 t_or = oracle::tutte_subsets(tl);
  out.require(t_or.to_string() == "x + y + y^2" && tutte(theta) == t_or, "T_Θ = x + y + y^2");
  out.require(t_or.at_x_one().to_string() == "1 + q + q^2" &&
                  h_polynomial(theta) == t_or.at_x_one(),
              "T_Θ(1, q) = 1 + q + q^2");
  Poly2 t_k4 = oracle::tutte_subsets(oracle::edges_of(k4_graph()));
  out.require(t_k4.at_x_one().to_string() == "6 + 6*q + 3*q^2 + q^3" &&
                  h_polynomial(k4_graph()) == t_k4.at_x_one() &&
                  h_polynomial(k4_graph()).evaluate(1) == 16,
              "T_K4(1, q) = 6 + 6q + 3q^2 + q^3, h(1) = 16");

  // Determinantal divisors.
  out.require(oracle::invariant_factors({{1, 2}, {3, 4}}) == std::vector<mpz_class>{1, 2} &&
                  smith_normal_form(IntMatrix::from_rows({{1, 2}, {3, 4}})).D ==
                      IntMatrix::from_rows({{1, 0}, {0, 2}}),
              "SNF diag(1, 2)");
  out.require(oracle::invariant_factors({{2, 4}, {6, 8}}) == std::vector<mpz_class>{2, 4} &&
                  smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}})).D ==
                      IntMatrix::from_rows({{2, 0}, {0, 4}}),
              "SNF diag(2, 4)");

  CoherentCotree ct = coherent_cotree(theta);
  HTComplex ht(ct);
  HomotopyMaps mm = maps_fgh(ht, ChoiceFunction::minimal(ct));
  out.require(verify_direct_sum(3, ht.differential(0, 1), mm.g[1]), "Z^{F_1(Θ)} = im d + Z^{B_1}");
  HTComplex hl(lb);
  out.require(hl.apply_d(Cell{{}, EdgeSet{0}}) == CellVector{{Cell{EdgeSet{0}, {}}, BigInt(1)}},
              "loop d γ_e = 1_e");

  // h-polynomial additivity against R dimensions.
  RRing ring = r_ring(ht, Homotopy(ht, ChoiceFunction::minimal(ct)));
  out.require(ring.dims() == std::vector<std::size_t>{1, 1, 1}, "R(Θ) dims (1, 1, 1)");
  Poly1 hd = oracle::tutte_subsets(oracle::edges_of(deletion(theta, EdgeSet{z}))).at_x_one();
  Poly1 hc = oracle::tutte_subsets(oracle::edges_of(contraction(theta, EdgeSet{z}))).at_x_one();
  out.require((hd + hc) == t_or.at_x_one() && delcon_r(theta, z).ok(),
              "h_Θ = h_{Θ∖z} + h_{Θ/z}");

  // By-hand expansion of the CKS differential on Θ.
  CKSComplex k(ct);
  std::map<CksCell, BigInt> dx = {{{EdgeSet{z}, EdgeSet{}, EdgeSet{x}}, BigInt(-1)}};
  std::map<CksCell, BigInt> dy = {{{EdgeSet{x}, EdgeSet{}, EdgeSet{y}}, BigInt(1)},
                                  {{EdgeSet{z}, EdgeSet{}, EdgeSet{x}}, BigInt(1)}};
  out.require(k.apply_d({EdgeSet{}, EdgeSet{x}, EdgeSet{x}}) == dx, "Θ d({}|x|[x])");
  out.require(k.apply_d({EdgeSet{}, EdgeSet{x}, EdgeSet{y}}) == dy, "Θ d({}|x|[y])");

  // Tensor-product Künneth.
  TrigradedCohomology loop = cks_cohomology(loop_graph());
  auto conv = oracle::convolve(loop.ranks(), loop.ranks());
  auto both = cks_cohomology(loop_wedge_loop()).ranks();
  out.require(std::map<Tridegree, std::size_t>(conv.begin(), conv.end()) == both,
              "loop∧loop ranks = loop ⊗ loop");

  // Ĥ_Θ by cell counts, against the library and the stated value.
  Poly2 hh_or = oracle::h_hat_from_counts(tl);
  Poly2 hh = h_hat(euler_table(cks_cohomology(theta)));
  out.require(hh_or == hh, "Ĥ_Θ from ranks equals Ĥ_Θ from cell counts");
  Poly2 stated = Poly2(2) - Poly2::x() - Poly2::y() - Poly2::x() * Poly2::y();
  if (!(stated == hh_or)) {
    out.note("Ĥ_Θ by cell counts is " + hh_or.to_string() + "; the stated value " +
             stated.to_string() + " is T_Θ(w,1), pinned only as that polynomial");
  }
  out.require(tutte_specialization(theta) == stated, "T_Θ(w, 1) = 2 - x - y - xy");
  out.require(total_euler_characteristic(cks_cohomology(theta)) == 3, "χ(Θ) = 3");

  // Euler recurrence on Θ, z from the three tables.
  auto et = oracle::euler_from_counts(tl);
  auto ec = oracle::euler_from_counts(oracle::edges_of(contraction(theta, EdgeSet{z})));
  auto ed = oracle::euler_from_counts(oracle::edges_of(deletion(theta, EdgeSet{z})));
  bool rec = true;
  for (int a = 0; a <= 2; ++a) {
    for (int l = 0; l <= 2; ++l) {
      long c = a < static_cast<int>(ec.size()) && l < static_cast<int>(ec.size()) ? ec[a][l] : 0;
      long d = a >= 1 && a - 1 < static_cast<int>(ed.size()) && l < static_cast<int>(ed.size())
                   ? ed[a - 1][l]
                   : 0;
      rec = rec && et[a][l] == c - d;
    }
  }
  out.require(rec, "e_Θ(k,l) = e_{Θ/z}(k,l) - e_{Θ∖z}(k-1,l)");

  // Periodized loop and Θ.
  PeriodizedGraph pl = periodize_graph(loop_graph(), 1);
  CoherentCotree cpl = periodized_cotree(lb, pl);
  std::vector<std::vector<std::string>> lbasis;
  for (const auto& level : cpl.basis()) {
    for (EdgeSet s : level) lbasis.push_back(pl.graph.labels(s));
  }
  std::sort(lbasis.begin(), lbasis.end());
  out.require(lbasis == std::vector<std::vector<std::string>>{{}, {"e_-1"}, {"e_1"}},
              "B(loop_1) = {{}, {e_-1}, {e_1}}");
  PeriodicDelCon pd = delcon_r_periodized(theta, z, 1);
  Poly1 h6 = oracle::tutte_subsets(oracle::edges_of(periodize_graph(deletion(theta, EdgeSet{z}), 1).graph))
                 .at_x_one();
  out.require(pd.ok() && pd.dims_deletion[1] == h6.coefficient(0), "Θ, z, n = 1 identity");

  // Isomorphism-class augmentation.
  std::vector<int> counts = oracle::count_multigraphs(4);
  std::vector<int> got(4, 0);
  for (const auto& ng : enumerate_multigraphs(4)) ++got[ng.graph.num_edges() - 1];
  out.require(got == counts && counts == std::vector<int>{2, 4, 11, 30}, "corpus counts 2, 4, 11, 30");

  int status = -1;
  std::string t = run_cli("tutte --inline 'v0-v1 v0-v1 v0-v1'", &status);
  out.require(status == 0 && t == "x + y + y^2\n", "cks-kit tutte on Θ");
  run_cli(std::string("verify --graph ") + CKS_KIT_GRAPHS + "/theta.json", &status);
  out.require(status == 0, "cks-kit verify on Θ exits 0");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Θ worked examples", theta_golden},
      {"loop and bridge worked examples", loop_bridge_golden},
      {"homotopy equivalence on the corpus", homotopy_suite},
      {"basis and splitting on the corpus", basis_suite},
      {"Tutte polynomial", tutte_suite},
      {"CKS Euler characteristics", cks_suite},
      {"periodization", periodize_suite},
      {"oracle equivalence", oracle_suite},
  };
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) which.push_back(i);
  }
  bool all = true;
  for (int n : which) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << n << "\n";
      return 2;
    }
    try {
      Outcome o = criteria[n - 1].second();
      o.print(n, criteria[n - 1].first);
      all = all && o.pass();
    } catch (const std::exception& e) {
      std::cout << "criterion " << n << ": FAIL " << criteria[n - 1].first << " (" << e.what()
                << ")\n";
      all = false;
    }
  }
  return all ? 0 : 1;
}
