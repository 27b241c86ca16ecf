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

// cks-kit: command-line driver for the ckskit library.
//
// Exit codes: 0 when every enabled check passes, 1 when some check fails
// (the report is still printed), 2 on bad input or a resource guard.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ckskit/ckskit.hpp"

namespace {

using ckskit::Graph;
using nlohmann::json;

struct Config {
  std::vector<std::string> graph_files;
  std::vector<std::string> inline_specs;
  std::string order;
  std::string choice = "min";
  int level = 1;
  std::string format;  // empty: subcommand default
  int jobs = 1;
  std::string checks;
  int max_edges = 5;
  bool maps = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<ckskit::NamedGraph> load_graphs(const Config& cfg) {
  std::vector<ckskit::NamedGraph> out;
  for (const auto& path : cfg.graph_files) {
    out.push_back({std::filesystem::path(path).stem().string(), ckskit::graph_from_file(path)});
  }
  for (std::size_t i = 0; i < cfg.inline_specs.size(); ++i) {
    out.push_back({"inline" + std::to_string(i), ckskit::graph_from_dsl(cfg.inline_specs[i])});
  }
  if (out.empty()) throw ckskit::ParseError("no graph given (use --graph or --inline)");
  if (!cfg.order.empty()) {
    std::vector<std::string> tokens = split_list(cfg.order);
    for (auto& ng : out) {
      auto labels = ng.graph.labels(ng.graph.all_edges());
      ng.graph = ckskit::reorder(ng.graph, ckskit::resolve_order(tokens, labels));
    }
  }
  return out;
}

std::vector<std::string> selected_checks(const Config& cfg) {
  if (cfg.checks.empty()) return ckskit::default_check_names();
  if (cfg.checks == "all") return ckskit::all_check_names();
  std::vector<std::string> names = split_list(cfg.checks);
  ckskit::validate_check_names(names);
  return names;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw ckskit::ParseError("format " + format + " is not available for this subcommand");
}

// One object for a single graph, otherwise {"schema", "graphs": [...]}.
json collect(const std::vector<ckskit::NamedGraph>& graphs,
             const std::function<json(const ckskit::NamedGraph&)>& one) {
  if (graphs.size() == 1) return one(graphs[0]);
  json arr = json::array();
  for (const auto& ng : graphs) {
    json j = one(ng);
    j["name"] = ng.name;
    arr.push_back(j);
  }
  return {{"schema", ckskit::kSchemaVersion}, {"graphs", arr}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_tutte(const Config& cfg) {
  auto graphs = load_graphs(cfg);
  const std::string format = cfg.format.empty() ? "table" : cfg.format;
  require_format(format, {"table", "json"});
  if (format == "table") {
    for (const auto& ng : graphs) {
      if (graphs.size() > 1) std::cout << ng.name << ": ";
      std::cout << ckskit::tutte(ng.graph).to_string() << "\n";
    }
    return 0;
  }
  emit(collect(graphs, [](const ckskit::NamedGraph& ng) {
    ckskit::Poly2 t = ckskit::tutte(ng.graph);
    return json{{"schema", ckskit::kSchemaVersion},
                {"graph", ckskit::graph_to_json(ng.graph)},
                {"tutte", t.to_string()},
                {"terms", t.to_json()}};
  }));
  return 0;
}

int run_analyze(const Config& cfg) {
  auto graphs = load_graphs(cfg);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "table"});
  if (format == "table") {
    for (const auto& ng : graphs) {
      json a = ckskit::analyze_json(ng.graph);
      std::cout << "graph " << ng.name << "\n"
                << "  vertices        " << a["vertices"] << "\n"
                << "  edges           " << a["edges"] << "\n"
                << "  genus           " << a["genus"] << "\n"
                << "  spanning trees  " << a["spanning_trees"].dump() << "\n"
                << "  tutte           " << a["tutte"].get<std::string>() << "\n"
                << "  h               " << a["h_poly"].get<std::string>() << "\n"
                << "  h_hat           " << a["h_hat"].get<std::string>() << "\n";
    }
    return 0;
  }
  emit(collect(graphs, [](const ckskit::NamedGraph& ng) { return ckskit::analyze_json(ng.graph); }));
  return 0;
}

// Edge labels separated by spaces, for CSV cells.
std::string joined(const Graph& g, ckskit::EdgeSet s) {
  std::string out;
  for (const auto& l : g.labels(s)) out += (out.empty() ? "" : " ") + l;
  return out;
}

int run_activity(const Config& cfg) {
  auto graphs = load_graphs(cfg);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "csv", "table"});
  if (format != "json") {
    const bool csv = format == "csv";
    if (csv) std::cout << "graph,face,cotree,in,basis\n";
    for (const auto& ng : graphs) {
      ckskit::CoherentCotree c = ckskit::coherent_cotree(ng.graph);
      const Graph& g = c.graph();
      for (ckskit::EdgeSet s : c.faces().all()) {
        if (csv) {
          std::cout << ng.name << "," << joined(g, s) << "," << joined(g, c.cotree(s)) << ","
                    << joined(g, c.cotree_in(s)) << "," << (c.in_basis(s) ? 1 : 0) << "\n";
        } else {
          std::cout << ng.name << "  S=" << g.describe(s) << "  C=" << g.describe(c.cotree(s))
                    << "  In=" << g.describe(c.cotree_in(s)) << (c.in_basis(s) ? "  [B]" : "")
                    << "\n";
        }
      }
    }
    return 0;
  }
  emit(collect(graphs, [](const ckskit::NamedGraph& ng) {
    return ckskit::activity_json(ckskit::coherent_cotree(ng.graph));
  }));
  return 0;
}

bool ht_identities_pass(const json& j) {
  for (const auto& [k, v] : j["identities"].items()) {
    if (v.is_boolean() && !v.get<bool>()) return false;
    if (v.is_array()) {
      for (const auto& b : v) {
        if (!b.get<bool>()) return false;
      }
    }
  }
  return true;
}

int run_ht(const Config& cfg) {
  auto graphs = load_graphs(cfg);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "csv", "table"});
  ckskit::HtReportOptions opt{cfg.choice, cfg.maps};
  bool pass = true;
  std::vector<json> reports;
  for (const auto& ng : graphs) {
    reports.push_back(ckskit::ht_json(ckskit::coherent_cotree(ng.graph), opt));
    pass = pass && ht_identities_pass(reports.back());
  }
  if (format == "json") {
    std::size_t i = 0;
    emit(collect(graphs, [&](const ckskit::NamedGraph&) { return reports[i++]; }));
  } else {
    if (format == "csv") std::cout << "graph,k,faces,basis\n";
    for (std::size_t g = 0; g < graphs.size(); ++g) {
      const json& r = reports[g];
      const auto& basis = r["dims"]["basis"];
      for (std::size_t k = 0; k < basis.size(); ++k) {
        std::size_t faces = r["cells"][ckskit::internal::pair_key(static_cast<int>(k), 0)].size();
        if (format == "csv") {
          std::cout << graphs[g].name << "," << k << "," << faces << "," << basis[k] << "\n";
        } else {
          std::cout << graphs[g].name << "  k=" << k << "  faces=" << faces
                    << "  basis=" << basis[k] << "\n";
        }
      }
      if (format == "table") {
        for (const auto& [name, v] : r["identities"].items()) {
          std::cout << "  " << name << " " << v.dump() << "\n";
        }
      }
    }
  }
  return pass ? 0 : 1;
}

bool cks_pass(const json& j) {
  if (!j["tutte_specialization"]["matches_T(1,w)"].get<bool>()) return false;
  if (j["total_euler_characteristic"] != j["spanning_trees"]) return false;
  for (const auto& r : j["recurrence_checks"]) {
    if (!r["chain_maps"].get<bool>() || !r["short_exact"].get<bool>() ||
        !r["euler_recurrence"].get<bool>()) {
      return false;
    }
  }
  return true;
}

int run_cks(const Config& cfg) {
  auto graphs = load_graphs(cfg);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "csv", "table"});
  if (format == "csv") {
    for (const auto& ng : graphs) {
      if (graphs.size() > 1) std::cout << "# " << ng.name << "\n";
      std::cout << ckskit::euler_csv(ckskit::euler_table(ckskit::cks_cohomology(ng.graph)));
    }
    return 0;
  }
  bool pass = true;
  std::vector<json> reports;
  for (const auto& ng : graphs) {
    reports.push_back(ckskit::cks_json(ckskit::coherent_cotree(ng.graph)));
    pass = pass && cks_pass(reports.back());
  }
  if (format == "json") {
    std::size_t i = 0;
    emit(collect(graphs, [&](const ckskit::NamedGraph&) { return reports[i++]; }));
  } else {
    for (std::size_t g = 0; g < graphs.size(); ++g) {
      std::cout << "graph " << graphs[g].name << "\n";
      for (const auto& [deg, rank] : reports[g]["ranks_by_tridegree"].items()) {
        std::cout << "  H" << deg << " rank " << rank << "\n";
      }
      for (const auto& [deg, t] : reports[g]["torsion"].items()) {
        std::cout << "  H" << deg << " torsion " << t.dump() << "\n";
      }
      std::cout << "  h_hat " << reports[g]["h_hat"]["string"].get<std::string>() << "\n";
    }
  }
  return pass ? 0 : 1;
}

bool periodize_pass(const json& j) {
  for (const auto& [k, v] : j["checks"].items()) {
    if (v.is_boolean() && !v.get<bool>()) return false;
    if (v.is_array()) {
      for (const auto& item : v) {
        if (!item["dims_identity"].get<bool>() || !item["partition"].get<bool>()) return false;
      }
    }
  }
  return ht_identities_pass(j["ht"]);
}

int run_periodize(const Config& cfg) {
  if (cfg.level < 0) throw ckskit::ParseError("--level must be non-negative");
  auto graphs = load_graphs(cfg);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json"});
  ckskit::HtReportOptions opt{"min", cfg.maps};
  bool pass = true;
  std::vector<json> reports;
  for (const auto& ng : graphs) {
    reports.push_back(ckskit::periodize_json(ckskit::coherent_cotree(ng.graph), cfg.level, opt));
    pass = pass && periodize_pass(reports.back());
  }
  std::size_t i = 0;
  emit(collect(graphs, [&](const ckskit::NamedGraph&) { return reports[i++]; }));
  return pass ? 0 : 1;
}

// Runs the checks over all graphs, in parallel across graphs; results keep
// input order.
int run_verification(const Config& cfg, const std::vector<ckskit::NamedGraph>& graphs) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "csv", "table"});
  if (cfg.choice != "min" && cfg.choice != "theta") {
    throw ckskit::ParseError("unknown choice preset " + cfg.choice);
  }
  std::vector<std::string> names = selected_checks(cfg);
  ckskit::CheckOptions opt;
  opt.choice = cfg.choice;
  std::vector<std::vector<ckskit::CheckResult>> results(graphs.size());
  std::vector<json> summaries(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      results[i] = ckskit::run_checks(graphs[i].graph, names, opt);
      try {
        summaries[i] = ckskit::analyze_json(graphs[i].graph);
        summaries[i].erase("schema");
        summaries[i].erase("graph");
      } catch (const ckskit::Error& e) {
        summaries[i] = {{"error", e.kind()}, {"message", e.what()}};
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(graphs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool pass = true;
  json arr = json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    bool ok = ckskit::all_pass(results[i]);
    pass = pass && ok;
    arr.push_back({{"name", graphs[i].name},
                   {"graph", ckskit::graph_to_json(graphs[i].graph)},
                   {"summary", summaries[i]},
                   {"checks", ckskit::checks_json(results[i])},
                   {"pass", ok}});
  }
  if (format == "json") {
    emit({{"schema", ckskit::kSchemaVersion},
          {"checks_enabled", names},
          {"choice", cfg.choice},
          {"graphs", arr},
          {"pass", pass}});
  } else if (format == "csv") {
    std::cout << "graph,check,pass\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (const auto& r : results[i]) {
        std::cout << graphs[i].name << "," << r.name << "," << (r.pass ? 1 : 0) << "\n";
      }
    }
  } else {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (const auto& r : results[i]) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << graphs[i].name << " " << r.name;
        if (!r.witness.is_null()) std::cout << " " << r.witness.dump();
        std::cout << "\n";
      }
    }
    std::cout << (pass ? "all checks passed" : "some checks failed") << "\n";
  }
  return pass ? 0 : 1;
}

void add_graph_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--graph", cfg.graph_files, "graph JSON file (repeatable)");
  sub->add_option("--inline", cfg.inline_specs, "graph in DSL form, e.g. \"a-b a-b a-b\"");
  sub->add_option("--order", cfg.order, "edge order as comma-separated labels or positions");
  sub->add_option("--format", cfg.format, "json, csv or table");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Exact computations with coherent cotrees, HT and CKS complexes"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "graph overview");
  auto* activity = app.add_subcommand("activity", "shelling, coherent cotree, In table and basis");
  auto* ht = app.add_subcommand("ht", "HT complex, basis and identity checks");
  auto* cks = app.add_subcommand("cks", "CKS cohomology, Euler table and Tutte specialization");
  auto* periodize = app.add_subcommand("periodize", "activity and HT data of a periodized graph");
  auto* verify = app.add_subcommand("verify", "run the named checks");
  auto* corpus = app.add_subcommand("corpus", "run the checks on all small multigraphs");
  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial");

  for (auto* sub : {analyze, activity, ht, cks, periodize, verify, tutte}) {
    add_graph_options(sub, cfg);
  }
  corpus->add_option("--format", cfg.format, "json, csv or table");
  for (auto* sub : {ht, verify, corpus}) {
    sub->add_option("--choice", cfg.choice, "choice function: min or theta")
        ->check(CLI::IsMember({"min", "theta"}));
  }
  for (auto* sub : {ht, periodize}) {
    sub->add_flag("--maps", cfg.maps, "include the f, g and h matrices");
  }
  periodize->add_option("--level", cfg.level, "periodization level n >= 0");
  for (auto* sub : {verify, corpus}) {
    sub->add_option("--jobs", cfg.jobs, "graphs processed in parallel")->check(CLI::PositiveNumber);
    sub->add_option("--checks", cfg.checks, "comma-separated check names, or \"all\"");
  }
  corpus->add_option("--max-edges", cfg.max_edges, "largest edge count enumerated");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(cfg);
    if (*activity) return run_activity(cfg);
    if (*ht) return run_ht(cfg);
    if (*cks) return run_cks(cfg);
    if (*periodize) return run_periodize(cfg);
    if (*tutte) return run_tutte(cfg);
    if (*verify) return run_verification(cfg, load_graphs(cfg));
    if (*corpus) return run_verification(cfg, ckskit::default_corpus(cfg.max_edges));
  } catch (const ckskit::Error& e) {
    std::cerr << "cks-kit: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
