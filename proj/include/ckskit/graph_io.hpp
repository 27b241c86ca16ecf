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

#ifndef CKSKIT_GRAPH_IO_HPP_
#define CKSKIT_GRAPH_IO_HPP_

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ckskit/edge_set.hpp"
#include "ckskit/errors.hpp"
#include "ckskit/graph.hpp"
#include <nlohmann/json.hpp>

namespace ckskit {

// Resolves an order given as edge labels or decimal positions.
inline std::vector<int> resolve_order(const std::vector<std::string>& tokens,
                                      const std::vector<std::string>& labels) {
  std::vector<int> order;
  for (const std::string& tok : tokens) {
    int found = -1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == tok) found = static_cast<int>(i);
    }
    if (found < 0) {
      bool digits = !tok.empty() &&
                    tok.find_first_not_of("0123456789") == std::string::npos;
      if (!digits) throw ParseError("unknown edge in order: " + tok);
      found = std::stoi(tok);
      if (found >= static_cast<int>(labels.size())) {
        throw ParseError("edge position out of range: " + tok);
      }
    }
    order.push_back(found);
  }
  return order;
}

// Parses {"vertices": n, "edges": [[h,t] or [h,t,label], ...],
//         "labels": [...], "order": [...]}.
inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) {
    throw ParseError("graph JSON needs an \"edges\" array");
  }
  std::vector<std::pair<int, int>> edge_list;
  std::vector<std::string> labels;
  bool any_label = false;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError("each edge must be [head, tail] or [head, tail, label]");
    }
    edge_list.push_back({e[0].get<int>(), e[1].get<int>()});
    if (e.size() == 3) {
      if (!e[2].is_string()) throw ParseError("edge label must be a string");
      labels.push_back(e[2].get<std::string>());
      any_label = true;
    } else {
      labels.push_back("e" + std::to_string(edge_list.size() - 1));
    }
  }
  if (j.contains("labels")) {
    if (any_label) throw ParseError("labels given twice");
    const auto& l = j["labels"];
    if (!l.is_array() || l.size() != edge_list.size()) {
      throw ParseError("\"labels\" must list one string per edge");
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) throw ParseError("labels must be strings");
      labels[i] = l[i].get<std::string>();
    }
  }
  if (j.contains("vertices")) {
    if (!j["vertices"].is_number_integer()) {
      throw ParseError("\"vertices\" must be an integer count");
    }
    int n = j["vertices"].get<int>();
    for (auto [h, t] : edge_list) {
      if (h < 0 || t < 0 || h >= n || t >= n) {
        throw ParseError("edge endpoint outside 0..vertices-1");
      }
    }
    if (n > 1 || edge_list.empty()) {
      std::vector<bool> touched(n, false);
      for (auto [h, t] : edge_list) touched[h] = touched[t] = true;
      for (int v = 0; v < n; ++v) {
        if (!touched[v]) throw DisconnectedGraph("vertex " + std::to_string(v) +
                                                 " has no edges");
      }
    }
  }
  std::vector<int> order;
  if (j.contains("order")) {
    std::vector<std::string> tokens;
    for (const auto& o : j["order"]) {
      if (o.is_number_integer()) {
        tokens.push_back(std::to_string(o.get<int>()));
      } else if (o.is_string()) {
        tokens.push_back(o.get<std::string>());
      } else {
        throw ParseError("order entries must be positions or labels");
      }
    }
    order = resolve_order(tokens, labels);
  }
  return build_graph(edge_list, order, labels);
}

// Parses the one-line DSL "a-b c-d ..." where each token is
// [label:]head-tail and vertex names are arbitrary words.
inline Graph graph_from_dsl(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::map<std::string, int> names;
  std::vector<std::pair<int, int>> edge_list;
  std::vector<std::string> labels;
  auto vertex = [&](const std::string& name) {
    if (name.empty()) throw ParseError("empty vertex name in DSL");
    auto it = names.find(name);
    if (it != names.end()) return it->second;
    int id = static_cast<int>(names.size());
    names.emplace(name, id);
    return id;
  };
  while (in >> tok) {
    std::string label;
    std::string body = tok;
    auto colon = tok.find(':');
    if (colon != std::string::npos) {
      label = tok.substr(0, colon);
      body = tok.substr(colon + 1);
      if (label.empty()) throw ParseError("empty label in token " + tok);
    }
    auto dash = body.find('-');
    if (dash == std::string::npos || body.find('-', dash + 1) != std::string::npos) {
      throw ParseError("expected head-tail, got " + tok);
    }
    int h = vertex(body.substr(0, dash));
    int t = vertex(body.substr(dash + 1));
    edge_list.push_back({h, t});
    labels.push_back(label.empty() ? "e" + std::to_string(edge_list.size() - 1)
                                   : label);
  }
  if (edge_list.empty()) throw EmptyGraph("DSL describes no edges");
  return build_graph(edge_list, {}, labels);
}

inline Graph graph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return graph_from_json(j);
}

// Canonical JSON form; edges listed in edge order.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.head, e.tail});
    labels.push_back(e.label);
  }
  return {{"vertices", g.num_vertices()}, {"edges", edges}, {"labels", labels}};
}

// Byte-stable serialization (keys sorted, no whitespace).
inline std::string serialize(const Graph& g) { return graph_to_json(g).dump(); }

// The DSL form "label:head-tail ..." with vertices named v0, v1, ...
inline std::string graph_to_dsl(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += " ";
    out += e.label + ":v" + std::to_string(e.head) + "-v" + std::to_string(e.tail);
  }
  return out;
}

inline nlohmann::json edge_set_to_json(const Graph& g, EdgeSet s) {
  return g.labels(s);
}

}  // namespace ckskit

#endif  // CKSKIT_GRAPH_IO_HPP_
