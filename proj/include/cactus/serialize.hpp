#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cactus/alpha_spectral.hpp"
#include "cactus/extremal.hpp"
#include "cactus/graph.hpp"
#include "cactus/transforms.hpp"
#include "cactus/verification.hpp"

namespace cactus {

using json = nlohmann::json;

inline json to_json(const Edge &e) { return json::array({e.u, e.v}); }

inline json to_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge &e : edges)
    out.push_back(to_json(e));
  return out;
}

/// {"n": int, "edges": [[u, v], ...]}
inline json to_json(const Graph &g) { return {{"n", g.order()}, {"edges", to_json(g.edges())}}; }

inline Graph graph_from_json(const json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("JSON graph must be an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError("JSON graph \"n\" must be a positive integer");
  if (!j["edges"].is_array())
    throw ParseError("JSON graph \"edges\" must be an array");
  const auto n = j["n"].get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto &e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        e[0].get<long long>() < 0 || e[1].get<long long>() < 0)
      throw ParseError("JSON edge must be a pair of non-negative integers");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const GraphError &err) {
    throw ParseError(err.what());
  }
}

/// Accepts either interchange format; JSON is recognised by a leading '{'.
inline Graph read_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error &err) {
      throw ParseError(std::string("invalid JSON: ") + err.what());
    }
    return graph_from_json(j);
  }
  return parse_graph(text);
}

inline json to_json(const RewriteStep &s) {
  return {{"kind", to_string(s.kind)},
          {"removed", to_json(s.removed)},
          {"added", to_json(s.added)},
          {"rho_before", s.rho_before},
          {"rho_after", s.rho_after},
          {"witness",
           {{"v", s.witness.v}, {"w", s.witness.w}, {"x_v", s.witness.x_v}, {"x_w", s.witness.x_w}}}};
}

inline json to_json(const std::vector<RewriteStep> &trace) {
  json out = json::array();
  for (const auto &s : trace)
    out.push_back(to_json(s));
  return out;
}

/// [{"value": real, "multiplicity": int, "provenance": string}, ...]
inline json to_json(const ExtremalSpectrum &s) {
  json out = json::array();
  for (const auto &e : s.entries)
    out.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}, {"provenance", to_string(e.provenance)}});
  return out;
}

inline json to_json(const CharpolyReport &r) {
  json trials = json::array();
  for (const auto &t : r.trials)
    trials.push_back({{"lambda", t.lambda},
                      {"determinant", t.determinant},
                      {"product", t.product},
                      {"relative_error", t.relative_error}});
  json out = {{"n", r.params.n},
              {"k", r.params.k},
              {"t", r.params.t},
              {"alpha", r.alpha},
              {"tolerance", r.tolerance},
              {"max_relative_error", r.max_relative_error},
              {"trials", trials},
              {"pass", r.pass}};
  out["failing_lambda"] = r.failing_lambda ? json(*r.failing_lambda) : json(nullptr);
  return out;
}

inline json to_json(const ExtremalityReport &r) {
  json out = {{"n", r.n},
              {"k", r.k},
              {"alpha", r.alpha},
              {"num_cacti", r.num_cacti},
              {"max_rho", r.max_rho},
              {"cc_rho", r.cc_rho},
              {"argmax_certificate", r.argmax_certificate.hex()},
              {"cc_certificate", r.cc_certificate.hex()},
              {"is_cc_max", r.is_cc_max},
              {"is_cc_unique_max", r.is_cc_unique_max},
              {"runtime_seconds", r.runtime_seconds},
              {"pass", r.is_cc_max}};
  out["gap"] = r.gap ? json(*r.gap) : json(nullptr);
  out["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  return out;
}

inline json to_json(const LemmaSweepReport &r) {
  json violations = json::array();
  for (const auto &v : r.violations)
    violations.push_back({{"kind", v.kind},
                          {"graph", v.graph},
                          {"site", v.site},
                          {"alpha", v.alpha},
                          {"rho_before", v.rho_before},
                          {"rho_after", v.rho_after},
                          {"message", v.message}});
  return {{"n_max", r.n_max},     {"alphas", r.alphas},         {"graphs", r.graphs},
          {"checks", r.checks},   {"total_checks", r.total_checks()},
          {"violations", violations}, {"pass", r.pass()}};
}

} // namespace cactus
