#pragma once

#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "netdesc/bounds.hpp"
#include "netdesc/descriptors.hpp"
#include "netdesc/search.hpp"

// Machine-readable output records for the command-line tool. JSON objects
// keep keys sorted (nlohmann::json uses std::map) and doubles are printed as
// the shortest text that round-trips, so equal inputs give identical bytes.

namespace netdesc::records {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "netdesc/1";

// 17 significant digits, for the CSV and table formats.
inline std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline json code_json(const GraphCode& code) {
  return {{"n", code.n}, {"code", code.bits}, {"edges", edges_json(code.edges())}};
}

inline json extremum_json(const Extremum& e) { return {{"value", e.value}, {"vertex", e.vertex}}; }

inline json envelope(const std::string& command, json inputs, json results) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)}};
}

inline json compute_record(const Graph& g, Lambda lam, const std::string& source) {
  const auto table = descriptor_table(g, lam);
  const auto agg = aggregates(table);
  json vertices = json::array();
  for (std::size_t u = 0; u < table.order(); ++u) {
    vertices.push_back({{"vertex", u},
                        {"t", table.t[u]},
                        {"c", table.c[u]},
                        {"networkness", table.networkness[u]},
                        {"surplus", table.surplus[u]}});
  }
  json edges = json::array();
  for (std::size_t i = 0; i < table.edges.size(); ++i) {
    edges.push_back(
        {{"u", table.edges[i].u}, {"v", table.edges[i].v}, {"b", table.edge_betweenness[i]}});
  }
  const json aggregates_json = {
      {"mt", extremum_json(agg.mt)},   {"Mt", extremum_json(agg.Mt)},
      {"mc", extremum_json(agg.mc)},   {"Mc", extremum_json(agg.Mc)},
      {"mN", extremum_json(agg.mN)},   {"MN", extremum_json(agg.MN)},
      {"mnu", extremum_json(agg.mnu)}, {"Mnu", extremum_json(agg.Mnu)},
  };
  return envelope("compute",
                  {{"n", g.order()}, {"lambda", lam.value()}, {"graph", source}},
                  {{"vertices", vertices},
                   {"edges", edges},
                   {"aggregates", aggregates_json},
                   {"balance", {{"sum_t", sum_of(table.t)}, {"sum_c", sum_of(table.c)}}}});
}

inline constexpr const char* kHalfLambdaNote =
    "mt_upper_halflambda and mc_upper_halflambda (complete-graph bounds) are only "
    "established for lambda < 1/2 and are omitted otherwise";

inline json bounds_record(int n, Lambda lam) {
  const auto b = table1_bounds(n, lam);
  const auto sp = stationary_points(n, lam);
  json bounds = {
      {"mt_lower", b.mt_lower},         {"Mt_upper", b.Mt_upper},
      {"mc_lower", b.mc_lower},         {"Mc_upper", b.Mc_upper},
      {"mN_lower", b.mN_lower},         {"mN_upper", b.mN_upper},
      {"MN_lower", b.MN_lower},         {"MN_upper", b.MN_upper},
      {"mnu_lower", b.mnu_lower},       {"mnu_upper", b.mnu_upper},
      {"Mnu_lower", b.Mnu_lower},       {"Mnu_upper", b.Mnu_upper},
      {"Mc_upper_star", b.Mc_upper_star}, {"MN_upper_star", b.MN_upper_star},
      {"Mnu_upper_star", b.Mnu_upper_star},
      {"Mt_lower", nullptr},            {"Mc_lower", nullptr},
  };
  if (b.mt_upper_halflambda) bounds["mt_upper_halflambda"] = *b.mt_upper_halflambda;
  if (b.mc_upper_halflambda) bounds["mc_upper_halflambda"] = *b.mc_upper_halflambda;
  json results = {
      {"bounds", bounds},
      {"witness_D", b.witness_D},
      {"A_n", b.mt_lower},
      {"B_n", b.Mt_upper},
      {"C_n", b.mN_lower},
      {"D_n", b.mnu_lower},
      {"shortcut_agrees", b.shortcut_agrees},
      {"stationary_points",
       {{"S_lambda", sp.S_lambda},
        {"D1", sp.D1 ? json(*sp.D1) : json(nullptr)},
        {"D2", sp.D2 ? json(*sp.D2) : json(nullptr)}}},
  };
  if (n >= 3) results["cycle_conjecture_value"] = b.cycle_conjecture_value;
  json notes = json::array();
  notes.push_back("Mt_lower and Mc_lower have no closed form (open problems); reported as null");
  if (!lam.below_half()) notes.push_back(kHalfLambdaNote);
  results["notes"] = notes;
  return envelope("bounds", {{"n", n}, {"lambda", lam.value()}}, results);
}

inline json report_json(const VerificationReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    json j = {{"id", c.id},
              {"statement", c.statement},
              {"status", to_string(c.status)},
              {"bound", c.bound}};
    if (c.status != ClaimStatus::NotApplicable) {
      j["bound_holds"] = c.bound_holds;
      j["attained"] = c.attained;
      j["violations"] = c.violations;
      if (c.extremum) j["extremum"] = *c.extremum;
      if (c.witness) j["witness"] = code_json(*c.witness);
      if (!c.family.empty()) j["family"] = c.family;
      if (c.family_value) j["family_value"] = *c.family_value;
    }
    claims.push_back(j);
  }
  json counter = json::array();
  for (const auto& ce : r.counterexamples) {
    counter.push_back({{"claim", ce.claim_id},
                       {"graph", code_json(ce.graph)},
                       {"observed", ce.observed},
                       {"bound", ce.bound}});
  }
  json obs = json::array();
  for (const auto& o : r.observations) {
    json j = {{"id", o.id}, {"note", o.note}, {"value", o.value}};
    if (o.witness) j["witness"] = code_json(*o.witness);
    obs.push_back(j);
  }
  return {{"n", r.n},
          {"lambda", r.lambda.value()},
          {"graphs_checked", r.graphs_checked},
          {"claims", claims},
          {"counterexamples", counter},
          {"observations", obs}};
}

inline json verify_record(const std::string& mode, const VerificationReport& r) {
  return envelope("verify", {{"n", r.n}, {"lambda", r.lambda.value()}, {"mode", mode}},
                  {{"report", report_json(r)}, {"violated", r.any_violated()}});
}

// CSV: one row per vertex; edge betweenness goes to a separate file.
inline void write_vertex_csv(std::ostream& out, const DescriptorTable& table) {
  out << "vertex,t,c,networkness,surplus\n";
  for (std::size_t u = 0; u < table.order(); ++u) {
    out << u << ',' << number(table.t[u]) << ',' << number(table.c[u]) << ','
        << number(table.networkness[u]) << ',' << number(table.surplus[u]) << '\n';
  }
}

inline void write_edge_csv(std::ostream& out, const DescriptorTable& table) {
  out << "u,v,b\n";
  for (std::size_t i = 0; i < table.edges.size(); ++i) {
    out << table.edges[i].u << ',' << table.edges[i].v << ','
        << number(table.edge_betweenness[i]) << '\n';
  }
}

inline void write_vertex_table(std::ostream& out, const DescriptorTable& table) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%6s  %22s  %22s  %22s  %22s\n", "vertex", "t", "c",
                "networkness", "surplus");
  out << buf;
  for (std::size_t u = 0; u < table.order(); ++u) {
    std::snprintf(buf, sizeof buf, "%6zu  %22s  %22s  %22s  %22s\n", u,
                  number(table.t[u]).c_str(), number(table.c[u]).c_str(),
                  number(table.networkness[u]).c_str(), number(table.surplus[u]).c_str());
    out << buf;
  }
}

}  // namespace netdesc::records
