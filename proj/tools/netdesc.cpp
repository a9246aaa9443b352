// netdesc: command-line front end for the exponential network descriptors.
//
//   netdesc compute GRAPH --lambda L [--format json|csv|table] [--edges FILE]
//   netdesc bounds --n N --lambda L [--format json|table]
//   netdesc gen FAMILY --n N [--d D] [--offsets 1,2] --out FILE
//   netdesc verify --n N --lambda L [--mode claims|conjecture|open] [--jobs K]
//
// Exit status: 0 success, 1 a verified claim was violated, 2 usage/input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netdesc/bounds.hpp"
#include "netdesc/descriptors.hpp"
#include "netdesc/edge_list.hpp"
#include "netdesc/generators.hpp"
#include "netdesc/records.hpp"
#include "netdesc/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

using netdesc::records::json;

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw netdesc::Error(netdesc::ErrorCode::BadParameter, "cannot write " + path);
    stream = &file;
  }
  std::ostream& operator*() { return *stream; }
};

netdesc::Lambda parse_lambda(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw netdesc::Error(netdesc::ErrorCode::BadLambda, "not a number: '" + text + "'");
  }
  return netdesc::Lambda(value);
}

int run_compute(const std::string& graph_file, const std::string& lambda_text,
                const std::string& format, const std::string& out_path,
                const std::string& edges_path, bool lenient) {
  const auto lam = parse_lambda(lambda_text);
  std::ifstream in(graph_file);
  if (!in) throw netdesc::Error(netdesc::ErrorCode::ParseError, "cannot read " + graph_file);
  const auto g = netdesc::read_edge_list(in, {.lenient = lenient});
  Output out(out_path);
  if (format == "json") {
    *out << netdesc::records::compute_record(g, lam, graph_file).dump(2) << '\n';
  } else {
    const auto table = netdesc::descriptor_table(g, lam);
    if (format == "csv") {
      netdesc::records::write_vertex_csv(*out, table);
    } else {
      netdesc::records::write_vertex_table(*out, table);
      const auto agg = netdesc::aggregates(table);
      *out << "sum t = " << netdesc::records::number(netdesc::sum_of(table.t))
           << ", sum c = " << netdesc::records::number(netdesc::sum_of(table.c)) << '\n';
      const std::pair<const char*, netdesc::Extremum> rows[] = {
          {"mt", agg.mt}, {"Mt", agg.Mt}, {"mc", agg.mc},   {"Mc", agg.Mc},
          {"mN", agg.mN}, {"MN", agg.MN}, {"mnu", agg.mnu}, {"Mnu", agg.Mnu}};
      for (const auto& [name, e] : rows) {
        *out << name << " = " << netdesc::records::number(e.value) << " (vertex " << e.vertex
             << ")\n";
      }
    }
    if (!edges_path.empty()) {
      std::ofstream edges(edges_path);
      if (!edges) throw netdesc::Error(netdesc::ErrorCode::BadParameter, "cannot write " + edges_path);
      netdesc::records::write_edge_csv(edges, table);
    }
  }
  return kExitOk;
}

int run_bounds(int n, const std::string& lambda_text, const std::string& format,
               const std::string& out_path) {
  const auto lam = parse_lambda(lambda_text);
  const auto record = netdesc::records::bounds_record(n, lam);
  Output out(out_path);
  if (format == "json") {
    *out << record.dump(2) << '\n';
    return kExitOk;
  }
  const auto& results = record["results"];
  for (const auto& [key, value] : results["bounds"].items()) {
    *out << key << " = " << (value.is_null() ? "open problem" : value.dump()) << '\n';
  }
  for (const auto& [key, value] : results["witness_D"].items())
    *out << "witness D for " << key << " = " << value.dump() << '\n';
  for (const auto& note : results["notes"]) *out << "note: " << note.get<std::string>() << '\n';
  return kExitOk;
}

std::vector<int> parse_offsets(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw netdesc::Error(netdesc::ErrorCode::BadParameter, "bad offset '" + item + "'");
    }
  }
  return out;
}

int run_gen(const std::string& family, int n, int d, const std::string& offsets,
            const std::string& out_path) {
  netdesc::FamilySpec spec;
  spec.family = netdesc::parse_family(family);
  spec.n = n;
  spec.D = d;
  if (spec.family == netdesc::Family::Circulant) spec.offsets = parse_offsets(offsets);
  const auto g = netdesc::generate(spec);
  Output out(out_path);
  netdesc::write_edge_list(*out, g, spec.describe());
  return kExitOk;
}

int run_verify(int n, const std::string& lambda_text, const std::string& mode, unsigned jobs,
               bool allow_large, const std::string& format, const std::string& out_path) {
  const auto lam = parse_lambda(lambda_text);
  netdesc::SearchOptions options;
  options.jobs = jobs;
  options.allow_large = allow_large;
  if (n >= netdesc::kEnumerationLargeCap) {
    options.progress = [last = -1](double f) mutable {
      const int pct = static_cast<int>(f * 100);
      if (pct != last) {
        last = pct;
        std::cerr << "\rverify: " << pct << "%" << std::flush;
        if (pct == 100) std::cerr << '\n';
      }
    };
  }
  netdesc::VerificationReport report;
  if (mode == "claims") {
    report = netdesc::verify_claims(n, lam, options);
  } else if (mode == "conjecture") {
    report = netdesc::probe_conjecture(n, lam, options);
  } else {
    report = netdesc::probe_open_problems(n, lam, options);
  }
  Output out(out_path);
  if (format == "json") {
    *out << netdesc::records::verify_record(mode, report).dump(2) << '\n';
  } else {
    *out << "n=" << report.n << " lambda=" << netdesc::records::number(lam.value())
         << " graphs=" << report.graphs_checked << '\n';
    for (const auto& c : report.claims) {
      *out << "  " << netdesc::to_string(c.status) << "  " << c.id;
      if (c.extremum) *out << "  extremum=" << netdesc::records::number(*c.extremum);
      *out << "  bound=" << netdesc::records::number(c.bound) << '\n';
    }
    for (const auto& o : report.observations) {
      *out << "  observed  " << o.id << " = " << netdesc::records::number(o.value) << "  ("
           << o.note << ")\n";
    }
  }
  return report.any_violated() ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential network descriptors: compute, bounds, generators, verification"};
  app.require_subcommand(1);

  std::string lambda_text, format = "json", out_path;
  int n = 0;

  auto* compute = app.add_subcommand("compute", "descriptors of a graph given as an edge list");
  std::string graph_file, edges_path;
  bool lenient = false;
  compute->add_option("graph", graph_file, "edge-list file")->required();
  compute->add_option("--lambda", lambda_text, "decay factor in (0,1)")->required();
  compute->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));
  compute->add_option("--out", out_path, "output file (default stdout)");
  compute->add_option("--edges", edges_path, "also write edge betweenness CSV here");
  compute->add_flag("--lenient", lenient, "drop duplicate edges instead of failing");

  auto* bounds = app.add_subcommand("bounds", "extremal bound values for n vertices");
  bounds->add_option("--n", n, "vertex count")->required()->check(CLI::Range(2, 1 << 20));
  bounds->add_option("--lambda", lambda_text)->required();
  bounds->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  bounds->add_option("--out", out_path);

  auto* gen = app.add_subcommand("gen", "write an extremal family graph as an edge list");
  std::string family, offsets;
  int d = 0;
  gen->add_option("family", family, "broom|path|star|cycle|complete|circulant")->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--d", d, "broom eccentricity D");
  gen->add_option("--offsets", offsets, "circulant offsets, comma separated");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "exhaustive check over connected graphs");
  std::string mode = "claims";
  unsigned jobs = 1;
  bool allow_large = false;
  verify->add_option("--n", n)->required();
  verify->add_option("--lambda", lambda_text)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"claims", "conjecture", "open"}));
  verify->add_option("--jobs", jobs)->check(CLI::Range(1u, 1024u));
  verify->add_flag("--allow-large", allow_large, "permit n = 8");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return run_compute(graph_file, lambda_text, format, out_path, edges_path, lenient);
    if (*bounds) return run_bounds(n, lambda_text, format, out_path);
    if (*gen) return run_gen(family, n, d, offsets, out_path);
    if (*verify) return run_verify(n, lambda_text, mode, jobs, allow_large, format, out_path);
  } catch (const netdesc::Error& e) {
    std::cerr << "netdesc: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
