// Copyright 2026 The Cybertopo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cybertopo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cybertopo/complex.hpp"
#include "cybertopo/dowker.hpp"
#include "cybertopo/error.hpp"
#include "cybertopo/homology.hpp"
#include "cybertopo/path_homology.hpp"
#include "cybertopo/tme.hpp"
#include "cybertopo/wireless.hpp"

namespace cybertopo {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + path + "'");
  file << text;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Json labels_json(const SimplicialComplex& k, const Simplex& s) {
  return Json(k.labels_of(s));
}

Json facets_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (const auto& f : k.facets()) facets.push_back(labels_json(k, f));
  return facets;
}

struct HomologyArgs {
  std::string input;
  std::string field = "f2";
  int max_dim = -1;
};

std::string cmd_homology(const HomologyArgs& a) {
  const Field field = parse_field(a.field);
  std::istringstream in(read_file(a.input));
  const auto k = SimplicialComplex::from_facets(parse_facets(in));
  const BettiProfile p =
      a.max_dim < 0 ? simplicial_betti(k, field) : simplicial_betti(k, field, a.max_dim);
  Json doc;
  doc["field"] = to_string(field);
  doc["vertices"] = k.vertex_count();
  doc["dimension"] = k.dimension();
  doc["dims"] = p.chain_dims;
  doc["ranks"] = p.ranks;
  doc["cycles"] = p.cycles;
  doc["boundaries"] = p.boundaries;
  doc["betti"] = p.betti;
  doc["reduced_betti"] = p.reduced;
  doc["euler"] = p.euler;
  return dump(doc);
}

struct DowkerArgs {
  std::string input;
  std::string format = "auto";
  std::size_t window = 8;
  bool windowed = false;
  int max_dim = 2;
  std::string side = "cols";
};

std::string cmd_dowker(const DowkerArgs& a) {
  if (a.windowed && a.window == 0) throw InvalidInput("--window must be at least 1");
  std::string format = a.format;
  if (format == "auto") format = has_suffix(a.input, ".csv") ? "csv" : "code";
  const std::string text = read_file(a.input);
  Relation r;
  if (format == "csv") {
    std::istringstream in(text);
    r = read_relation_csv(in);
  } else if (format == "code") {
    r = parse_straightline(text);
  } else {
    throw InvalidInput("unknown format '" + format + "'");
  }
  WindowProfile profile;
  if (a.windowed) {
    if (parse_side(a.side) != DowkerSide::kCols) {
      throw InvalidInput("windowed profiles use variables as vertices (--side cols)");
    }
    profile = windowed_profile(r, a.window, a.max_dim);
  } else {
    profile.window_size = r.rows();
    profile.max_betti_dim = a.max_dim;
    profile.rows.push_back(relation_summary(r, parse_side(a.side), a.max_dim));
  }
  std::ostringstream out;
  write_profile_csv(out, profile);
  return out.str();
}

struct PathArgs {
  std::string input;
  std::string format = "auto";
  int max_p = 2;
  bool reduced = false;
};

std::string cmd_path_homology(const PathArgs& a) {
  const std::string text = read_file(a.input);
  std::string format = a.format;
  if (format == "auto") {
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool dot = has_suffix(a.input, ".dot") || has_suffix(a.input, ".gv") ||
                     (first != std::string::npos && text.compare(first, 7, "digraph") == 0);
    format = dot ? "dot" : "edges";
  }
  Digraph d;
  if (format == "dot") {
    d = parse_dot(text);
  } else if (format == "edges") {
    std::istringstream in(text);
    d = parse_edge_list(in);
  } else {
    throw InvalidInput("unknown format '" + format + "'");
  }
  const PathHomology h = path_homology(d, a.max_p);
  Json doc;
  doc["vertices"] = d.vertex_count();
  doc["arcs"] = d.arcs().size();
  std::vector<int> degrees(static_cast<std::size_t>(a.max_p) + 1);
  for (std::size_t p = 0; p < degrees.size(); ++p) degrees[p] = static_cast<int>(p);
  doc["degrees"] = degrees;
  doc["omega_dims"] = h.profile.chain_dims;
  doc["ranks"] = h.profile.ranks;
  doc["betti"] = h.profile.betti;
  if (a.reduced) doc["reduced_betti"] = h.profile.reduced;
  doc["euler"] = h.profile.euler;
  doc["cyclomatic"] = cyclomatic(d);
  return dump(doc);
}

struct NetworkArgs {
  std::string input;
  std::string complex = "link";
  int max_dim = -1;
  bool lh = false;
  std::vector<int> ks{1, 2};
  bool sections = false;
  std::size_t section_limit = 10000;
  bool cohomology = false;
  std::optional<std::uint64_t> traffic;
  std::uint64_t seed = 0;
};

std::string cmd_network(const NetworkArgs& a) {
  std::istringstream in(read_file(a.input));
  const WirelessNetwork w = read_network_json(in);
  const BaseComplex kind = parse_base_complex(a.complex);
  const SimplicialComplex base =
      base_complex(w, kind, a.max_dim < 0 ? kUnboundedDim : a.max_dim);

  Json doc;
  Json ids = Json::array();
  for (const auto& n : w.nodes()) ids.push_back(n.id);
  doc["nodes"] = ids;
  doc["complex"] = a.complex;
  doc["facets"] = facets_json(base);

  if (a.lh) {
    const CriticalityReport report = criticality_report(w, a.ks, kind);
    Json lh;
    lh["ks"] = report.ks;
    lh["mean"] = report.mean;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
      Json simplex = Json::array();
      for (VertexId v : row.simplex.vertices()) simplex.push_back(w.labels().label(v));
      rows.push_back({{"simplex", simplex}, {"lh", row.lh}, {"above_mean", row.above_mean}});
    }
    lh["rows"] = rows;
    doc["local_homology"] = lh;
  }

  if (a.sections || a.cohomology) {
    const ActivationSheaf sheaf(base);
    if (a.sections) {
      const auto found = global_sections(sheaf, a.section_limit + 1);
      Json sections;
      if (found.size() > a.section_limit) {
        sections["complete"] = false;
        sections["count_at_least"] = found.size();
      } else {
        sections["complete"] = true;
        sections["count"] = found.size();
        Json sets = Json::array();
        for (const auto& s : found) {
          Json set = Json::array();
          for (VertexId v : s.transmitting()) set.push_back(w.labels().label(v));
          sets.push_back(set);
        }
        sections["transmitting_sets"] = sets;
      }
      doc["global_sections"] = sections;
    }
    if (a.cohomology) doc["cohomology_dims"] = vector_sheaf_cohomology(sheaf);
  }

  if (a.traffic) {
    const TrafficResult t = traffic_sim(w, *a.traffic, a.seed);
    Json traffic;
    traffic["packets"] = *a.traffic;
    traffic["seed"] = a.seed;
    traffic["delivered"] = t.delivered;
    traffic["dropped"] = t.dropped;
    Json counts = Json::array();
    for (std::size_t v = 0; v < w.size(); ++v) {
      counts.push_back({{"id", w.node(static_cast<VertexId>(v)).id}, {"forwarded", t.forwarded[v]}});
    }
    traffic["forwarded"] = counts;
    doc["traffic"] = traffic;
  }
  return dump(doc);
}

struct TmeArgs {
  std::string input;
  std::size_t bins = kDefaultBins;
  std::size_t bandwidths = kDefaultBandwidths;
  std::string csv;
};

std::string cmd_tme(const TmeArgs& a, std::string& csv_text) {
  std::istringstream in(read_file(a.input));
  const std::vector<double> samples = read_samples(in);
  const BandwidthScan scan = select_bandwidth(samples, a.bandwidths, a.bins);
  Json doc;
  doc["samples"] = samples.size();
  doc["bins"] = a.bins;
  doc["bandwidths"] = scan.bandwidths;
  doc["ucats"] = scan.ucats;
  doc["modal_ucat"] = scan.modal_ucat;
  doc["chosen_bandwidth"] = scan.chosen_bandwidth;
  doc["components"] = scan.decomposition.components.size();
  doc["weights"] = scan.decomposition.weights;

  std::ostringstream csv;
  csv.precision(17);
  csv << "x,f";
  for (std::size_t m = 0; m < scan.decomposition.components.size(); ++m) {
    csv << ",component_" << m + 1;
  }
  csv << '\n';
  for (std::size_t i = 0; i < scan.density.xs.size(); ++i) {
    csv << scan.density.xs[i] << ',' << scan.density.fs[i];
    for (const auto& c : scan.decomposition.components) csv << ',' << c[i];
    csv << '\n';
  }
  csv_text = csv.str();
  return dump(doc);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computational topology for networks, code and densities", "cybertopo"};
  app.require_subcommand(1);
  std::string output = "-";

  HomologyArgs homology;
  auto* homology_cmd = app.add_subcommand("homology", "Betti numbers of a facet list");
  homology_cmd->add_option("file", homology.input, "Facet file, one facet per line")->required();
  homology_cmd->add_option("--field", homology.field, "Scalar field")
      ->check(CLI::IsMember({"f2", "gf2", "q", "rational"}));
  homology_cmd->add_option("--max-dim", homology.max_dim, "Highest homological degree")
      ->check(CLI::Range(0, 64));
  homology_cmd->add_option("-o,--output", output, "Output path, '-' for stdout");

  DowkerArgs dowker;
  auto* dowker_cmd = app.add_subcommand("dowker", "Dowker homology of a relation or straight-line code");
  dowker_cmd->add_option("file", dowker.input, "Relation CSV or code file")->required();
  dowker_cmd->add_option("--format", dowker.format, "auto, csv or code")
      ->check(CLI::IsMember({"auto", "csv", "code"}));
  auto* window_opt = dowker_cmd->add_option("--window", dowker.window, "Rows per window (8 if no value)")
                         ->expected(0, 1)
                         ->default_str("8");
  dowker_cmd->add_option("--max-dim", dowker.max_dim, "Highest Betti degree")
      ->check(CLI::Range(0, 16));
  dowker_cmd->add_option("--side", dowker.side, "rows or cols")
      ->check(CLI::IsMember({"rows", "cols"}));
  dowker_cmd->add_option("-o,--output", output, "Output path, '-' for stdout");

  PathArgs path;
  auto* path_cmd = app.add_subcommand("path-homology", "Path homology of a digraph");
  path_cmd->add_option("file", path.input, "Edge list or DOT file")->required();
  path_cmd->add_option("--format", path.format, "auto, edges or dot")
      ->check(CLI::IsMember({"auto", "edges", "dot"}));
  path_cmd->add_option("--max-p", path.max_p, "Highest degree (0-4)")->check(CLI::Range(0, 4));
  path_cmd->add_flag("--reduced", path.reduced, "Also report reduced Betti numbers");
  path_cmd->add_option("-o,--output", output, "Output path, '-' for stdout");

  NetworkArgs network;
  auto* network_cmd = app.add_subcommand("network", "Wireless network analyses");
  network_cmd->add_option("file", network.input, "Network JSON")->required();
  network_cmd->add_option("--complex", network.complex, "link or interference")
      ->check(CLI::IsMember({"link", "interference"}));
  network_cmd->add_option("--max-dim", network.max_dim, "Dimension cap for the base complex")
      ->check(CLI::Range(0, 64));
  network_cmd->add_flag("--lh", network.lh, "Local homology table");
  network_cmd->add_option("--ks", network.ks, "Degrees for --lh")
      ->delimiter(',')
      ->check(CLI::Range(0, 16));
  network_cmd->add_flag("--sections", network.sections, "Enumerate global sections");
  network_cmd->add_option("--section-limit", network.section_limit,
                          "Report only a count beyond this many sections")
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
  network_cmd->add_flag("--cohomology", network.cohomology, "Vector activation sheaf cohomology");
  network_cmd->add_option("--traffic", network.traffic, "Simulate this many packets");
  network_cmd->add_option("--seed", network.seed, "Traffic seed");
  network_cmd->add_option("-o,--output", output, "Output path, '-' for stdout");

  TmeArgs tme;
  auto* tme_cmd = app.add_subcommand("tme", "Topological mixture estimation");
  tme_cmd->add_option("file", tme.input, "Samples, one per line")->required();
  tme_cmd->add_option("--bins", tme.bins, "Grid size")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  tme_cmd->add_option("--bandwidths", tme.bandwidths, "Bandwidths to scan")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  tme_cmd->add_option("--csv", tme.csv, "Write the density and components as CSV here");
  tme_cmd->add_option("-o,--output", output, "JSON output path, '-' for stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArgument;
  }

  try {
    std::string text;
    if (homology_cmd->parsed()) {
      text = cmd_homology(homology);
    } else if (dowker_cmd->parsed()) {
      dowker.windowed = window_opt->count() > 0;
      text = cmd_dowker(dowker);
    } else if (path_cmd->parsed()) {
      text = cmd_path_homology(path);
    } else if (network_cmd->parsed()) {
      text = cmd_network(network);
    } else if (tme_cmd->parsed()) {
      std::string csv;
      text = cmd_tme(tme, csv);
      if (!tme.csv.empty()) emit(tme.csv, csv, out);
    }
    emit(output, text, out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidArgument;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace cybertopo
