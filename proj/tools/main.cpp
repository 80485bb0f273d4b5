#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "hypersub/cospectral.hpp"
#include "hypersub/error.hpp"
#include "hypersub/families.hpp"
#include "hypersub/io.hpp"
#include "hypersub/partitions.hpp"
#include "hypersub/predictors.hpp"
#include "hypersub/spectra.hpp"
#include "hypersub/subdivision.hpp"
#include "hypersub/version.hpp"

namespace {

using nlohmann::json;
using namespace hypersub;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiscrepancy = 2;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, "cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(errc::parse_error, "cannot open output file " + out_path);
  out << text;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> params;
  if (text.empty()) return params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(errc::bad_parameters, "expected key=value in --params, got '" + item + "'");
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return params;
}

long long param_int(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end())
    throw Error(errc::bad_parameters, "missing parameter '" + key + "'");
  try {
    return std::stoll(it->second);
  } catch (const std::exception&) {
    throw Error(errc::bad_parameters, "parameter '" + key + "' is not an integer");
  }
}

std::size_t param_size(const std::map<std::string, std::string>& params,
                       const std::string& key) {
  const long long v = param_int(params, key);
  if (v < 0) throw Error(errc::bad_parameters, "parameter '" + key + "' must be >= 0");
  return static_cast<std::size_t>(v);
}

// colon-separated integer list, e.g. "1:3" for a circulant connection set
std::vector<std::size_t> param_list(const std::map<std::string, std::string>& params,
                                    const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end())
    throw Error(errc::bad_parameters, "missing parameter '" + key + "'");
  std::vector<std::size_t> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      out.push_back(static_cast<std::size_t>(std::stoull(item)));
    } catch (const std::exception&) {
      throw Error(errc::bad_parameters, "parameter '" + key + "' is not an integer list");
    }
  }
  return out;
}

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> parameters,
                          std::vector<std::string> inputs, std::vector<std::string> outputs,
                          std::optional<double> tolerance, std::uint64_t seed) {
  RunManifest m;
  m.command = command;
  m.parameters = std::move(parameters);
  m.inputs = std::move(inputs);
  m.outputs = std::move(outputs);
  m.tolerance = tolerance;
  m.seed = seed;
  return m;
}

Hypergraph make_family(const std::string& family,
                       const std::map<std::string, std::string>& params,
                       const std::optional<Hypergraph>& input) {
  if (family == "power") {
    if (!input)
      throw Error(errc::bad_parameters, "family 'power' needs --input with a base graph");
    return power_of_graph(*input, param_size(params, "k"));
  }
  if (family == "hyperflower") {
    const std::size_t r = params.count("r") ? param_size(params, "r") : 1;
    return hyperflower_general(param_size(params, "l"), r, param_size(params, "s"),
                               param_size(params, "t"));
  }
  if (family == "hyperstar")
    return hyperstar(param_size(params, "l"), param_size(params, "k"));
  if (family == "petal_overlapped")
    return petal_overlapped_hyperflower(param_size(params, "l"), param_size(params, "s"),
                                        param_size(params, "t"));
  if (family == "squid") return squid(param_size(params, "k"));
  if (family == "squid_like") return squid_like(param_size(params, "k"));
  if (family == "cycle") return cycle_graph(param_size(params, "n"));
  if (family == "complete") return complete_graph(param_size(params, "n"));
  if (family == "complete_uniform")
    return complete_uniform_hypergraph(param_size(params, "n"), param_size(params, "k"));
  if (family == "circulant")
    return circulant_graph(param_size(params, "n"), param_list(params, "S"));
  if (family == "petersen") return petersen_graph();
  if (family == "shrikhande") return shrikhande_graph();
  if (family == "rook4x4") return rook_graph_4x4();
  if (family == "fano") return fano_plane();
  throw Error(errc::bad_parameters, "unknown family '" + family + "'");
}

json spectrum_json(const SpectrumMultiset& s) {
  json doc;
  doc["order"] = s.size();
  doc["group_tolerance"] = s.group_tolerance();
  doc["values"] = s.values();
  json grouped = json::array();
  for (const auto& g : s.grouped())
    grouped.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
  doc["grouped"] = std::move(grouped);
  return doc;
}

std::string spectrum_text(const SpectrumMultiset& s, const std::string& format) {
  std::string out;
  if (format == "csv") out += "value,multiplicity\n";
  for (const auto& g : s.grouped()) {
    out += fmt12(g.value);
    out += format == "csv" ? "," : "  ";
    out += std::to_string(g.multiplicity);
    out += "\n";
  }
  return out;
}

json prediction_json(const PredictedSpectrum& p) {
  json doc;
  doc["flavor"] = p.flavor == Flavor::structural ? "structural" : "closed_form";
  doc["expected_size"] = p.expected_size;
  json pieces = json::array();
  for (const auto& piece : p.pieces)
    pieces.push_back({{"clause", piece.clause},
                      {"description", piece.description},
                      {"values", piece.values},
                      {"multiplicity", piece.multiplicity}});
  doc["pieces"] = std::move(pieces);
  doc["values"] = p.flatten().values();
  return doc;
}

json report_json(const DiscrepancyReport& r) {
  json doc;
  doc["theorem"] = r.theorem;
  doc["params"] = r.params;
  doc["compared"] = r.compared;
  doc["max_deviation"] = r.max_deviation;  // serialized as null when infinite
  doc["offending_clause"] = r.offending_clause;
  doc["note"] = r.note;
  return doc;
}

json audit_json(const AuditResult& a) {
  json doc;
  doc["theorem"] = a.theorem;
  doc["params"] = a.params;
  doc["pass"] = a.pass;
  doc["structural_vs_oracle"] = a.structural_vs_oracle;
  doc["closed_vs_oracle"] = a.closed_vs_oracle;
  doc["closed_vs_structural"] = a.closed_vs_structural;
  doc["reports"] = json::array();
  for (const auto& r : a.reports) doc["reports"].push_back(report_json(r));
  doc["notes"] = a.notes;
  return doc;
}

std::string audit_text(const AuditResult& a) {
  std::string line = a.theorem + " " + a.params + ": ";
  if (a.pass) {
    line += "PASS (structural vs oracle " + fmt12(a.structural_vs_oracle) +
            ", closed vs structural " + fmt12(a.closed_vs_structural) + ")\n";
  } else {
    line += "DISCREPANCY (structural vs oracle " + fmt12(a.structural_vs_oracle) + ")\n";
    for (const auto& r : a.reports)
      line += "  " + r.compared + ": clause (" + r.offending_clause + "), deviation " +
              fmt12(r.max_deviation) + " -- " + r.note + "\n";
  }
  for (const auto& note : a.notes) line += "  note: " + note + "\n";
  return line;
}

// "0-2;3,4;5" -> cells {0,1,2}, {3,4}, {5}
Partition parse_cells(const std::string& text) {
  std::vector<std::vector<VertexId>> cells;
  std::stringstream ss(text);
  std::string cell_text;
  while (std::getline(ss, cell_text, ';')) {
    std::vector<VertexId> cell;
    std::stringstream cs(cell_text);
    std::string item;
    while (std::getline(cs, item, ',')) {
      const auto dash = item.find('-');
      try {
        if (dash == std::string::npos) {
          cell.push_back(static_cast<VertexId>(std::stoull(item)));
        } else {
          const auto first = std::stoull(item.substr(0, dash));
          const auto last = std::stoull(item.substr(dash + 1));
          if (last < first) throw Error(errc::bad_parameters, "descending range in --cells");
          for (auto v = first; v <= last; ++v) cell.push_back(static_cast<VertexId>(v));
        }
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        throw Error(errc::bad_parameters, "cannot parse --cells item '" + item + "'");
      }
    }
    cells.push_back(std::move(cell));
  }
  return Partition(std::move(cells));
}

struct TheoremRequest {
  std::string theorem;
  std::map<std::string, std::string> params;
  std::optional<Hypergraph> input;
};

PredictedSpectrum run_prediction(const TheoremRequest& req, Flavor flavor) {
  if (req.theorem == "t1") {
    if (!req.input) throw Error(errc::bad_parameters, "t1 needs --input");
    return predict_t1(*req.input, flavor);
  }
  if (req.theorem == "t2") {
    if (!req.input) throw Error(errc::bad_parameters, "t2 needs --input");
    return predict_t2(*req.input, param_size(req.params, "k"), flavor);
  }
  if (req.theorem == "t3")
    return predict_t3(param_size(req.params, "l"), param_size(req.params, "s"),
                      param_size(req.params, "t"), flavor);
  if (req.theorem == "t4")
    return predict_t4(param_size(req.params, "l"), param_size(req.params, "k"), flavor);
  if (req.theorem == "t5")
    return predict_t5(param_size(req.params, "l"), param_size(req.params, "s"),
                      param_size(req.params, "t"), flavor);
  if (req.theorem == "t6") return predict_t6(param_size(req.params, "k"), flavor);
  throw Error(errc::bad_parameters, "unknown theorem '" + req.theorem + "'");
}

AuditResult run_theorem_audit(const TheoremRequest& req, double tol) {
  if (req.theorem == "t1") {
    if (!req.input) throw Error(errc::bad_parameters, "t1 needs --input");
    return audit_t1(*req.input, tol);
  }
  if (req.theorem == "t2") {
    if (!req.input) throw Error(errc::bad_parameters, "t2 needs --input");
    return audit_t2(*req.input, param_size(req.params, "k"), tol);
  }
  if (req.theorem == "t3")
    return audit_t3(param_size(req.params, "l"), param_size(req.params, "s"),
                    param_size(req.params, "t"), tol);
  if (req.theorem == "t4")
    return audit_t4(param_size(req.params, "l"), param_size(req.params, "k"), tol);
  if (req.theorem == "t5")
    return audit_t5(param_size(req.params, "l"), param_size(req.params, "s"),
                    param_size(req.params, "t"), tol);
  if (req.theorem == "t6") return audit_t6(param_size(req.params, "k"), tol);
  throw Error(errc::bad_parameters, "unknown theorem '" + req.theorem + "'");
}

const char* iso_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::isomorphic: return "isomorphic";
    case IsoVerdict::non_isomorphic: return "non-isomorphic";
    case IsoVerdict::undecided: return "undecided";
  }
  return "undecided";
}

const char* lift_name(CospectralCertificate::Lift v) {
  switch (v) {
    case CospectralCertificate::Lift::verified: return "non-isomorphic (verified)";
    case CospectralCertificate::Lift::by_construction:
      return "non-isomorphic (lifted from the base pair)";
    case CospectralCertificate::Lift::isomorphic: return "isomorphic";
    case CospectralCertificate::Lift::undecided: return "undecided";
  }
  return "undecided";
}

json certificate_json(const CospectralCertificate& cert, const RunManifest& manifest) {
  json doc;
  doc["manifest"] = json::parse(manifest_json(manifest));
  doc["construction"] = cert.provenance;
  doc["tolerance"] = cert.tolerance;
  doc["base"] = {{"first", json::parse(to_interchange_json(cert.base_first))},
                 {"second", json::parse(to_interchange_json(cert.base_second))},
                 {"deviation", cert.base_deviation},
                 {"isomorphism", iso_name(cert.base_verdict)},
                 {"search_nodes", cert.base_search_nodes}};
  json sub = {{"first", json::parse(to_interchange_json(cert.first))},
              {"second", json::parse(to_interchange_json(cert.second))},
              {"deviation", cert.max_deviation},
              {"isomorphism", lift_name(cert.subdivided_verdict)},
              {"search_nodes", cert.subdivided_search_nodes}};
  if (cert.prediction_deviation) sub["prediction_deviation"] = *cert.prediction_deviation;
  doc["subdivided"] = std::move(sub);
  doc["shared_spectrum"] = cert.shared_spectrum;
  return doc;
}

int run(int argc, char** argv) {
  CLI::App app{"subdivision spectra of uniform hypergraphs: generators, predictors, "
               "verification, cospectral constructions"};
  app.require_subcommand(1);

  // ---- gen
  auto* gen = app.add_subcommand("gen", "generate a named hypergraph family");
  std::string gen_family, gen_params, gen_input, gen_out;
  bool gen_shuffle = false;
  std::uint64_t gen_seed = 0;
  gen->add_option("--family", gen_family, "family name")->required();
  gen->add_option("--params", gen_params, "comma-separated key=value parameters");
  gen->add_option("--input", gen_input, "base graph file (for --family power)");
  gen->add_option("--out", gen_out, "output path (default stdout)");
  gen->add_flag("--shuffle", gen_shuffle, "relabel the output with the seeded permutation");
  gen->add_option("--seed", gen_seed, "seed for --shuffle");

  // ---- subdivide
  auto* sub = app.add_subcommand("subdivide", "subdivide every hyperedge");
  std::string sub_input = "-", sub_out, sub_prov;
  sub->add_option("input", sub_input, "interchange file (default stdin)");
  sub->add_option("--out", sub_out, "output path (default stdout)");
  sub->add_option("--provenance", sub_prov, "write the origin maps to this file");

  // ---- spectrum
  auto* spec = app.add_subcommand("spectrum", "adjacency spectrum of a uniform hypergraph");
  std::string spec_input = "-", spec_out, spec_format = "text", spec_matrix = "adjacency";
  double spec_tol = 1e-8;
  spec->add_option("input", spec_input, "interchange file (default stdin)");
  spec->add_option("--format", spec_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  spec->add_option("--matrix", spec_matrix, "adjacency|codegree")
      ->check(CLI::IsMember({"adjacency", "codegree"}));
  spec->add_option("--tol", spec_tol, "grouping tolerance for the multiplicity view");
  spec->add_option("--out", spec_out, "output path (default stdout)");

  // ---- quotient
  auto* quo = app.add_subcommand("quotient", "equitable-partition quotient and containment");
  std::string quo_input = "-", quo_cells, quo_out, quo_format = "text";
  double quo_tol = 1e-10, quo_containment_tol = 1e-8;
  quo->add_option("input", quo_input, "interchange file (default stdin)");
  quo->add_option("--cells", quo_cells, "partition, e.g. \"0-2;3,4;5\"")->required();
  quo->add_option("--tol", quo_tol, "equitability tolerance");
  quo->add_option("--containment-tol", quo_containment_tol, "containment tolerance");
  quo->add_option("--format", quo_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  quo->add_option("--out", quo_out, "output path (default stdout)");

  // ---- predict / verify
  auto add_theorem_options = [](CLI::App* cmd, std::string& theorem, std::string& params,
                                std::string& input) {
    cmd->add_option("--theorem", theorem, "t1|t2|t3|t4|t5|t6")
        ->required()
        ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "t5", "t6"}));
    cmd->add_option("--params", params, "comma-separated key=value parameters");
    cmd->add_option("--input", input, "input hypergraph (t1) or base graph (t2)");
  };
  auto* pre = app.add_subcommand("predict", "assemble the predicted subdivision spectrum");
  std::string pre_theorem, pre_params, pre_input, pre_flavor = "structural",
                                                  pre_format = "text", pre_out;
  add_theorem_options(pre, pre_theorem, pre_params, pre_input);
  pre->add_option("--flavor", pre_flavor, "structural|closed")
      ->check(CLI::IsMember({"structural", "closed"}));
  pre->add_option("--format", pre_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  pre->add_option("--out", pre_out, "output path (default stdout)");

  auto* ver = app.add_subcommand("verify", "audit a theorem instance against the oracle");
  std::string ver_theorem, ver_params, ver_input, ver_format = "text", ver_out;
  double ver_tol = 1e-6;
  add_theorem_options(ver, ver_theorem, ver_params, ver_input);
  ver->add_option("--tol", ver_tol, "comparison tolerance");
  ver->add_option("--format", ver_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--out", ver_out, "output path (default stdout)");

  // ---- audit-all
  auto* aud = app.add_subcommand("audit-all", "run the full verification grid");
  std::string aud_format = "text", aud_out;
  double aud_tol = 1e-6;
  unsigned aud_jobs = 0;
  aud->add_option("--tol", aud_tol, "comparison tolerance");
  aud->add_option("--jobs", aud_jobs, "worker count (0 = hardware)");
  aud->add_option("--format", aud_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  aud->add_option("--out", aud_out, "output path (default stdout)");

  // ---- cospectral
  auto* cos = app.add_subcommand("cospectral", "cospectrality checks and constructions");
  cos->require_subcommand(1);
  auto* chk = cos->add_subcommand("check", "compare the spectra of two hypergraphs");
  std::string chk_a, chk_b, chk_format = "text", chk_out;
  double chk_tol = 1e-8;
  bool chk_shuffle = false;
  std::uint64_t chk_seed = 0;
  chk->add_option("first", chk_a, "first interchange file")->required();
  chk->add_option("second", chk_b, "second interchange file")->required();
  chk->add_option("--tol", chk_tol, "comparison tolerance");
  chk->add_flag("--shuffle", chk_shuffle, "relabel the second input before comparing");
  chk->add_option("--seed", chk_seed, "seed for --shuffle");
  chk->add_option("--format", chk_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  chk->add_option("--out", chk_out, "output path (default stdout)");

  auto* forge = cos->add_subcommand("forge", "build a certified cospectral pair");
  std::string forge_base, forge_inputs, forge_out_dir;
  std::size_t forge_k = 0, forge_budget = 1'000'000;
  double forge_tol = 1e-8;
  forge->add_option("--base", forge_base,
                    "two parameterless family names, e.g. shrikhande,rook4x4");
  forge->add_option("--inputs", forge_inputs, "two interchange files, comma separated");
  forge->add_option("--k", forge_k, "route through the k-th graph power (t7); omit for t8");
  forge->add_option("--tol", forge_tol, "cospectrality tolerance");
  forge->add_option("--budget", forge_budget, "isomorphism search node budget");
  forge->add_option("--out", forge_out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    std::map<std::string, std::string> params = parse_params(gen_params);
    std::optional<Hypergraph> base;
    if (!gen_input.empty()) base = hypergraph_from_json(read_input(gen_input));
    Hypergraph h = make_family(gen_family, params, base);
    if (gen_shuffle) h = shuffled(h, gen_seed);
    auto manifest_params = params;
    manifest_params["family"] = gen_family;
    if (gen_shuffle) manifest_params["shuffle"] = "true";
    const auto manifest = make_manifest(
        "gen", manifest_params,
        gen_input.empty() ? std::vector<std::string>{} : std::vector<std::string>{gen_input},
        {gen_out.empty() ? "-" : gen_out}, std::nullopt, gen_seed);
    emit(to_interchange_json(h, manifest), gen_out);
    return kExitOk;
  }

  if (sub->parsed()) {
    const auto h = hypergraph_from_json(read_input(sub_input));
    const auto result = subdivide(h);
    const auto manifest = make_manifest("subdivide", {}, {sub_input},
                                        {sub_out.empty() ? "-" : sub_out}, std::nullopt, 0);
    emit(to_interchange_json(result.hypergraph, manifest), sub_out);
    if (!sub_prov.empty()) {
      json prov;
      prov["manifest"] = json::parse(manifest_json(manifest));
      prov["new_vertex_of_edge"] = result.new_vertex_of_edge;
      prov["origin_edge_of_new_edge"] = result.origin_edge_of_new_edge;
      emit(prov.dump(2) + "\n", sub_prov);
    }
    return kExitOk;
  }

  if (spec->parsed()) {
    const auto h = hypergraph_from_json(read_input(spec_input));
    const auto m = spec_matrix == "adjacency" ? adjacency_matrix(h) : codegree_matrix(h);
    const auto s = eigenvalues(m, spec_tol);
    if (spec_format == "json") {
      json doc = spectrum_json(s);
      doc["manifest"] = json::parse(manifest_json(
          make_manifest("spectrum", {{"matrix", spec_matrix}}, {spec_input},
                        {spec_out.empty() ? "-" : spec_out}, spec_tol, 0)));
      emit(doc.dump(2) + "\n", spec_out);
    } else {
      emit(spectrum_text(s, spec_format), spec_out);
    }
    return kExitOk;
  }

  if (quo->parsed()) {
    const auto h = hypergraph_from_json(read_input(quo_input));
    const auto a = adjacency_matrix(h);
    const auto partition = parse_cells(quo_cells);
    const auto q = check_equitable(a, partition, quo_tol);
    const auto containment = containment_report(q, a, quo_containment_tol);
    if (quo_format == "json") {
      json doc;
      doc["manifest"] = json::parse(manifest_json(
          make_manifest("quotient", {{"cells", quo_cells}}, {quo_input},
                        {quo_out.empty() ? "-" : quo_out}, quo_tol, 0)));
      json rows = json::array();
      for (std::size_t p = 0; p < q.order(); ++p) {
        json row = json::array();
        for (std::size_t r = 0; r < q.order(); ++r) row.push_back(q(p, r));
        rows.push_back(std::move(row));
      }
      doc["quotient"] = std::move(rows);
      doc["eigenvalues"] = q.eigenvalues();
      doc["containment"] = containment.contained;
      doc["max_match_deviation"] = containment.max_match_deviation;
      emit(doc.dump(2) + "\n", quo_out);
    } else {
      std::string text;
      for (std::size_t p = 0; p < q.order(); ++p) {
        for (std::size_t r = 0; r < q.order(); ++r)
          text += (r == 0 ? "" : "  ") + fmt12(q(p, r));
        text += "\n";
      }
      text += std::string("containment: ") + (containment.contained ? "PASS" : "FAIL") +
              " (max match deviation " + fmt12(containment.max_match_deviation) + ", tol " +
              fmt12(quo_containment_tol) + ")\n";
      emit(text, quo_out);
    }
    return containment.contained ? kExitOk : kExitDiscrepancy;
  }

  if (pre->parsed()) {
    TheoremRequest req{pre_theorem, parse_params(pre_params), std::nullopt};
    if (!pre_input.empty()) req.input = hypergraph_from_json(read_input(pre_input));
    const auto flavor = pre_flavor == "closed" ? Flavor::closed_form : Flavor::structural;
    const auto p = run_prediction(req, flavor);
    if (pre_format == "json") {
      json doc = prediction_json(p);
      auto manifest_params = req.params;
      manifest_params["theorem"] = pre_theorem;
      manifest_params["flavor"] = pre_flavor;
      doc["manifest"] = json::parse(manifest_json(make_manifest(
          "predict", manifest_params,
          pre_input.empty() ? std::vector<std::string>{} : std::vector<std::string>{pre_input},
          {pre_out.empty() ? "-" : pre_out}, std::nullopt, 0)));
      emit(doc.dump(2) + "\n", pre_out);
    } else {
      emit(spectrum_text(p.flatten(), "text"), pre_out);
    }
    return kExitOk;
  }

  if (ver->parsed()) {
    TheoremRequest req{ver_theorem, parse_params(ver_params), std::nullopt};
    if (!ver_input.empty()) req.input = hypergraph_from_json(read_input(ver_input));
    const auto result = run_theorem_audit(req, ver_tol);
    if (ver_format == "json") {
      json doc = audit_json(result);
      auto manifest_params = req.params;
      manifest_params["theorem"] = ver_theorem;
      doc["manifest"] = json::parse(manifest_json(make_manifest(
          "verify", manifest_params,
          ver_input.empty() ? std::vector<std::string>{} : std::vector<std::string>{ver_input},
          {ver_out.empty() ? "-" : ver_out}, ver_tol, 0)));
      emit(doc.dump(2) + "\n", ver_out);
    } else {
      emit(audit_text(result), ver_out);
    }
    return result.pass ? kExitOk : kExitDiscrepancy;
  }

  if (aud->parsed()) {
    const auto results = audit_all(aud_tol, aud_jobs);
    std::size_t failures = 0;
    for (const auto& r : results)
      if (!r.pass) ++failures;
    if (aud_format == "json") {
      json doc;
      doc["manifest"] = json::parse(manifest_json(
          make_manifest("audit-all", {}, {}, {aud_out.empty() ? "-" : aud_out}, aud_tol, 0)));
      doc["results"] = json::array();
      for (const auto& r : results) doc["results"].push_back(audit_json(r));
      doc["grid_points"] = results.size();
      doc["discrepancies"] = failures;
      emit(doc.dump(2) + "\n", aud_out);
    } else {
      std::string text;
      for (const auto& r : results) text += audit_text(r);
      text += "summary: " + std::to_string(results.size() - failures) + " pass, " +
              std::to_string(failures) + " discrepancies, " + std::to_string(results.size()) +
              " grid points (tol " + fmt12(aud_tol) + ")\n";
      emit(text, aud_out);
    }
    return failures == 0 ? kExitOk : kExitDiscrepancy;
  }

  if (chk->parsed()) {
    const auto a = hypergraph_from_json(read_input(chk_a));
    auto b = hypergraph_from_json(read_input(chk_b));
    if (chk_shuffle) b = shuffled(b, chk_seed);
    const auto cmp = are_cospectral(a, b, chk_tol);
    if (chk_format == "json") {
      json doc;
      std::map<std::string, std::string> params;
      if (chk_shuffle) params["shuffle"] = "true";
      doc["manifest"] = json::parse(manifest_json(
          make_manifest("cospectral-check", params, {chk_a, chk_b},
                        {chk_out.empty() ? "-" : chk_out}, chk_tol, chk_seed)));
      doc["cospectral"] = cmp.cospectral;
      doc["deviation"] = cmp.deviation;
      emit(doc.dump(2) + "\n", chk_out);
    } else {
      emit(std::string(cmp.cospectral ? "cospectral" : "not cospectral") + " (deviation " +
               fmt12(cmp.deviation) + ", tol " + fmt12(chk_tol) + ")\n",
           chk_out);
    }
    return kExitOk;
  }

  if (forge->parsed()) {
    std::optional<Hypergraph> h1, h2;
    std::vector<std::string> input_names;
    if (!forge_base.empty()) {
      const auto comma = forge_base.find(',');
      if (comma == std::string::npos)
        throw Error(errc::bad_parameters, "--base needs two names, comma separated");
      const std::string n1 = forge_base.substr(0, comma);
      const std::string n2 = forge_base.substr(comma + 1);
      h1 = make_family(n1, {}, std::nullopt);
      h2 = make_family(n2, {}, std::nullopt);
      input_names = {n1, n2};
    } else if (!forge_inputs.empty()) {
      const auto comma = forge_inputs.find(',');
      if (comma == std::string::npos)
        throw Error(errc::bad_parameters, "--inputs needs two files, comma separated");
      const std::string f1 = forge_inputs.substr(0, comma);
      const std::string f2 = forge_inputs.substr(comma + 1);
      h1 = hypergraph_from_json(read_input(f1));
      h2 = hypergraph_from_json(read_input(f2));
      input_names = {f1, f2};
    } else {
      throw Error(errc::bad_parameters, "forge needs --base or --inputs");
    }

    const auto cert = forge_k != 0
                          ? cospectral_pair_t7(*h1, *h2, forge_k, forge_tol, forge_budget)
                          : cospectral_pair_t8(*h1, *h2, forge_tol, forge_budget);

    namespace fs = std::filesystem;
    fs::create_directories(forge_out_dir);
    std::map<std::string, std::string> params;
    if (forge_k != 0) params["k"] = std::to_string(forge_k);
    params["budget"] = std::to_string(forge_budget);
    const auto manifest =
        make_manifest("cospectral-forge", params, input_names, {forge_out_dir}, forge_tol, 0);
    emit(to_interchange_json(cert.base_first),
         (fs::path(forge_out_dir) / "base_1.json").string());
    emit(to_interchange_json(cert.base_second),
         (fs::path(forge_out_dir) / "base_2.json").string());
    emit(to_interchange_json(cert.first),
         (fs::path(forge_out_dir) / "subdivided_1.json").string());
    emit(to_interchange_json(cert.second),
         (fs::path(forge_out_dir) / "subdivided_2.json").string());
    emit(certificate_json(cert, manifest).dump(2) + "\n",
         (fs::path(forge_out_dir) / "certificate.json").string());
    std::cout << cert.provenance << ": " << cert.first.vertex_count()
              << "-vertex pair, spectra deviate by " << fmt12(cert.max_deviation)
              << ", subdivided pair " << lift_name(cert.subdivided_verdict) << "\n";
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::non_real_root ? kExitDiscrepancy : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
