#include "hypersub/io.hpp"

#include <json.hpp>

#include "hypersub/error.hpp"

namespace hypersub {

namespace {

using nlohmann::json;

json hypergraph_to_json_object(const Hypergraph& h) {
  json doc;
  doc["n"] = h.vertex_count();
  json edges = json::array();
  for (const Edge& e : h.edges()) edges.push_back(e);
  doc["edges"] = std::move(edges);
  if (!h.labels().empty()) doc["labels"] = h.labels();
  if (h.multi_edges_allowed()) doc["multi_edges"] = true;
  return doc;
}

json manifest_to_json_object(const RunManifest& m) {
  json doc;
  doc["command"] = m.command;
  doc["parameters"] = json::object();
  for (const auto& [key, value] : m.parameters) doc["parameters"][key] = value;
  doc["inputs"] = m.inputs;
  doc["outputs"] = m.outputs;
  if (m.tolerance) doc["tolerance"] = *m.tolerance;
  doc["seed"] = m.seed;
  doc["version"] = m.version;
  return doc;
}

}  // namespace

std::string to_interchange_json(const Hypergraph& h) {
  return hypergraph_to_json_object(h).dump(2) + "\n";
}

std::string to_interchange_json(const Hypergraph& h, const RunManifest& manifest) {
  json doc = hypergraph_to_json_object(h);
  doc["manifest"] = manifest_to_json_object(manifest);
  return doc.dump(2) + "\n";
}

std::string manifest_json(const RunManifest& manifest) {
  return manifest_to_json_object(manifest).dump(2);
}

Hypergraph hypergraph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(errc::parse_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw Error(errc::parse_error, "expected an object with fields 'n' and 'edges'");
  if (!doc["n"].is_number_unsigned())
    throw Error(errc::parse_error, "'n' must be a non-negative integer");
  const std::size_t n = doc["n"].get<std::size_t>();

  if (!doc["edges"].is_array())
    throw Error(errc::parse_error, "'edges' must be an array of integer arrays");
  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& je : doc["edges"]) {
    if (!je.is_array())
      throw Error(errc::parse_error, "'edges' must be an array of integer arrays");
    Edge e;
    e.reserve(je.size());
    for (const auto& jv : je) {
      if (!jv.is_number_unsigned())
        throw Error(errc::parse_error, "edge members must be non-negative integers");
      e.push_back(jv.get<VertexId>());
    }
    edges.push_back(std::move(e));
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      throw Error(errc::parse_error, "'labels' must be an array of strings");
    for (const auto& jl : doc["labels"]) {
      if (!jl.is_string()) throw Error(errc::parse_error, "'labels' must be an array of strings");
      labels.push_back(jl.get<std::string>());
    }
  }
  bool multi = false;
  if (doc.contains("multi_edges")) {
    if (!doc["multi_edges"].is_boolean())
      throw Error(errc::parse_error, "'multi_edges' must be a boolean");
    multi = doc["multi_edges"].get<bool>();
  }
  return Hypergraph(n, std::move(edges), std::move(labels), multi);
}

}  // namespace hypersub
