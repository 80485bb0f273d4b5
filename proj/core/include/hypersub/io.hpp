#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypersub/hypergraph.hpp"
#include "hypersub/version.hpp"

namespace hypersub {

/// Embedded in every document a command writes: enough to reproduce the run.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
  std::string version = std::string(kVersion);
};

/// Interchange document: {"n": int, "edges": [[...], ...], "labels": [...]?}.
/// Edges are serialized sorted ascending, the edge list in construction
/// order; output is byte-deterministic for identical inputs.
std::string to_interchange_json(const Hypergraph& h);
std::string to_interchange_json(const Hypergraph& h, const RunManifest& manifest);

/// Standalone manifest object (for embedding into composite documents).
std::string manifest_json(const RunManifest& manifest);

/// Parses and validates an interchange document. Malformed JSON or schema
/// violations raise errc::parse_error; structural violations raise the
/// corresponding hypergraph construction error.
Hypergraph hypergraph_from_json(const std::string& text);

}  // namespace hypersub
