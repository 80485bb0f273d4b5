#pragma once

#include <cstddef>
#include <vector>

#include "hypersub/hypergraph.hpp"

namespace hypersub {

/// Result of subdividing every hyperedge: each edge e of cardinality c is
/// replaced by a fresh vertex p_e and the c edges (e \ {v}) u {p_e}.
///
/// New vertices are appended after the originals (ids n..n+m-1, in edge
/// order) and new edges are grouped by origin edge, ordered inside a group by
/// the omitted vertex. This makes the output deterministic and the block
/// layout of the derived matrices reproducible.
struct SubdivisionResult {
  Hypergraph hypergraph;
  std::vector<VertexId> new_vertex_of_edge;          // original edge index -> new vertex
  std::vector<std::size_t> origin_edge_of_new_edge;  // new edge index -> original edge index
};

SubdivisionResult subdivide(const Hypergraph& h);

}  // namespace hypersub
