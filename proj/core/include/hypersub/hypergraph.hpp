#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypersub/matrix.hpp"

namespace hypersub {

using VertexId = std::size_t;

/// A hyperedge: duplicate-free, stored sorted ascending.
using Edge = std::vector<VertexId>;

/// Immutable hypergraph on vertices 0..n-1. Every hyperedge has cardinality
/// at least two and every vertex has degree at least one; repeated vertex
/// sets are rejected unless multi-edges are explicitly allowed.
class Hypergraph {
 public:
  Hypergraph(std::size_t n, std::vector<Edge> edges,
             std::vector<std::string> labels = {}, bool allow_multi_edges = false);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  /// Either empty or one string per vertex (provenance of generated vertices).
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool multi_edges_allowed() const noexcept { return multi_; }

  /// Number of hyperedges containing v.
  std::size_t degree(VertexId v) const;
  /// Number of hyperedges containing both u and v (u != v).
  std::size_t codegree(VertexId u, VertexId v) const;
  /// Common edge cardinality k, or nullopt if edges have mixed sizes.
  std::optional<std::size_t> uniformity() const;
  /// Common vertex degree r, or nullopt if degrees are mixed.
  std::optional<std::size_t> regularity() const;
  /// True when every pair of hyperedges shares at most one vertex.
  bool is_linear() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  bool multi_ = false;
  std::vector<std::size_t> degrees_;
  std::vector<std::vector<std::size_t>> incident_;  // vertex -> edge indices
};

/// Entry (i,j) = codegree(i,j)/(k-1) for a k-uniform hypergraph, zero diagonal.
/// Codegrees are counted in exact integers; the division is the only rounding.
SymMatrix adjacency_matrix(const Hypergraph& h);

/// Entry (i,j) = codegree(i,j), zero diagonal. Defined for any hypergraph and
/// equal to (k-1) * adjacency_matrix for uniform ones.
SymMatrix codegree_matrix(const Hypergraph& h);

/// n x m 0/1 vertex-by-edge membership matrix B. B*B^T has the degrees on the
/// diagonal and the codegrees off it.
Matrix incidence_matrix(const Hypergraph& h);

}  // namespace hypersub
