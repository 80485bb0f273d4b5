#pragma once

#include <cstddef>
#include <vector>

#include "hypersub/hypergraph.hpp"
#include "hypersub/partitions.hpp"

namespace hypersub {

/// k-th power of a graph: every edge e of G is padded with k-2 fresh vertices
/// to a k-set. Fresh vertices are appended after the originals, grouped by
/// edge in edge order.
Hypergraph power_of_graph(const Hypergraph& g, std::size_t k);

/// l hyperedges sharing s center vertices, each with t private twin vertices.
/// Vertex order: centers w_1..w_s, then twins petal by petal. (s+t)-uniform.
Hypergraph hyperflower(std::size_t l, std::size_t s, std::size_t t);

/// Variant with r disjoint center sets of equal size s; every (center set,
/// twin block) pair forms an edge, so there are l*r edges. Equal center-set
/// sizes keep the output uniform; there is no spectrum predictor for r > 1.
Hypergraph hyperflower_general(std::size_t l, std::size_t r, std::size_t s, std::size_t t);

/// hyperflower(l, 1, k-1): l edges of size k through one center.
Hypergraph hyperstar(std::size_t l, std::size_t k);

/// Hyperflower whose consecutive petals additionally share one degree-2
/// vertex, cyclically. Vertex order: centers, overlaps v_1..v_l, twins.
/// (s+t+2)-uniform; requires l >= 3.
Hypergraph petal_overlapped_hyperflower(std::size_t l, std::size_t s, std::size_t t);

/// k-1 petal k-sets plus a center edge through the first vertex of each petal
/// and one extra vertex. k(k-1)+1 vertices.
Hypergraph squid(std::size_t k);

/// k petal k-sets plus a center edge through the first vertex of every petal.
/// k^2 vertices; the center edge comes first in the edge list, so after
/// subdivision its new vertex precedes the petal ones.
Hypergraph squid_like(std::size_t k);

Hypergraph cycle_graph(std::size_t n);
Hypergraph complete_graph(std::size_t n);
/// All k-subsets of an n-set.
Hypergraph complete_uniform_hypergraph(std::size_t n, std::size_t k);
/// Circulant graph on Z_n; the connection set must be symmetric and 0-free.
Hypergraph circulant_graph(std::size_t n, const std::vector<std::size_t>& connection);
Hypergraph petersen_graph();
/// Cayley graph of Z_4 x Z_4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
Hypergraph shrikhande_graph();
/// K_4 x K_4 rook's graph: 16 vertices, adjacent when in the same row or column.
Hypergraph rook_graph_4x4();
/// The 7-point projective plane: 7 vertices, 7 lines, 3-uniform, 3-regular, linear.
Hypergraph fano_plane();

/// Canonical partitions of the subdivided families, cells ordered as in the
/// block decompositions used by the spectrum predictors.
Partition subdivided_hyperflower_partition(std::size_t l, std::size_t s, std::size_t t);
Partition subdivided_petal_overlapped_partition(std::size_t l, std::size_t s, std::size_t t);
Partition subdivided_squid_like_partition(std::size_t k);

}  // namespace hypersub
