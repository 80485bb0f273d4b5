#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersub/hypergraph.hpp"

namespace hypersub {

struct CospectralComparison {
  bool cospectral;
  double deviation;  // infinity on order mismatch
};

/// Sorted-multiset comparison of the two adjacency spectra. Both inputs must
/// be uniform (the adjacency matrix is only defined then).
CospectralComparison are_cospectral(const Hypergraph& a, const Hypergraph& b,
                                    double tolerance);

enum class IsoVerdict { isomorphic, non_isomorphic, undecided };

struct IsoResult {
  IsoVerdict verdict;
  std::size_t nodes_explored;
  /// old id in `a` -> id in `b`, present when verdict == isomorphic.
  std::optional<std::vector<VertexId>> mapping;
};

/// Exact backtracking over vertex bijections, pruned by degree, codegree
/// consistency and a joint weighted color refinement. Exhausting the search
/// proves non-isomorphism; exceeding `node_budget` yields undecided.
IsoResult are_isomorphic(const Hypergraph& a, const Hypergraph& b,
                         std::size_t node_budget = 1'000'000);

/// perm[old] = new; edges keep their construction order.
Hypergraph relabel(const Hypergraph& h, const std::vector<VertexId>& perm);
Hypergraph shuffled(const Hypergraph& h, std::uint64_t seed);

struct CospectralCertificate {
  std::string provenance;  // "t7" or "t8"
  Hypergraph base_first;
  Hypergraph base_second;
  Hypergraph first;   // the certified subdivided pair
  Hypergraph second;
  std::vector<double> shared_spectrum;  // of the subdivided pair
  double max_deviation;                 // between the subdivided spectra
  double base_deviation;
  double tolerance;
  IsoVerdict base_verdict;
  std::size_t base_search_nodes;
  /// "verified" = the subdivided pair itself was refuted by search;
  /// "by_construction" = refutation exceeded the budget and the claim is
  /// lifted from the non-isomorphic base pair.
  enum class Lift { verified, by_construction, isomorphic, undecided };
  Lift subdivided_verdict;
  std::size_t subdivided_search_nodes;
  /// t7 only: deviation between the two formula predictions (they consume
  /// identical invariants, so this is a pure consistency check).
  std::optional<double> prediction_deviation;
};

/// Subdivide two cospectral, non-isomorphic, same-parameter regular uniform
/// hypergraphs; the subdivided pair is again cospectral and non-isomorphic.
CospectralCertificate cospectral_pair_t8(const Hypergraph& h1, const Hypergraph& h2,
                                         double tolerance = 1e-8,
                                         std::size_t node_budget = 1'000'000);

/// Same construction routed through the k-th graph power: S(G1^k), S(G2^k)
/// for cospectral non-isomorphic regular graphs, cross-checked against the
/// closed-form prediction.
CospectralCertificate cospectral_pair_t7(const Hypergraph& g1, const Hypergraph& g2,
                                         std::size_t k, double tolerance = 1e-8,
                                         std::size_t node_budget = 1'000'000);

}  // namespace hypersub
