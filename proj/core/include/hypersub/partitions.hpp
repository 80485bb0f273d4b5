#pragma once

#include <cstddef>
#include <vector>

#include "hypersub/hypergraph.hpp"
#include "hypersub/matrix.hpp"
#include "hypersub/spectra.hpp"

namespace hypersub {

/// Ordered list of disjoint nonempty vertex cells. Cell members are kept
/// sorted ascending; cell order is preserved as given.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::vector<VertexId>> cells);

  static Partition single_cell(std::size_t n);
  static Partition singletons(std::size_t n);

  const std::vector<std::vector<VertexId>>& cells() const noexcept { return cells_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  std::size_t element_count() const noexcept;
  /// Throws unless the cells cover exactly 0..n-1.
  void require_covering(std::size_t n) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::vector<VertexId>> cells_;
};

/// Quotient of a symmetric matrix with respect to an equitable partition:
/// entry (p,q) is the constant row sum from cell p into cell q.
class QuotientMatrix {
 public:
  QuotientMatrix(Matrix entries, Partition source);

  std::size_t order() const noexcept { return entries_.rows(); }
  double operator()(std::size_t p, std::size_t q) const { return entries_(p, q); }
  const Matrix& entries() const noexcept { return entries_; }
  const Partition& source_partition() const noexcept { return source_; }
  /// Real eigenvalues, descending (computed via the cell-size balancing).
  std::vector<double> eigenvalues() const;

 private:
  Matrix entries_;
  Partition source_;
};

/// Verifies that every row sum from cell p into cell q deviates from the cell
/// mean by at most `tolerance`, and returns the quotient of those means.
/// Throws NotEquitableError naming the first offending cell pair otherwise.
QuotientMatrix check_equitable(const SymMatrix& a, const Partition& partition,
                               double tolerance);

/// Coarsest equitable refinement of `seed` under `a`, by iterated splitting on
/// row-sum signatures rounded to multiples of `granularity`. Refining an
/// already-equitable partition returns it unchanged.
Partition refine_to_equitable(const SymMatrix& a, const Partition& seed,
                              double granularity = 1e-9);

struct ContainmentReport {
  bool contained;
  /// Worst matched |lambda - mu| over the claimed pairs; the margin left
  /// under the tolerance. Meaningful only when contained.
  double max_match_deviation;
};

/// Matches every eigenvalue of q against an unclaimed eigenvalue of a within
/// `tolerance` (greedy matching with consumption on sorted lists).
ContainmentReport containment_report(const QuotientMatrix& q, const SymMatrix& a,
                                     double tolerance);
bool containment_check(const QuotientMatrix& q, const SymMatrix& a, double tolerance);

}  // namespace hypersub
