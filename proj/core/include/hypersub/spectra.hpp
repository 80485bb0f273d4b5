#pragma once

#include <cstddef>
#include <vector>

#include "hypersub/matrix.hpp"

namespace hypersub {

/// Eigenvalue multiset: values sorted descending, with a tolerance-grouped
/// (value, multiplicity) view for display. The sorted list, not the grouped
/// view, is the normative representation for comparisons.
class SpectrumMultiset {
 public:
  SpectrumMultiset() = default;
  explicit SpectrumMultiset(std::vector<double> values, double group_tolerance = 1e-8);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double group_tolerance() const noexcept { return group_tolerance_; }

  struct Group {
    double value;
    std::size_t multiplicity;
  };
  /// Greedy grouping on the descending list: a value joins the current group
  /// while it stays within the tolerance of the group's first (largest) member.
  std::vector<Group> grouped() const;

 private:
  std::vector<double> values_;
  double group_tolerance_ = 1e-8;
};

/// Real polynomial, coefficients in descending degree order, nonzero lead.
class Polynomial {
 public:
  explicit Polynomial(std::vector<double> coefficients);

  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  double operator()(double x) const;

 private:
  std::vector<double> coefficients_;
};

/// All eigenvalues of a symmetric matrix, descending.
SpectrumMultiset eigenvalues(const SymMatrix& m, double group_tolerance = 1e-8);

/// All real roots with multiplicity, via companion-matrix eigenvalues,
/// descending. Throws errc::non_real_root when any root has imaginary part
/// above 1e-7 (the polynomial then does not come from a symmetric matrix).
std::vector<double> real_roots(const Polynomial& p);

/// Eigenvalues of q when diag(w)^{1/2} q diag(w)^{-1/2} is symmetric, e.g. a
/// quotient matrix balanced by its cell sizes. Descending.
std::vector<double> balanced_eigenvalues(const Matrix& q, const std::vector<double>& weights);

struct MultisetComparison {
  bool equal;
  double max_deviation;  // infinity on length mismatch
};

/// Sorted-list comparison: equal sizes and max |a_i - b_i| <= tolerance.
MultisetComparison multiset_equal(const SpectrumMultiset& a, const SpectrumMultiset& b,
                                  double tolerance);

}  // namespace hypersub
