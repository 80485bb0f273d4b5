#include "hypersub/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "hypersub/error.hpp"

namespace hypersub {

SpectrumMultiset::SpectrumMultiset(std::vector<double> values, double group_tolerance)
    : values_(std::move(values)), group_tolerance_(group_tolerance) {
  if (group_tolerance_ <= 0.0)
    throw Error(errc::bad_parameters, "grouping tolerance must be positive");
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

std::vector<SpectrumMultiset::Group> SpectrumMultiset::grouped() const {
  std::vector<Group> groups;
  for (double v : values_) {
    if (groups.empty() || groups.back().value - v > group_tolerance_) {
      groups.push_back({v, 1});
    } else {
      ++groups.back().multiplicity;
    }
  }
  return groups;
}

Polynomial::Polynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty())
    throw Error(errc::bad_parameters, "polynomial needs at least one coefficient");
  if (coefficients_.front() == 0.0)
    throw Error(errc::bad_parameters, "leading coefficient must be nonzero");
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (double c : coefficients_) acc = acc * x + c;
  return acc;
}

SpectrumMultiset eigenvalues(const SymMatrix& m, double group_tolerance) {
  const std::size_t n = m.order();
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(errc::bad_parameters, "symmetric eigensolver failed to converge");
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = solver.eigenvalues()(static_cast<long>(i));
  return SpectrumMultiset(std::move(vals), group_tolerance);
}

std::vector<double> real_roots(const Polynomial& p) {
  const std::size_t d = p.degree();
  if (d < 1) throw Error(errc::bad_parameters, "root extraction needs degree >= 1");
  const auto& c = p.coefficients();
  const double lead = c.front();

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) companion(i + 1, i) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    companion(i, d - 1) = -c[d - i] / lead;  // column of -(monic low-order coefficients)

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw Error(errc::bad_parameters, "companion eigensolver failed to converge");

  std::vector<double> roots;
  roots.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::complex<double> z = solver.eigenvalues()(static_cast<long>(i));
    if (std::abs(z.imag()) > 1e-7)
      throw Error(errc::non_real_root,
                  "root " + std::to_string(z.real()) + " + " +
                      std::to_string(z.imag()) + "i has imaginary part above 1e-7");
    roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

std::vector<double> balanced_eigenvalues(const Matrix& q, const std::vector<double>& weights) {
  const std::size_t n = q.rows();
  if (q.cols() != n) throw Error(errc::bad_parameters, "balanced eigensolve needs a square matrix");
  if (weights.size() != n)
    throw Error(errc::bad_parameters, "weight count must match the matrix order");
  for (double w : weights)
    if (w <= 0.0) throw Error(errc::bad_parameters, "weights must be positive");

  // diag(w) q must be symmetric for the similarity transform to be valid.
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(q(i, j)) * weights[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(weights[i] * q(i, j) - weights[j] * q(j, i)) > 1e-9 * std::max(1.0, scale))
        throw Error(errc::bad_parameters,
                    "matrix is not symmetrizable by the given weights");

  SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      s.set(i, j, q(i, j) * std::sqrt(weights[i] / weights[j]));
  return eigenvalues(s).values();
}

MultisetComparison multiset_equal(const SpectrumMultiset& a, const SpectrumMultiset& b,
                                  double tolerance) {
  if (a.size() != b.size())
    return {false, std::numeric_limits<double>::infinity()};
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    dev = std::max(dev, std::abs(a.values()[i] - b.values()[i]));
  return {dev <= tolerance, dev};
}

}  // namespace hypersub
