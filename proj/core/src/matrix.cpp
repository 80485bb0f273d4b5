#include "hypersub/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "hypersub/error.hpp"

namespace hypersub {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

Matrix transposed(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(errc::bad_parameters, "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

SymMatrix::SymMatrix(std::size_t order, double fill)
    : order_(order), a_(order * order, fill) {}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += a_[i * order_ + i];
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

SymMatrix gram(const Matrix& m) {
  SymMatrix g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.rows(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * m(j, k);
      g.set(i, j, s);
    }
  return g;
}

double max_abs_difference(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order())
    throw Error(errc::bad_parameters, "order mismatch in matrix comparison");
  double d = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

}  // namespace hypersub
