#pragma once

#include <cstddef>
#include <vector>

namespace hypersub {

/// Dense real matrix, row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<double>& data() const noexcept { return a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

Matrix transposed(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);

/// Dense real symmetric matrix. set() mirrors, so symmetry is exact by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order, double fill = 0.0);

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, double value) {
    a_[i * order_ + j] = value;
    a_[j * order_ + i] = value;
  }
  double trace() const;
  double frobenius_norm() const;

 private:
  std::size_t order_ = 0;
  std::vector<double> a_;
};

/// m * transpose(m) as an exactly symmetric matrix.
SymMatrix gram(const Matrix& m);

double max_abs_difference(const SymMatrix& a, const SymMatrix& b);

}  // namespace hypersub
