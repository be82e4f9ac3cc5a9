#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sg {

// Row-major dense matrix of 64-bit floats. The whole pipeline runs in
// double precision; feature files store 32-bit floats and are promoted
// on load.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {values_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {values_.data() + i * cols_, cols_}; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  bool same_shape(const DenseMatrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  // Throws NumericError if any entry is NaN or infinite.
  void check_finite(const char* context) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// Standard product; throws ShapeError naming both shapes on mismatch.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix transpose(const DenseMatrix& a);

// y += alpha * x (shapes must match).
void add_scaled(DenseMatrix& y, double alpha, const DenseMatrix& x);

void scale(DenseMatrix& a, double alpha);

DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b);

// Column-wise mean over all rows; throws DomainError on an empty matrix.
std::vector<double> column_mean(const DenseMatrix& a);

double dot(std::span<const double> a, std::span<const double> b);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace sg
