#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace forge::linalg {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  Matrix transposed() const;

  bool operator==(const Matrix&) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

/// Compressed sparse rows; column indices within a row are ascending.
struct CsrMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<size_t> row_ptr{0};
  std::vector<uint32_t> col;
  std::vector<double> val;

  size_t nnz() const { return val.size(); }
  double at(size_t r, size_t c) const;
  Matrix to_dense() const;
  static CsrMatrix from_dense(const Matrix& m);
};

double max_abs_diff(const Matrix& a, const Matrix& b);

/// Little-endian binary: magic "FRGM", u32 version, u64 rows, u64 cols, row-major doubles.
void write_binary(std::ostream& out, const Matrix& m);
Matrix read_binary(std::istream& in);

}  // namespace forge::linalg
