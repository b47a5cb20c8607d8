#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cyclicpir {

class MatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<std::uint8_t>;

/// Dense matrix over a prime field GF(q), q <= 251, row-major bytes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::uint32_t q, std::size_t rows, std::size_t cols);

  static Matrix identity(std::uint32_t q, std::size_t n);
  static Matrix from_rows(std::uint32_t q, const std::vector<Vector>& rows, std::size_t cols);

  std::uint32_t field_size() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const std::uint8_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const std::uint8_t> values);

  Matrix operator*(const Matrix& other) const;
  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

  /// Reduced row echelon form with zero rows dropped. Pivot columns are
  /// searched in `column_order` (natural order when empty).
  struct Echelon;
  Echelon row_echelon(std::span<const std::size_t> column_order = {}) const;
  std::size_t rank() const;
  std::optional<Matrix> inverse() const;
  /// Basis of {v : this * v^T = 0}; the rows generate the dual of the row space.
  Matrix null_space() const;

  bool row_space_contains(const Matrix& other) const;
  bool row_space_equals(const Matrix& other) const;

 private:
  std::uint32_t q_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

struct Matrix::Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Scalar helpers modulo a small prime.
std::uint8_t gf_inv(std::uint8_t a, std::uint32_t q);
inline std::uint8_t gf_add(std::uint8_t a, std::uint8_t b, std::uint32_t q) {
  return static_cast<std::uint8_t>((a + b) % q);
}
inline std::uint8_t gf_sub(std::uint8_t a, std::uint8_t b, std::uint32_t q) {
  return static_cast<std::uint8_t>((a + q - b) % q);
}
inline std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b, std::uint32_t q) {
  return static_cast<std::uint8_t>(static_cast<std::uint32_t>(a) * b % q);
}

/// x * M for a row vector x of length M.rows().
Vector vector_times_matrix(std::span<const std::uint8_t> x, const Matrix& m);
/// M * v^T for a vector v of length M.cols().
Vector matrix_times_vector(const Matrix& m, std::span<const std::uint8_t> v);
std::uint8_t dot(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, std::uint32_t q);
std::size_t hamming_weight(std::span<const std::uint8_t> v);

}  // namespace cyclicpir
