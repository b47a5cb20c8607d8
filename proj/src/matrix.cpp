#include "cyclicpir/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "cyclicpir/finite_field.hpp"

namespace cyclicpir {

std::uint8_t gf_inv(std::uint8_t a, std::uint32_t q) {
  if (a % q == 0) throw MatrixError("inverse of zero");
  std::uint32_t result = 1, base = a % q, e = q - 2;
  while (e) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<std::uint8_t>(result);
}

Matrix::Matrix(std::uint32_t q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (q > 251 || !is_prime(q)) throw MatrixError("matrix field size must be a prime <= 251");
}

Matrix Matrix::identity(std::uint32_t q, std::size_t n) {
  Matrix m(q, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::uint32_t q, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(q, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const std::uint8_t> values) {
  if (values.size() != cols_) throw MatrixError("row length mismatch");
  for (auto v : values) data_.push_back(static_cast<std::uint8_t>(v % q_));
  ++rows_;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (q_ != other.q_) throw MatrixError("matrices over different fields");
  if (cols_ != other.rows_) throw MatrixError("matrix dimension mismatch");
  Matrix out(q_, rows_, other.cols_);
  std::vector<std::uint32_t> acc(other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = (*this)(i, k);
      if (a == 0) continue;
      const auto orow = other.row(k);
      for (std::size_t j = 0; j < other.cols_; ++j) acc[j] += a * orow[j];
    }
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) = static_cast<std::uint8_t>(acc[j] % q_);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(q_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(q_, rows_, columns.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = (*this)(i, columns[j]);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(q_, 0, cols_);
  for (auto r : rows) out.append_row(row(r));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v == 0; });
}

Matrix::Echelon Matrix::row_echelon(std::span<const std::size_t> column_order) const {
  std::vector<std::size_t> order;
  if (column_order.empty()) {
    order.resize(cols_);
    std::iota(order.begin(), order.end(), 0);
  } else {
    order.assign(column_order.begin(), column_order.end());
  }
  Matrix m(*this);
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c : order) {
    if (rank == rows_) break;
    std::size_t pivot_row = rank;
    while (pivot_row < rows_ && m(pivot_row, c) == 0) ++pivot_row;
    if (pivot_row == rows_) continue;
    if (pivot_row != rank) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot_row, j), m(rank, j));
    }
    const std::uint8_t inv = gf_inv(m(rank, c), q_);
    if (inv != 1) {
      for (std::size_t j = 0; j < cols_; ++j) m(rank, j) = gf_mul(m(rank, j), inv, q_);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank) continue;
      const std::uint8_t f = m(i, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        m(i, j) = gf_sub(m(i, j), gf_mul(f, m(rank, j), q_), q_);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::size_t> keep(rank);
  std::iota(keep.begin(), keep.end(), 0);
  return {m.select_rows(keep), std::move(pivots)};
}

std::size_t Matrix::rank() const { return row_echelon().pivots.size(); }

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw MatrixError("inverse of a non-square matrix");
  Matrix aug(q_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  std::vector<std::size_t> order(cols_);
  std::iota(order.begin(), order.end(), 0);
  auto ech = aug.row_echelon(order);
  if (ech.pivots.size() != rows_) return std::nullopt;
  std::vector<std::size_t> right(cols_);
  std::iota(right.begin(), right.end(), cols_);
  return ech.reduced.select_columns(right);
}

Matrix Matrix::null_space() const {
  auto ech = row_echelon();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  Matrix out(q_, 0, cols_);
  Vector v(cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      v[ech.pivots[i]] = gf_sub(0, ech.reduced(i, f), q_);
    }
    out.append_row(v);
  }
  return out;
}

bool Matrix::row_space_contains(const Matrix& other) const {
  if (cols_ != other.cols_ || q_ != other.q_) return false;
  Matrix stacked(*this);
  for (std::size_t i = 0; i < other.rows_; ++i) stacked.append_row(other.row(i));
  return stacked.rank() == rank();
}

bool Matrix::row_space_equals(const Matrix& other) const {
  return row_space_contains(other) && other.row_space_contains(*this);
}

Vector vector_times_matrix(std::span<const std::uint8_t> x, const Matrix& m) {
  if (x.size() != m.rows()) throw MatrixError("vector/matrix dimension mismatch");
  const std::uint32_t q = m.field_size();
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const auto r = m.row(i);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += std::uint64_t{x[i]} * r[j];
  }
  Vector out(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j) out[j] = static_cast<std::uint8_t>(acc[j] % q);
  return out;
}

Vector matrix_times_vector(const Matrix& m, std::span<const std::uint8_t> v) {
  if (v.size() != m.cols()) throw MatrixError("matrix/vector dimension mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), v, m.field_size());
  return out;
}

std::uint8_t dot(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, std::uint32_t q) {
  if (a.size() != b.size()) throw MatrixError("inner product of vectors of different length");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint32_t{a[i]} * b[i];
  return static_cast<std::uint8_t>(acc % q);
}

std::size_t hamming_weight(std::span<const std::uint8_t> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
}

}  // namespace cyclicpir
