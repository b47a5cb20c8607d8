#pragma once

// Bit-packed binary words for the enumeration and search kernels.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclicpir/matrix.hpp"

namespace cyclicpir::detail {

template <std::size_t W>
struct PackedWord {
  std::array<std::uint64_t, W> w{};

  PackedWord& operator^=(const PackedWord& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] ^= o.w[i];
    return *this;
  }
  friend PackedWord operator^(PackedWord a, const PackedWord& b) { return a ^= b; }

  unsigned weight() const {
    unsigned c = 0;
    for (std::size_t i = 0; i < W; ++i) c += static_cast<unsigned>(std::popcount(w[i]));
    return c;
  }
  bool test(std::size_t bit) const { return (w[bit >> 6] >> (bit & 63)) & 1u; }
  void flip(std::size_t bit) { w[bit >> 6] ^= std::uint64_t{1} << (bit & 63); }
};

template <std::size_t W>
std::vector<PackedWord<W>> pack_rows(const Matrix& m) {
  std::vector<PackedWord<W>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) & 1u) rows[i].flip(j);
  return rows;
}

template <std::size_t W>
Vector unpack(const PackedWord<W>& word, std::size_t n) {
  Vector v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = word.test(j) ? 1 : 0;
  return v;
}

/// Calls f.template operator()<W>() with the smallest supported W >= ceil(n/64).
template <typename F>
decltype(auto) dispatch_words(std::size_t n, F&& f) {
  const std::size_t words = (n + 63) / 64;
  if (words <= 1) return f.template operator()<1>();
  if (words <= 2) return f.template operator()<2>();
  if (words <= 4) return f.template operator()<4>();
  if (words <= 8) return f.template operator()<8>();
  if (words <= 16) return f.template operator()<16>();
  throw MatrixError("binary kernels support n <= 1024");
}

}  // namespace cyclicpir::detail
