#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cyclicpir {

/// Subset of Z/nZ stored as a bitmask of n bits.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(std::uint32_t n);
  ResidueSet(std::uint32_t n, std::span<const std::uint32_t> elements);
  ResidueSet(std::uint32_t n, std::initializer_list<std::uint32_t> elements);

  static ResidueSet full(std::uint32_t n);

  std::uint32_t modulus() const { return n_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(std::uint32_t r) const {
    return (words_[r >> 6] >> (r & 63)) & 1u;
  }
  void insert(std::uint32_t r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }
  void erase(std::uint32_t r) { words_[r >> 6] &= ~(std::uint64_t{1} << (r & 63)); }

  /// Ascending element list.
  std::vector<std::uint32_t> elements() const;

  ResidueSet complement() const;
  /// {-i mod n : i in this}
  ResidueSet negated() const;
  /// {a*i mod n : i in this}
  ResidueSet scaled(std::uint32_t a) const;
  /// {i + s mod n : i in this}, computed word-parallel.
  ResidueSet rotated(std::uint32_t s) const;
  /// {a + b mod n : a in this, b in other}
  ResidueSet minkowski_sum(const ResidueSet& other) const;

  /// Length of the longest run of cyclically consecutive members (n if full).
  std::uint32_t longest_cyclic_run() const;

  bool is_subset_of(const ResidueSet& other) const;

  ResidueSet& operator|=(const ResidueSet& other);
  ResidueSet& operator&=(const ResidueSet& other);
  ResidueSet operator|(const ResidueSet& other) const;
  ResidueSet operator&(const ResidueSet& other) const;
  bool operator==(const ResidueSet& other) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  void check_modulus(const ResidueSet& other) const;
  void clear_tail();

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cyclicpir
