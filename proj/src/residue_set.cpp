#include "cyclicpir/residue_set.hpp"

#include <bit>
#include <stdexcept>

namespace cyclicpir {

namespace {

std::size_t word_count(std::uint32_t n) { return (n + 63) / 64; }

// out = in << s (multiword, little-endian words), dropping bits past out.size()*64.
void shift_left(std::span<const std::uint64_t> in, std::uint32_t s, std::span<std::uint64_t> out) {
  const std::size_t ws = s / 64, bs = s % 64;
  for (std::size_t i = out.size(); i-- > 0;) {
    std::uint64_t v = 0;
    if (i >= ws) {
      v = in[i - ws] << bs;
      if (bs && i >= ws + 1) v |= in[i - ws - 1] >> (64 - bs);
    }
    out[i] = v;
  }
}

void shift_right(std::span<const std::uint64_t> in, std::uint32_t s, std::span<std::uint64_t> out) {
  const std::size_t ws = s / 64, bs = s % 64;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t v = 0;
    if (i + ws < in.size()) {
      v = in[i + ws] >> bs;
      if (bs && i + ws + 1 < in.size()) v |= in[i + ws + 1] << (64 - bs);
    }
    out[i] = v;
  }
}

}  // namespace

ResidueSet::ResidueSet(std::uint32_t n) : n_(n), words_(word_count(n), 0) {}

ResidueSet::ResidueSet(std::uint32_t n, std::span<const std::uint32_t> elements)
    : ResidueSet(n) {
  for (auto e : elements) insert(e % n);
}

ResidueSet::ResidueSet(std::uint32_t n, std::initializer_list<std::uint32_t> elements)
    : ResidueSet(n) {
  for (auto e : elements) insert(e % n);
}

ResidueSet ResidueSet::full(std::uint32_t n) {
  ResidueSet r(n);
  for (auto& w : r.words_) w = ~std::uint64_t{0};
  r.clear_tail();
  return r;
}

void ResidueSet::clear_tail() {
  if (n_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
}

void ResidueSet::check_modulus(const ResidueSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("residue sets with different moduli");
}

std::size_t ResidueSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<std::uint32_t> ResidueSet::elements() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

ResidueSet ResidueSet::complement() const {
  ResidueSet r(*this);
  for (auto& w : r.words_) w = ~w;
  r.clear_tail();
  return r;
}

ResidueSet ResidueSet::negated() const {
  ResidueSet r(n_);
  for (auto e : elements()) r.insert(e == 0 ? 0 : n_ - e);
  return r;
}

ResidueSet ResidueSet::scaled(std::uint32_t a) const {
  ResidueSet r(n_);
  for (auto e : elements()) r.insert(static_cast<std::uint32_t>(std::uint64_t{e} * a % n_));
  return r;
}

ResidueSet ResidueSet::rotated(std::uint32_t s) const {
  if (n_ == 0) return *this;
  s %= n_;
  if (s == 0) return *this;
  ResidueSet r(n_);
  std::vector<std::uint64_t> tmp(words_.size());
  shift_left(words_, s, r.words_);
  r.clear_tail();
  shift_right(words_, n_ - s, tmp);
  for (std::size_t i = 0; i < tmp.size(); ++i) r.words_[i] |= tmp[i];
  return r;
}

ResidueSet ResidueSet::minkowski_sum(const ResidueSet& other) const {
  check_modulus(other);
  ResidueSet r(n_);
  for (auto e : elements()) r |= other.rotated(e);
  return r;
}

std::uint32_t ResidueSet::longest_cyclic_run() const {
  if (n_ == 0) return 0;
  // Scan two periods so runs crossing n-1 -> 0 are seen whole.
  std::uint32_t best = 0, run = 0;
  for (std::uint32_t i = 0; i < 2 * n_; ++i) {
    if (contains(i % n_)) {
      if (++run > best) best = run;
    } else {
      run = 0;
    }
  }
  return best > n_ ? n_ : best;
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
  check_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

ResidueSet& ResidueSet::operator|=(const ResidueSet& other) {
  check_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ResidueSet& ResidueSet::operator&=(const ResidueSet& other) {
  check_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ResidueSet ResidueSet::operator|(const ResidueSet& other) const {
  ResidueSet r(*this);
  r |= other;
  return r;
}

ResidueSet ResidueSet::operator&(const ResidueSet& other) const {
  ResidueSet r(*this);
  r &= other;
  return r;
}

}  // namespace cyclicpir
