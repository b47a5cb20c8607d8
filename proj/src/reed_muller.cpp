#include "cyclicpir/reed_muller.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace cyclicpir {

namespace {

std::vector<std::uint32_t> monomials(const RMSpec& spec) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1u << spec.m); ++mask)
    if (static_cast<std::uint32_t>(std::popcount(mask)) <= spec.r) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  return masks;
}

Matrix drop_first_column(const Matrix& g) {
  std::vector<std::size_t> cols(g.cols() - 1);
  std::iota(cols.begin(), cols.end(), 1);
  return g.select_columns(cols);
}

}  // namespace

std::size_t RMSpec::dimension() const {
  std::size_t k = 0, binom = 1;
  for (std::uint32_t i = 0; i <= r; ++i) {
    k += binom;
    binom = binom * (m - i) / (i + 1);
  }
  return k;
}

void validate(const RMSpec& spec) {
  if (spec.m == 0 || spec.m > kMaxRMVariables) {
    throw RMError("RM size budget: need 1 <= m <= " + std::to_string(kMaxRMVariables));
  }
  if (spec.r > spec.m) throw RMError("RM order r must not exceed m");
}

Matrix rm_generator_matrix(const RMSpec& spec) {
  validate(spec);
  const auto masks = monomials(spec);
  const std::size_t n = spec.length();
  Matrix g(2, masks.size(), n);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t p = 0; p < n; ++p) g(i, p) = (p & masks[i]) == masks[i] ? 1 : 0;
  return g;
}

Matrix puncture_at_zero(const RMSpec& spec) {
  validate(spec);
  if (spec.r == 0) throw RMError("puncturing RM(0, m) is not supported (repetition code)");
  if (spec.r >= spec.m) throw RMError("puncturing RM(m, m) gives the whole space with d - 1 = 0");
  return drop_first_column(rm_generator_matrix(spec));
}

Matrix shorten_at_zero(const RMSpec& spec) {
  validate(spec);
  if (spec.dimension() < 2) throw RMError("shortening needs dimension >= 2");
  // Only the constant monomial is nonzero at the point 0.
  const Matrix g = rm_generator_matrix(spec);
  std::vector<std::size_t> rows(g.rows() - 1);
  std::iota(rows.begin(), rows.end(), 1);
  return drop_first_column(g.select_rows(rows));
}

CyclicCodeSpec punctured_rm_as_cyclic(std::uint32_t c, std::uint32_t m, bool include_zero) {
  if (m == 0 || m > 16) throw RMError("need 1 <= m <= 16");
  if (c == 0 || c > m) throw RMError("need 1 <= c <= m");
  const std::uint32_t n = (1u << m) - 1;
  ResidueSet generating(n);
  for (std::uint32_t i = 1; i < n; ++i)
    if (static_cast<std::uint32_t>(std::popcount(i)) <= c) generating.insert(i);
  if (include_zero) generating.insert(0);
  return CyclicCodeSpec::from_generating_set(2, std::move(generating));
}

bool rm_star_identity_check(std::uint32_t r1, std::uint32_t r2, std::uint32_t m) {
  if (m > 6 || r1 + r2 > m) throw RMError("star identity check needs r1 + r2 <= m <= 6");
  const Matrix g1 = rm_generator_matrix({r1, m});
  const Matrix g2 = rm_generator_matrix({r2, m});
  const std::size_t n = g1.cols();
  Matrix products(2, 0, n);
  Vector row(n);
  for (std::size_t i = 0; i < g1.rows(); ++i) {
    for (std::size_t j = 0; j < g2.rows(); ++j) {
      for (std::size_t p = 0; p < n; ++p) row[p] = g1(i, p) & g2(j, p);
      products.append_row(row);
    }
  }
  return products.row_space_equals(rm_generator_matrix({r1 + r2, m}));
}

}  // namespace cyclicpir
