#pragma once

#include <cstdint>
#include <stdexcept>

#include "cyclicpir/cyclic_code.hpp"
#include "cyclicpir/matrix.hpp"

namespace cyclicpir {

class RMError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint32_t kMaxRMVariables = 12;

/// Binary RM(r, m). Evaluation points are the integers 0 .. 2^m - 1 read as
/// bit vectors, so the point 0 is coordinate 0.
struct RMSpec {
  std::uint32_t r = 0;
  std::uint32_t m = 1;

  std::size_t length() const { return std::size_t{1} << m; }
  std::size_t dimension() const;
  std::size_t distance() const { return std::size_t{1} << (m - r); }
};

void validate(const RMSpec& spec);

/// Rows: evaluations of the multilinear monomials of degree <= r, ordered by
/// degree and then by variable mask. The constant monomial is row 0.
Matrix rm_generator_matrix(const RMSpec& spec);
/// [2^m - 1, k, 2^{m-r} - 1]; requires 1 <= r < m.
Matrix puncture_at_zero(const RMSpec& spec);
/// [2^m - 1, k - 1, 2^{m-r}]; requires k >= 2.
Matrix shorten_at_zero(const RMSpec& spec);

/// Cyclic code of length 2^m - 1 with generating set {i != 0 : w_2(i) <= c},
/// plus {0} when include_zero is set. With include_zero it is equivalent to
/// the punctured RM(c, m); without, to the shortened one.
CyclicCodeSpec punctured_rm_as_cyclic(std::uint32_t c, std::uint32_t m, bool include_zero = true);

/// Span of coordinate-wise products of RM(r1,m) and RM(r2,m) generators equals
/// the row space of RM(r1+r2, m). Requires r1 + r2 <= m <= 6.
bool rm_star_identity_check(std::uint32_t r1, std::uint32_t r2, std::uint32_t m);

}  // namespace cyclicpir
