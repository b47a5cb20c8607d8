#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclicpir {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t value);

/// Polynomial over the prime field GF(p), coefficients lowest degree first.
/// The coefficient list is always trimmed so the leading coefficient is
/// nonzero; the zero polynomial has an empty list.
class BasePolynomial {
 public:
  BasePolynomial() = default;
  BasePolynomial(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static BasePolynomial monomial(std::uint32_t p, std::size_t degree,
                                 std::uint32_t coeff = 1);
  /// x^n - 1 over GF(p).
  static BasePolynomial x_pow_minus_one(std::uint32_t p, std::size_t n);

  std::uint32_t characteristic() const { return p_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::uint32_t coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  BasePolynomial operator+(const BasePolynomial& other) const;
  BasePolynomial operator-(const BasePolynomial& other) const;
  BasePolynomial operator*(const BasePolynomial& other) const;
  bool operator==(const BasePolynomial& other) const = default;

  struct DivMod;
  DivMod divmod(const BasePolynomial& divisor) const;
  bool divides(const BasePolynomial& other) const;

  /// "x^3 + x + 1" style rendering; coefficients > 1 are printed as "2*x^2".
  std::string to_string() const;

 private:
  void check_same_field(const BasePolynomial& other) const;
  void trim();

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> coeffs_;
};

struct BasePolynomial::DivMod {
  BasePolynomial quotient;
  BasePolynomial remainder;
};

/// GF(p^s) backed by discrete-log tables. Elements are passed around as raw
/// codes: kZero, or a log index in [0, p^s - 2]. Immutable after build(), so a
/// single instance can be shared by any number of threads.
class FieldSpec {
 public:
  static constexpr std::uint32_t kZero = 0xFFFFFFFFu;
  static constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

  /// Uses the built-in primitive polynomial for p = 2, s <= 16, otherwise
  /// searches for the lexicographically first primitive polynomial.
  static std::shared_ptr<const FieldSpec> build(std::uint32_t p, std::uint32_t s);
  static std::shared_ptr<const FieldSpec> build(std::uint32_t p, std::uint32_t s,
                                                const BasePolynomial& primitive);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t extension_degree() const { return s_; }
  std::uint32_t size() const { return size_; }
  /// Order of the multiplicative group, p^s - 1.
  std::uint32_t order() const { return size_ - 1; }
  const BasePolynomial& primitive_polynomial() const { return primitive_; }

  /// Vector (polynomial-basis) form of alpha^i, encoded base p.
  std::uint32_t antilog(std::uint32_t i) const { return antilog_[i]; }
  /// Inverse of antilog; vector must be nonzero.
  std::uint32_t log(std::uint32_t vector) const { return log_[vector]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t negate(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, negate(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

  /// Code of the prime-field element c (0 <= c < p).
  std::uint32_t from_prime(std::uint32_t c) const;
  /// Inverse of from_prime; throws if the element is not in GF(p).
  std::uint32_t to_prime(std::uint32_t code) const;
  bool in_prime_field(std::uint32_t code) const;

 private:
  FieldSpec() = default;
  std::uint32_t add_vectors(std::uint32_t x, std::uint32_t y) const;

  std::uint32_t p_ = 2;
  std::uint32_t s_ = 1;
  std::uint32_t size_ = 2;
  BasePolynomial primitive_;
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> prime_codes_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Built-in primitive polynomial for GF(2^s), 1 <= s <= 16.
BasePolynomial builtin_primitive_polynomial(std::uint32_t s);

/// Smallest s with n | p^s - 1. Requires gcd(n, p) = 1.
std::uint32_t splitting_degree(std::uint32_t p, std::uint32_t n);

/// Shared, lazily built field containing the n-th roots of unity over GF(p).
FieldPtr field_for_length(std::uint32_t p, std::uint32_t n);

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint32_t code);

  static FieldElement zero(FieldPtr field) { return {std::move(field), FieldSpec::kZero}; }
  static FieldElement one(FieldPtr field) { return {std::move(field), 0}; }
  static FieldElement alpha_power(FieldPtr field, std::int64_t i);
  static FieldElement from_vector(FieldPtr field, std::uint32_t vector);

  const FieldPtr& field() const { return field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == FieldSpec::kZero; }
  std::uint32_t to_vector() const;

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& b) const;

 private:
  void check_same_field(const FieldElement& b) const;

  FieldPtr field_;
  std::uint32_t code_;
};

/// prod_{j in coset} (x - beta^j) with beta = alpha^((p^s-1)/n). The coset
/// must be closed under multiplication by p modulo n.
BasePolynomial minimal_polynomial(std::span<const std::uint32_t> coset,
                                  const FieldSpec& field, std::uint32_t n);

}  // namespace cyclicpir
