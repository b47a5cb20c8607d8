#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclicpir/finite_field.hpp"
#include "cyclicpir/matrix.hpp"
#include "cyclicpir/residue_set.hpp"

namespace cyclicpir {

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cyclic code of length n over GF(q), gcd(n, q) = 1, described by its
/// generating set I (the exponents i with g(beta^i) != 0). I is always a
/// union of q-cyclotomic cosets, so dim = |I| = n - |J|.
class CyclicCodeSpec {
 public:
  static CyclicCodeSpec from_generating_set(std::uint32_t q, ResidueSet generating);
  static CyclicCodeSpec from_defining_set(std::uint32_t q, const ResidueSet& defining);

  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return generating_.modulus(); }
  std::size_t dimension() const { return generating_.size(); }
  const ResidueSet& generating_set() const { return generating_; }
  ResidueSet defining_set() const { return generating_.complement(); }

  /// Minimal representatives of the cosets making up I, ascending.
  std::vector<std::uint32_t> coset_labels() const;
  /// "U{0,31}" style label; "U{}" for the zero code.
  std::string label() const;

  bool operator==(const CyclicCodeSpec& other) const = default;

 private:
  CyclicCodeSpec(std::uint32_t q, ResidueSet generating)
      : q_(q), generating_(std::move(generating)) {}

  std::uint32_t q_ = 2;
  ResidueSet generating_;
};

/// Orbit of s under i -> q*i mod n, sorted ascending.
std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t s, std::uint32_t n, std::uint32_t q);
/// Coset minima in ascending order; every residue lies in exactly one coset.
std::vector<std::uint32_t> coset_representatives(std::uint32_t n, std::uint32_t q);
/// Canonical (minimal) representative of the coset containing s.
std::uint32_t coset_leader(std::uint32_t s, std::uint32_t n, std::uint32_t q);

/// Union of the cosets of the given residues (duplicates collapse).
CyclicCodeSpec code_from_cosets(std::span<const std::uint32_t> reps, std::uint32_t n,
                                std::uint32_t q);
/// Generating set Z/nZ \ (-I), i.e. -J.
CyclicCodeSpec dual_code(const CyclicCodeSpec& c);
/// Generating set I1 + I2 (Minkowski sum).
CyclicCodeSpec star_product(const CyclicCodeSpec& c1, const CyclicCodeSpec& c2);
/// 1 + longest cyclic run of consecutive residues inside J. Returns 1 for an
/// empty J and n + 1 for the zero code.
std::uint32_t bch_bound(const CyclicCodeSpec& c);

/// prod over cosets in J of their minimal polynomials.
BasePolynomial generator_polynomial(const CyclicCodeSpec& c, const FieldSpec& field);
BasePolynomial generator_polynomial(const CyclicCodeSpec& c);

/// k x n shift basis: rows g, xg, ..., x^{k-1} g.
Matrix generator_matrix(const CyclicCodeSpec& c, const FieldSpec& field);
Matrix generator_matrix(const CyclicCodeSpec& c);

// ---------------------------------------------------------------------------
// Text grammar: "q=<int> n=<int> cosets=<r1,r2,...>"

class SpecParseError : public std::invalid_argument {
 public:
  SpecParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct CodeSpecText {
  std::uint32_t q = 2;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> cosets;
};

CodeSpecText parse_code_spec_text(std::string_view text);
/// Parses and builds the code; with `defining` the cosets describe J instead of I.
CyclicCodeSpec parse_code_spec(std::string_view text, bool defining = false);
/// Canonical form with minimal coset representatives ascending.
std::string format_code_spec(const CyclicCodeSpec& c);

}  // namespace cyclicpir
