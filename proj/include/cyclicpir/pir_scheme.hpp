#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclicpir/cyclic_code.hpp"
#include "cyclicpir/distance.hpp"

namespace cyclicpir {

class SchemeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// u/n kept unreduced for display ("6/63"); comparisons use the exact value.
struct Rate {
  std::int64_t num = 0;
  std::int64_t den = 1;

  boost::rational<std::int64_t> value() const { return {num, den}; }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
  static Rate parse(const std::string& text);

  bool operator==(const Rate& o) const { return value() == o.value(); }
  std::strong_ordering operator<=>(const Rate& o) const {
    if (value() < o.value()) return std::strong_ordering::less;
    if (o.value() < value()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

struct CodeSummary {
  std::string spec;  // canonical code-spec text
  std::uint32_t n = 0;
  std::size_t k = 0;
  DistanceReport distance;

  bool operator==(const CodeSummary&) const = default;
};

struct PirParameters {
  std::uint32_t n = 0;
  CodeSummary storage;       // C
  CodeSummary retrieval;     // D
  CodeSummary retrieval_dual;  // D^perp
  CodeSummary star;          // C * D
  CodeSummary star_dual;     // (C * D)^perp
  /// t = d(D^perp) - 1 as an interval; lo == hi when exact.
  std::uint32_t privacy_lo = 0;
  std::uint32_t privacy_hi = 0;
  bool privacy_exact = false;
  std::size_t retrieved_per_round = 0;
  Rate rate;

  bool operator==(const PirParameters&) const = default;
};

struct SchemeOptions {
  DistanceOptions distance;
  /// When false only d(D^perp) is computed; the other reports stay empty.
  bool all_distances = true;
};

/// Parameters of the star-product PIR scheme for storage C and retrieval D.
PirParameters evaluate_scheme(const CyclicCodeSpec& c, const CyclicCodeSpec& d,
                              const SchemeOptions& options = {});

CodeSummary summarize(const CyclicCodeSpec& code, const DistanceOptions& options);
CodeSummary summarize_dimensions(const CyclicCodeSpec& code);
/// Privacy interval implied by a distance report for D^perp.
void set_privacy(PirParameters& p, const DistanceReport& dual_distance);

struct RankedScheme {
  PirParameters params;
  std::size_t input_index = 0;
  bool pareto = false;
  bool bound_only = false;
};

/// Sorted by (proven privacy desc, rate desc), stable; Pareto marks rows no
/// other row provably dominates.
std::vector<RankedScheme> compare_schemes(const std::vector<PirParameters>& schemes);
/// Convenience overload evaluating each pair first.
std::vector<RankedScheme> compare_schemes(const std::vector<std::pair<CyclicCodeSpec, CyclicCodeSpec>>& pairs,
                                          const SchemeOptions& options = {});

/// a dominates b when a is provably at least as good on both axes and
/// provably better on one.
bool dominates(const PirParameters& a, const PirParameters& b);

}  // namespace cyclicpir
