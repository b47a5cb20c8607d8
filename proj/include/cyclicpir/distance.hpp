#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclicpir/cyclic_code.hpp"
#include "cyclicpir/matrix.hpp"

namespace cyclicpir {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kDeepBudget = std::uint64_t{1} << 29;
inline constexpr std::uint64_t kHardBudgetCap = std::uint64_t{1} << 30;
/// Distance of the zero code, and "nothing found" from the randomized search.
inline constexpr std::uint32_t kInfiniteDistance = std::numeric_limits<std::uint32_t>::max();

/// Thrown when q^k exceeds the enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A MacWilliams transform produced a negative or fractional count, which can
/// only happen if the input was not the distribution of a linear code.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class DistributionSource { kEnumeration, kMacWilliams, kPartial };

struct WeightDistribution {
  std::uint32_t n = 0;
  std::uint32_t q = 2;
  std::vector<BigInt> counts;  // A_0 .. A_n
  DistributionSource source = DistributionSource::kEnumeration;

  BigInt total() const;
  /// Smallest i > 0 with A_i != 0, or kInfiniteDistance for the zero code.
  std::uint32_t min_distance() const;
  bool operator==(const WeightDistribution& other) const { return n == other.n && q == other.q && counts == other.counts; }
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Exact weight census of the row space of `generator` by Gray-code traversal.
/// Dependent rows are reduced away first, so q^rank words are visited.
WeightDistribution weight_distribution_exhaustive(const Matrix& generator,
                                                  const EnumerationOptions& options = {});

/// Weight distribution of the dual of a code of dimension k with distribution w.
WeightDistribution macwilliams_transform(const WeightDistribution& w, std::size_t k, std::uint32_t q);

struct MinWeightResult {
  std::uint32_t weight = kInfiniteDistance;
  Vector codeword;

  bool operator==(const MinWeightResult&) const = default;
};

/// Lee-Brickell style search: random information set, then all information
/// patterns of weight <= 2. Deterministic for a fixed seed.
MinWeightResult random_minweight_search(const Matrix& generator, std::uint64_t iterations,
                                        std::uint64_t seed);

struct DistanceReport {
  bool exact = false;
  std::uint32_t lower = 1;
  std::uint32_t upper = kInfiniteDistance;
  std::string method;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::uint64_t enumerated = 0;

  bool operator==(const DistanceReport&) const = default;
};

struct DistanceOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::uint64_t search_iterations = 2000;
  unsigned threads = 0;
};

/// Strategy ladder: enumerate the code, else enumerate the dual and apply
/// MacWilliams, else BCH lower bound plus randomized upper bound.
DistanceReport min_distance(const CyclicCodeSpec& code, const DistanceOptions& options = {});
/// Same ladder for an arbitrary generator matrix; the fallback lower bound is 1.
DistanceReport min_distance(const Matrix& generator, const DistanceOptions& options = {});

/// q^e saturated at kHardBudgetCap + 1.
std::uint64_t saturating_power(std::uint32_t q, std::size_t e);

}  // namespace cyclicpir
