#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclicpir/cyclic_code.hpp"
#include "cyclicpir/distance.hpp"
#include "cyclicpir/pir_scheme.hpp"

namespace cyclicpir {

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SearchObjective { kMaxPrivacy, kMaxRate };

/// Per-candidate distance budget used by the search unless overridden.
inline constexpr std::uint64_t kSearchBudget = std::uint64_t{1} << 20;

struct SearchSpec {
  std::uint32_t n = 0;
  std::uint32_t q = 2;
  std::size_t max_c_cosets = 2;
  std::size_t max_d_cosets = 5;
  /// Coset leaders both codes are assembled from.
  std::vector<std::uint32_t> pool;
  /// When set, C is this union of cosets and only D is searched.
  std::optional<std::vector<std::uint32_t>> fixed_c;
  SearchObjective objective = SearchObjective::kMaxPrivacy;
  Rate min_rate{0, 1};
  std::uint32_t min_privacy = 0;
  /// Skip D unless -I_D has a cyclic run of at least min_privacy residues.
  bool bch_pruning = true;
  DistanceOptions distance{kSearchBudget, 1, 300, 0};
  double time_budget_seconds = 600;
  unsigned threads = 0;
};

struct SearchHit {
  std::vector<std::uint32_t> c_cosets;
  std::vector<std::uint32_t> d_cosets;
  PirParameters params;
  bool pareto = false;

  bool operator==(const SearchHit&) const = default;
};

struct SearchResult {
  std::vector<SearchHit> hits;  // ranked by the objective
  bool partial = false;         // time budget ran out; some candidates were not scored
  std::uint64_t pairs_considered = 0;
  std::uint64_t pruned_bch = 0;
  std::uint64_t pruned_rate = 0;
  std::uint64_t distance_evaluations = 0;
};

/// All coset leaders of Z/nZ, the widest possible pool.
std::vector<std::uint32_t> full_pool(std::uint32_t n, std::uint32_t q);

SearchResult search_pir_codes(const SearchSpec& spec);

/// Pareto marks under `dominates`, in O(N log N); same result as the pairwise rule.
std::vector<bool> pareto_marks(const std::vector<PirParameters>& schemes);

}  // namespace cyclicpir
