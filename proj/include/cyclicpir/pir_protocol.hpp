#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclicpir/cyclic_code.hpp"
#include "cyclicpir/matrix.hpp"
#include "cyclicpir/pir_scheme.hpp"

namespace cyclicpir {

class ProtocolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Counter-based generator: the value at (seed, stream, counter) is a fixed
/// function, so any draw can be recomputed independently of the others.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}
  std::uint64_t next();
  /// Uniform value in [0, q) by rejection.
  std::uint8_t uniform(std::uint32_t q);
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

/// r files of rho rows, each row k symbols; stored as an (r*rho) x k matrix.
struct Database {
  std::uint32_t q = 2;
  std::size_t files = 0;
  std::size_t rows_per_file = 0;
  Matrix a;

  static Database zero(std::uint32_t q, std::size_t files, std::size_t rows_per_file, std::size_t k);
  static Database random(std::uint32_t q, std::size_t files, std::size_t rows_per_file, std::size_t k,
                         std::uint64_t seed);
  std::size_t total_rows() const { return files * rows_per_file; }
  std::size_t global_row(std::size_t file, std::size_t row) const;
  Matrix file(std::size_t index) const;
};

/// Y = A * G_C; server j holds column j.
struct StorageState {
  Matrix y;
  Vector column(std::size_t server) const;
};

StorageState encode_storage(const Database& db, const CyclicCodeSpec& c);

/// What one server sees: a vector of length r*rho.
struct Query {
  std::size_t server = 0;
  Vector vector;
};

struct ResponseVector {
  Vector r;
};

/// User-side data fixed for a (C, D) pair.
struct RoundPlan {
  std::uint32_t q = 2;
  std::uint32_t n = 0;
  std::size_t u = 0;  // dim((C*D)^perp)
  Matrix g_c;         // storage generator
  Matrix g_d;         // retrieval generator
  Matrix h;           // generator of (C*D)^perp
  std::vector<std::vector<std::size_t>> schedule;  // S_0, S_1, ... covering all coordinates
};

RoundPlan plan_rounds(const CyclicCodeSpec& c, const CyclicCodeSpec& d);

/// Queries for one round. `messages` has one row per stored row (length
/// dim D); d_m = messages.row(m) * G_D. The target global row gets +1 on S.
std::vector<Query> make_queries(const RoundPlan& plan, std::size_t total_rows, std::size_t target_row,
                                const std::vector<std::size_t>& s, const Matrix& messages);
/// Same, drawing the messages uniformly from `rng`.
std::vector<Query> make_queries(const RoundPlan& plan, std::size_t total_rows, std::size_t target_row,
                                const std::vector<std::size_t>& s, CounterRng& rng);

std::uint8_t server_respond(std::span<const std::uint8_t> query, std::span<const std::uint8_t> column,
                            std::uint32_t q);
ResponseVector collect_responses(const std::vector<Query>& queries, const StorageState& storage);

/// Values of the target row on S, in the order of S.
Vector reconstruct(const ResponseVector& responses, const Matrix& h, const std::vector<std::size_t>& s);

/// H * (r - y_target * 1_S) == 0, i.e. the response minus the masked row lies in C*D.
bool decomposition_holds(const ResponseVector& responses, const Matrix& h, std::span<const std::uint8_t> target,
                         const std::vector<std::size_t>& s);

struct TranscriptEntry {
  std::size_t round = 0;
  std::size_t target_row = 0;
  std::vector<std::size_t> s;
  std::uint64_t queries_digest = 0;
  Vector responses;
  std::vector<std::pair<std::size_t, std::uint8_t>> recovered;
};

std::uint64_t queries_digest(const std::vector<Query>& queries);

struct RetrievalOptions {
  /// Check the decomposition invariant against the stored rows in every round.
  bool audit = true;
  std::function<void(const TranscriptEntry&)> transcript;
};

struct RetrievalResult {
  Matrix file;
  std::size_t rounds = 0;
  std::size_t downloaded = 0;
  std::size_t uploaded = 0;
  Rate nominal_rate;
  boost::rational<std::int64_t> effective_rate;
  bool decomposition_ok = true;
};

RetrievalResult run_full_retrieval(const Database& db, const CyclicCodeSpec& c, const CyclicCodeSpec& d,
                                   std::size_t file_index, std::uint64_t seed,
                                   const RetrievalOptions& options = {});

enum class PrivacyMode { kAuto, kExhaustive, kSampled };

struct PrivacyVerdict {
  bool pass = true;
  PrivacyMode mode = PrivacyMode::kExhaustive;
  std::uint64_t subsets_checked = 0;
  std::optional<std::vector<std::size_t>> witness;
};

inline constexpr std::uint64_t kExhaustivePrivacyLimit = 1'000'000;

/// Every t-subset of columns of G_D has rank t. kAuto is exhaustive when
/// C(n, t) <= 10^6 and sampled otherwise.
PrivacyVerdict privacy_check(const CyclicCodeSpec& d, std::size_t t, PrivacyMode mode = PrivacyMode::kAuto,
                             std::uint64_t trials = 10'000, std::uint64_t seed = 1);
PrivacyVerdict privacy_check(const Matrix& g_d, std::size_t t, PrivacyMode mode = PrivacyMode::kAuto,
                             std::uint64_t trials = 10'000, std::uint64_t seed = 1);

std::string to_string(PrivacyMode mode);

}  // namespace cyclicpir
