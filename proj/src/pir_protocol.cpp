#include "cyclicpir/pir_protocol.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cyclicpir {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t CounterRng::next() {
  return splitmix64(splitmix64(seed_ ^ splitmix64(stream_)) + counter_++);
}

std::uint8_t CounterRng::uniform(std::uint32_t q) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % q);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return static_cast<std::uint8_t>(v % q);
}

Database Database::zero(std::uint32_t q, std::size_t files, std::size_t rows_per_file, std::size_t k) {
  if (files == 0 || rows_per_file == 0 || k == 0) throw ProtocolError("database dimensions must be positive");
  return {q, files, rows_per_file, Matrix(q, files * rows_per_file, k)};
}

Database Database::random(std::uint32_t q, std::size_t files, std::size_t rows_per_file, std::size_t k,
                          std::uint64_t seed) {
  auto db = zero(q, files, rows_per_file, k);
  CounterRng rng(seed, 0xDA7Aull);
  for (std::size_t i = 0; i < db.a.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) db.a(i, j) = rng.uniform(q);
  return db;
}

std::size_t Database::global_row(std::size_t file, std::size_t row) const {
  if (file >= files || row >= rows_per_file) throw ProtocolError("file or row index out of range");
  return file * rows_per_file + row;
}

Matrix Database::file(std::size_t index) const {
  std::vector<std::size_t> rows(rows_per_file);
  std::iota(rows.begin(), rows.end(), global_row(index, 0));
  return a.select_rows(rows);
}

Vector StorageState::column(std::size_t server) const {
  Vector v(y.rows());
  for (std::size_t i = 0; i < y.rows(); ++i) v[i] = y(i, server);
  return v;
}

StorageState encode_storage(const Database& db, const CyclicCodeSpec& c) {
  if (db.q != c.q()) throw ProtocolError("database alphabet differs from the storage code field");
  if (db.a.cols() != c.dimension()) {
    throw ProtocolError("database rows have " + std::to_string(db.a.cols()) + " symbols but dim C = " +
                        std::to_string(c.dimension()));
  }
  return {db.a * generator_matrix(c)};
}

RoundPlan plan_rounds(const CyclicCodeSpec& c, const CyclicCodeSpec& d) {
  if (c.n() != d.n() || c.q() != d.q()) throw ProtocolError("codes differ in length or field");
  if (c.dimension() == 0) throw ProtocolError("storage code is the zero code");
  const auto star = star_product(c, d);
  if (star.dimension() == star.n()) throw ProtocolError("star product fills the space: unusable scheme");
  const auto star_dual = dual_code(star);

  RoundPlan plan;
  plan.q = c.q();
  plan.n = c.n();
  plan.u = star_dual.dimension();
  if (plan.u == 0) throw ProtocolError("dim((C*D)^perp) = 0: unusable scheme");
  plan.g_c = generator_matrix(c);
  plan.g_d = d.dimension() ? generator_matrix(d) : Matrix(c.q(), 0, c.n());
  plan.h = generator_matrix(star_dual);

  const auto s0 = plan.h.row_echelon().pivots;
  const std::size_t n = plan.n;
  std::vector<bool> covered(n, false);
  std::size_t remaining = n;
  auto shifted = [&](std::size_t by) {
    std::vector<std::size_t> s;
    for (auto x : s0) s.push_back((x + by) % n);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::size_t shift = 0;
  while (remaining > 0) {
    const auto s = shifted(shift);
    for (auto x : s) {
      if (!covered[x]) {
        covered[x] = true;
        --remaining;
      }
    }
    plan.schedule.push_back(s);
    if (remaining == 0) break;
    // next shift: the one covering the most new coordinates, smallest on ties
    std::size_t best_gain = 0;
    for (std::size_t cand = 1; cand < n; ++cand) {
      std::size_t gain = 0;
      for (auto x : s0) gain += !covered[(x + cand) % n];
      if (gain > best_gain) {
        best_gain = gain;
        shift = cand;
      }
    }
  }
  return plan;
}

std::vector<Query> make_queries(const RoundPlan& plan, std::size_t total_rows, std::size_t target_row,
                                const std::vector<std::size_t>& s, const Matrix& messages) {
  if (target_row >= total_rows) throw ProtocolError("target row out of range");
  if (messages.rows() != total_rows || messages.cols() != plan.g_d.rows()) {
    throw ProtocolError("randomness matrix must be (rows) x dim(D)");
  }
  std::vector<Query> queries(plan.n);
  for (std::size_t j = 0; j < plan.n; ++j) queries[j] = {j, Vector(total_rows, 0)};
  if (plan.g_d.rows() > 0) {
    const Matrix words = messages * plan.g_d;  // row m is d_m
    for (std::size_t m = 0; m < total_rows; ++m)
      for (std::size_t j = 0; j < plan.n; ++j) queries[j].vector[m] = words(m, j);
  }
  for (auto j : s) {
    auto& v = queries[j].vector[target_row];
    v = gf_add(v, 1, plan.q);
  }
  return queries;
}

std::vector<Query> make_queries(const RoundPlan& plan, std::size_t total_rows, std::size_t target_row,
                                const std::vector<std::size_t>& s, CounterRng& rng) {
  Matrix messages(plan.q, total_rows, plan.g_d.rows());
  for (std::size_t m = 0; m < total_rows; ++m)
    for (std::size_t i = 0; i < plan.g_d.rows(); ++i) messages(m, i) = rng.uniform(plan.q);
  return make_queries(plan, total_rows, target_row, s, messages);
}

std::uint8_t server_respond(std::span<const std::uint8_t> query, std::span<const std::uint8_t> column,
                            std::uint32_t q) {
  if (query.size() != column.size()) throw ProtocolError("query length differs from stored column height");
  return dot(query, column, q);
}

ResponseVector collect_responses(const std::vector<Query>& queries, const StorageState& storage) {
  ResponseVector out{Vector(queries.size())};
  for (const auto& query : queries) {
    out.r[query.server] = server_respond(query.vector, storage.column(query.server), storage.y.field_size());
  }
  return out;
}

Vector reconstruct(const ResponseVector& responses, const Matrix& h, const std::vector<std::size_t>& s) {
  if (s.empty()) return {};
  if (s.size() != h.rows()) throw ProtocolError("embedding set size differs from dim((C*D)^perp)");
  const auto restricted = h.select_columns(s).inverse();
  if (!restricted) throw std::logic_error("embedding set is not an information set of (C*D)^perp");
  const Vector syndrome = matrix_times_vector(h, responses.r);
  return matrix_times_vector(*restricted, syndrome);
}

bool decomposition_holds(const ResponseVector& responses, const Matrix& h, std::span<const std::uint8_t> target,
                         const std::vector<std::size_t>& s) {
  const std::uint32_t q = h.field_size();
  Vector diff = responses.r;
  for (auto j : s) diff[j] = gf_sub(diff[j], target[j], q);
  const Vector syndrome = matrix_times_vector(h, diff);
  return std::all_of(syndrome.begin(), syndrome.end(), [](std::uint8_t v) { return v == 0; });
}

std::uint64_t queries_digest(const std::vector<Query>& queries) {
  std::uint64_t hash = 0xCBF29CE484222325ull;
  auto mix = [&](std::uint64_t byte) {
    hash ^= byte;
    hash *= 0x100000001B3ull;
  };
  for (const auto& q : queries) {
    for (int b = 0; b < 4; ++b) mix((q.server >> (8 * b)) & 0xFF);
    for (auto v : q.vector) mix(v);
  }
  return hash;
}

RetrievalResult run_full_retrieval(const Database& db, const CyclicCodeSpec& c, const CyclicCodeSpec& d,
                                   std::size_t file_index, std::uint64_t seed, const RetrievalOptions& options) {
  const RoundPlan plan = plan_rounds(c, d);
  const StorageState storage = encode_storage(db, c);
  const std::size_t k = c.dimension(), n = plan.n, total = db.total_rows();

  RetrievalResult result;
  result.file = Matrix(db.q, 0, k);
  result.nominal_rate = Rate{static_cast<std::int64_t>(plan.u), static_cast<std::int64_t>(n)};
  std::size_t round = 0;

  for (std::size_t row = 0; row < db.rows_per_file; ++row) {
    const std::size_t target = db.global_row(file_index, row);
    std::vector<std::optional<std::uint8_t>> recovered(n);
    std::optional<Vector> message;
    for (std::size_t step = 0; step < plan.schedule.size() && !message; ++step, ++round) {
      const auto& s = plan.schedule[step];
      CounterRng rng(seed, round);
      const auto queries = make_queries(plan, total, target, s, rng);
      const auto responses = collect_responses(queries, storage);
      const Vector values = reconstruct(responses, plan.h, s);
      if (options.audit) {
        const auto truth = storage.y.row(target);
        if (!decomposition_holds(responses, plan.h, truth, s)) result.decomposition_ok = false;
      }
      TranscriptEntry entry{round, target, s, queries_digest(queries), responses.r, {}};
      for (std::size_t i = 0; i < s.size(); ++i) {
        recovered[s[i]] = values[i];
        entry.recovered.emplace_back(s[i], values[i]);
      }
      if (options.transcript) options.transcript(entry);

      std::vector<std::size_t> known;
      for (std::size_t j = 0; j < n; ++j)
        if (recovered[j]) known.push_back(j);
      const auto sub = plan.g_c.select_columns(known);
      // pivot columns of G_C restricted to the recovered coordinates
      const auto ech = sub.row_echelon();
      if (ech.pivots.size() < k) continue;
      std::vector<std::size_t> info;
      Vector y_info;
      for (auto p : ech.pivots) {
        info.push_back(known[p]);
        y_info.push_back(*recovered[known[p]]);
      }
      const auto inv = plan.g_c.select_columns(info).inverse();
      if (!inv) throw std::logic_error("information set of C is singular");
      message = vector_times_matrix(y_info, *inv);
    }
    if (!message) throw std::logic_error("schedule exhausted without covering an information set of C");
    result.file.append_row(*message);
  }
  result.rounds = round;
  result.downloaded = round * n;
  result.uploaded = round * n * total;
  result.effective_rate = boost::rational<std::int64_t>(
      static_cast<std::int64_t>(db.rows_per_file * k), static_cast<std::int64_t>(result.downloaded));
  return result;
}

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t t) {
  if (t > n) return 0;
  t = std::min(t, n - t);
  long double v = 1;
  std::uint64_t exact = 1;
  for (std::uint64_t i = 1; i <= t; ++i) {
    v = v * static_cast<long double>(n - t + i) / static_cast<long double>(i);
    if (v > 1e15L) return ~std::uint64_t{0};
    exact = exact * (n - t + i) / i;
  }
  return exact;
}

// Rank test on selected columns; binary codes use packed XOR elimination.
class ColumnRank {
 public:
  explicit ColumnRank(const Matrix& g) : g_(g), cols_(g.transpose()), words_((g.rows() + 63) / 64) {
    if (g.field_size() == 2) {
      packed_.assign(g.cols() * words_, 0);
      for (std::size_t j = 0; j < g.cols(); ++j)
        for (std::size_t i = 0; i < g.rows(); ++i)
          if (g(i, j)) packed_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }

  bool full_rank(const std::vector<std::size_t>& subset) {
    if (subset.size() > g_.rows()) return false;
    if (g_.field_size() != 2) return cols_.select_rows(subset).rank() == subset.size();
    basis_.clear();
    pivots_.clear();
    std::vector<std::uint64_t> v(words_);
    for (auto j : subset) {
      std::copy_n(packed_.begin() + static_cast<std::ptrdiff_t>(j * words_), words_, v.begin());
      for (std::size_t b = 0; b < pivots_.size(); ++b) {
        const std::size_t p = pivots_[b];
        if ((v[p / 64] >> (p % 64)) & 1u)
          for (std::size_t w = 0; w < words_; ++w) v[w] ^= basis_[b * words_ + w];
      }
      std::size_t p = 0;
      while (p < words_ && v[p] == 0) ++p;
      if (p == words_) return false;
      pivots_.push_back(p * 64 + static_cast<std::size_t>(std::countr_zero(v[p])));
      basis_.insert(basis_.end(), v.begin(), v.end());
    }
    return true;
  }

 private:
  const Matrix& g_;
  Matrix cols_;
  std::size_t words_;
  std::vector<std::uint64_t> packed_;
  std::vector<std::uint64_t> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

PrivacyVerdict privacy_check(const Matrix& g_d, std::size_t t, PrivacyMode mode, std::uint64_t trials,
                             std::uint64_t seed) {
  const std::size_t n = g_d.cols();
  PrivacyVerdict verdict;
  if (t > n) throw ProtocolError("collusion size t exceeds the number of servers");
  const std::uint64_t subsets = binomial_saturating(n, t);
  if (mode == PrivacyMode::kAuto) {
    mode = subsets <= kExhaustivePrivacyLimit ? PrivacyMode::kExhaustive : PrivacyMode::kSampled;
  }
  verdict.mode = mode;
  ColumnRank ranker(g_d);
  std::vector<std::size_t> subset(t);

  if (mode == PrivacyMode::kExhaustive) {
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      ++verdict.subsets_checked;
      if (!ranker.full_rank(subset)) {
        verdict.pass = false;
        verdict.witness = subset;
        return verdict;
      }
      // next combination in lexicographic order
      std::size_t i = t;
      while (i > 0 && subset[i - 1] == n - t + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < t; ++j) subset[j] = subset[j - 1] + 1;
    }
    return verdict;
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> pool(n);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < t; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    subset.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(t));
    std::sort(subset.begin(), subset.end());
    ++verdict.subsets_checked;
    if (!ranker.full_rank(subset)) {
      verdict.pass = false;
      verdict.witness = subset;
      return verdict;
    }
  }
  return verdict;
}

PrivacyVerdict privacy_check(const CyclicCodeSpec& d, std::size_t t, PrivacyMode mode, std::uint64_t trials,
                             std::uint64_t seed) {
  const Matrix g = d.dimension() ? generator_matrix(d) : Matrix(d.q(), 0, d.n());
  return privacy_check(g, t, mode, trials, seed);
}

std::string to_string(PrivacyMode mode) {
  switch (mode) {
    case PrivacyMode::kAuto: return "auto";
    case PrivacyMode::kExhaustive: return "exhaustive";
    case PrivacyMode::kSampled: return "sampled";
  }
  return "auto";
}

}  // namespace cyclicpir
