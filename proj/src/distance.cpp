#include "cyclicpir/distance.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

#include "packed.hpp"

namespace cyclicpir {

using detail::PackedWord;

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& a : counts) t += a;
  return t;
}

std::uint32_t WeightDistribution::min_distance() const {
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != 0) return static_cast<std::uint32_t>(i);
  return kInfiniteDistance;
}

std::uint64_t saturating_power(std::uint32_t q, std::size_t e) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    v *= q;
    if (v > kHardBudgetCap) return kHardBudgetCap + 1;
  }
  return v;
}

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

Matrix independent_rows(const Matrix& g) { return g.row_echelon().reduced; }

template <std::size_t W>
std::vector<std::uint64_t> enumerate_binary(const Matrix& basis, unsigned threads) {
  const auto rows = detail::pack_rows<W>(basis);
  const std::size_t k = rows.size();
  const std::size_t n = basis.cols();

  // Top `prefix` message bits select a chunk; the rest are walked in Gray order.
  std::size_t prefix = 0;
  if (threads > 1 && k >= 16) {
    prefix = std::min<std::size_t>(k - 12, std::bit_width(threads) + 4);
  }
  const std::size_t low = k - prefix;
  const std::uint64_t chunks = std::uint64_t{1} << prefix;
  const std::uint64_t steps = std::uint64_t{1} << low;

  std::atomic<std::uint64_t> next{0};
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n + 1, 0));

  auto worker = [&](unsigned id) {
    auto& counts = partial[id];
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      PackedWord<W> word;
      for (std::size_t b = 0; b < prefix; ++b)
        if ((c >> b) & 1u) word ^= rows[low + b];
      ++counts[word.weight()];
      for (std::uint64_t i = 1; i < steps; ++i) {
        word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        ++counts[word.weight()];
      }
    }
  };

  if (threads == 1 || chunks == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  std::vector<std::uint64_t> total(n + 1, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i <= n; ++i) total[i] += p[i];
  return total;
}

std::vector<std::uint64_t> enumerate_general(const Matrix& basis) {
  const std::uint32_t q = basis.field_size();
  const std::size_t k = basis.rows(), n = basis.cols();
  std::vector<std::uint64_t> counts(n + 1, 0);
  Vector word(n, 0);
  std::vector<std::uint32_t> digits(k, 0);
  std::size_t weight = 0;
  ++counts[0];
  // Odometer: every digit increment (including the wrap q-1 -> 0) adds one
  // copy of that row, since q * row = 0.
  while (true) {
    std::size_t i = 0;
    for (; i < k; ++i) {
      const auto r = basis.row(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (r[j] == 0) continue;
        const bool was = word[j] != 0;
        word[j] = gf_add(word[j], r[j], q);
        weight = weight + (word[j] != 0) - was;
      }
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    if (i == k) break;
    ++counts[weight];
  }
  return counts;
}

}  // namespace

WeightDistribution weight_distribution_exhaustive(const Matrix& generator,
                                                  const EnumerationOptions& options) {
  const Matrix basis = independent_rows(generator);
  const std::uint32_t q = generator.field_size();
  const std::size_t n = generator.cols(), k = basis.rows();
  const std::uint64_t budget = std::min(options.budget, kHardBudgetCap);
  const std::uint64_t words = saturating_power(q, k);
  if (words > budget) {
    throw BudgetExceeded("q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                         " codewords exceed the enumeration budget " + std::to_string(budget) +
                         "; enumerate the dual (dimension " + std::to_string(n - k) +
                         ") and apply the MacWilliams transform instead");
  }
  std::vector<std::uint64_t> raw;
  if (k == 0) {
    raw.assign(n + 1, 0);
    raw[0] = 1;
  } else if (q == 2) {
    const unsigned threads = resolve_threads(options.threads);
    raw = detail::dispatch_words(n, [&]<std::size_t W>() { return enumerate_binary<W>(basis, threads); });
  } else {
    raw = enumerate_general(basis);
  }
  WeightDistribution w;
  w.n = static_cast<std::uint32_t>(n);
  w.q = q;
  w.source = DistributionSource::kEnumeration;
  w.counts.assign(raw.begin(), raw.end());
  return w;
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, std::size_t k, std::uint32_t q) {
  if (w.source == DistributionSource::kPartial) {
    throw std::invalid_argument("MacWilliams transform needs an exact distribution");
  }
  if (w.counts.size() != std::size_t{w.n} + 1) throw std::invalid_argument("distribution has wrong length");
  const BigInt qk = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
  if (w.total() != qk) {
    throw std::invalid_argument("distribution total is not q^k for k = " + std::to_string(k));
  }
  const long n = w.n;
  const long qq = q;
  std::vector<BigInt> acc(n + 1, 0);
  std::vector<BigInt> kraw(n + 1);
  for (long x = 0; x <= n; ++x) {
    if (w.counts[x] == 0) continue;
    // Krawtchouk K_j(x) for j = 0..n via the three-term recurrence in j.
    kraw[0] = 1;
    if (n >= 1) kraw[1] = BigInt((qq - 1) * n - qq * x);
    for (long j = 1; j < n; ++j) {
      BigInt next = BigInt((qq - 1) * (n - j) + j - qq * x) * kraw[j] -
                    BigInt((qq - 1) * (n - j + 1)) * kraw[j - 1];
      if (next % (j + 1) != 0) throw ConsistencyError("Krawtchouk recurrence left a remainder");
      kraw[j + 1] = next / (j + 1);
    }
    for (long j = 0; j <= n; ++j) acc[j] += w.counts[x] * kraw[j];
  }
  WeightDistribution out;
  out.n = w.n;
  out.q = q;
  out.source = DistributionSource::kMacWilliams;
  out.counts.resize(n + 1);
  for (long j = 0; j <= n; ++j) {
    if (acc[j] < 0 || acc[j] % qk != 0) {
      throw ConsistencyError("MacWilliams transform produced a non-integral or negative A_" +
                             std::to_string(j));
    }
    out.counts[j] = acc[j] / qk;
  }
  return out;
}

namespace {

template <std::size_t W>
MinWeightResult isd_binary(const Matrix& basis, std::uint64_t iterations, std::uint64_t seed,
                           std::uint32_t stop_at) {
  auto rows = detail::pack_rows<W>(basis);
  const std::size_t k = rows.size(), n = basis.cols();
  MinWeightResult best;
  PackedWord<W> best_word;
  auto consider = [&](const PackedWord<W>& w) {
    const unsigned wt = w.weight();
    if (wt != 0 && wt < best.weight) {
      best.weight = wt;
      best_word = w;
    }
  };
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::uint64_t it = 0; it < iterations && best.weight > stop_at; ++it) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::size_t rank = 0;
    for (std::size_t c : perm) {
      if (rank == k) break;
      std::size_t r = rank;
      while (r < k && !rows[r].test(c)) ++r;
      if (r == k) continue;
      std::swap(rows[r], rows[rank]);
      for (std::size_t i = 0; i < k; ++i)
        if (i != rank && rows[i].test(c)) rows[i] ^= rows[rank];
      ++rank;
    }
    for (std::size_t i = 0; i < k; ++i) {
      consider(rows[i]);
      for (std::size_t j = i + 1; j < k; ++j) consider(rows[i] ^ rows[j]);
    }
  }
  if (best.weight != kInfiniteDistance) best.codeword = detail::unpack(best_word, n);
  return best;
}

MinWeightResult isd_general(const Matrix& basis, std::uint64_t iterations, std::uint64_t seed,
                            std::uint32_t stop_at) {
  const std::uint32_t q = basis.field_size();
  const std::size_t n = basis.cols();
  MinWeightResult best;
  auto consider = [&](const Vector& v) {
    const auto wt = static_cast<std::uint32_t>(hamming_weight(v));
    if (wt != 0 && wt < best.weight) {
      best.weight = wt;
      best.codeword = v;
    }
  };
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Vector tmp(n);
  for (std::uint64_t it = 0; it < iterations && best.weight > stop_at; ++it) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const Matrix sys = basis.row_echelon(perm).reduced;
    const std::size_t k = sys.rows();
    for (std::size_t i = 0; i < k; ++i) {
      const auto ri = sys.row(i);
      consider(Vector(ri.begin(), ri.end()));
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto rj = sys.row(j);
        for (std::uint32_t c = 1; c < q; ++c) {
          for (std::size_t x = 0; x < n; ++x)
            tmp[x] = gf_add(ri[x], gf_mul(static_cast<std::uint8_t>(c), rj[x], q), q);
          consider(tmp);
        }
      }
    }
  }
  return best;
}

MinWeightResult search_with_stop(const Matrix& generator, std::uint64_t iterations,
                                 std::uint64_t seed, std::uint32_t stop_at) {
  const Matrix basis = independent_rows(generator);
  if (basis.rows() == 0) return {};
  if (basis.field_size() == 2) {
    return detail::dispatch_words(basis.cols(), [&]<std::size_t W>() {
      return isd_binary<W>(basis, iterations, seed, stop_at);
    });
  }
  return isd_general(basis, iterations, seed, stop_at);
}

DistanceReport ladder(const Matrix& generator, std::uint32_t fallback_lower,
                      const DistanceOptions& options) {
  DistanceReport rep;
  rep.budget = std::min(options.budget, kHardBudgetCap);
  rep.seed = options.seed;
  const Matrix basis = independent_rows(generator);
  const std::uint32_t q = generator.field_size();
  const std::size_t n = generator.cols(), k = basis.rows();
  const EnumerationOptions enum_opts{rep.budget, options.threads};

  if (k == 0) {
    rep.exact = true;
    rep.lower = rep.upper = kInfiniteDistance;
    rep.method = "zero-code";
    return rep;
  }
  if (saturating_power(q, k) <= rep.budget) {
    const auto w = weight_distribution_exhaustive(basis, enum_opts);
    rep.exact = true;
    rep.lower = rep.upper = w.min_distance();
    rep.method = "enumeration";
    rep.enumerated = saturating_power(q, k);
    return rep;
  }
  if (saturating_power(q, n - k) <= rep.budget) {
    const auto dual = basis.null_space();
    const auto wd = weight_distribution_exhaustive(dual, enum_opts);
    const auto w = macwilliams_transform(wd, n - k, q);
    rep.exact = true;
    rep.lower = rep.upper = w.min_distance();
    rep.method = "dual-enumeration+macwilliams";
    rep.enumerated = saturating_power(q, n - k);
    return rep;
  }
  rep.lower = fallback_lower;
  const auto found = search_with_stop(basis, options.search_iterations, options.seed, fallback_lower);
  rep.upper = found.weight;
  if (rep.upper < rep.lower) {
    throw ConsistencyError("codeword of weight " + std::to_string(rep.upper) +
                           " found below the proven lower bound " + std::to_string(rep.lower));
  }
  rep.exact = rep.lower == rep.upper;
  rep.method = rep.exact ? "bch+isd" : "bounds";
  return rep;
}

}  // namespace

MinWeightResult random_minweight_search(const Matrix& generator, std::uint64_t iterations,
                                        std::uint64_t seed) {
  return search_with_stop(generator, iterations, seed, 0);
}

DistanceReport min_distance(const CyclicCodeSpec& code, const DistanceOptions& options) {
  if (code.dimension() == 0) return ladder(Matrix(code.q(), 0, code.n()), 1, options);
  return ladder(generator_matrix(code), bch_bound(code), options);
}

DistanceReport min_distance(const Matrix& generator, const DistanceOptions& options) {
  return ladder(generator, 1, options);
}

}  // namespace cyclicpir
