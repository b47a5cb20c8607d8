#include <doctest.h>

#include <random>

#include "cyclicpir/distance.hpp"

using namespace cyclicpir;

namespace {

CyclicCodeSpec random_code(std::mt19937_64& rng, std::uint32_t n, std::uint32_t q = 2) {
  std::vector<std::uint32_t> chosen;
  for (auto rep : coset_representatives(n, q))
    if (rng() & 1u) chosen.push_back(rep);
  return code_from_cosets(chosen, n, q);
}

// Plain odometer over messages, multiplying each through the generator.
std::vector<BigInt> naive_distribution(const Matrix& g) {
  const std::uint32_t q = g.field_size();
  std::vector<BigInt> counts(g.cols() + 1, 0);
  std::vector<std::uint8_t> msg(g.rows(), 0);
  while (true) {
    ++counts[hamming_weight(vector_times_matrix(msg, g))];
    std::size_t i = 0;
    while (i < msg.size() && ++msg[i] == q) msg[i++] = 0;
    if (i == msg.size()) break;
  }
  return counts;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Closed-form Krawtchouk sum, independent of the recurrence used in the library.
std::vector<BigInt> naive_macwilliams(const std::vector<BigInt>& a, long n, long q, long k) {
  std::vector<BigInt> out(n + 1, 0);
  BigInt qk = 1;
  for (long i = 0; i < k; ++i) qk *= q;
  for (long j = 0; j <= n; ++j) {
    BigInt s = 0;
    for (long x = 0; x <= n; ++x) {
      if (a[x] == 0) continue;
      BigInt kj = 0;
      for (long h = 0; h <= j; ++h) {
        BigInt term = binomial(x, h) * binomial(n - x, j - h);
        for (long e = 0; e < j - h; ++e) term *= (q - 1);
        kj += (h % 2 ? -term : term);
      }
      s += a[x] * kj;
    }
    out[j] = s / qk;
  }
  return out;
}

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("small exhaustive distributions") {
  const auto rep = CyclicCodeSpec::from_generating_set(2, ResidueSet(7, {0}));
  CHECK(weight_distribution_exhaustive(generator_matrix(rep)).counts == big({1, 0, 0, 0, 0, 0, 0, 1}));
  const auto ham = CyclicCodeSpec::from_generating_set(2, ResidueSet(7, {0, 1, 2, 4}));
  const auto w = weight_distribution_exhaustive(generator_matrix(ham));
  CHECK(w.counts == big({1, 0, 0, 7, 7, 0, 0, 1}));
  CHECK(w.min_distance() == 3);
  CHECK(w.total() == 16);
}

TEST_CASE("Golay codes") {
  // binary [23,12,7]: generator is a minimal polynomial of an 11-element coset
  const auto g23 = CyclicCodeSpec::from_defining_set(2, ResidueSet(23, cyclotomic_coset(1, 23, 2)));
  CHECK(g23.dimension() == 12);
  const auto w23 = weight_distribution_exhaustive(generator_matrix(g23));
  std::vector<BigInt> expected(24, 0);
  expected[0] = expected[23] = 1;
  expected[7] = expected[16] = 253;
  expected[8] = expected[15] = 506;
  expected[11] = expected[12] = 1288;
  CHECK(w23.counts == expected);

  // ternary [11,6,5]
  const auto g11 = CyclicCodeSpec::from_defining_set(3, ResidueSet(11, cyclotomic_coset(1, 11, 3)));
  CHECK(g11.dimension() == 6);
  const auto w11 = weight_distribution_exhaustive(generator_matrix(g11));
  CHECK(w11.counts == big({1, 0, 0, 0, 0, 132, 132, 0, 330, 110, 0, 24}));
  CHECK(random_minweight_search(generator_matrix(g11), 50, 1).weight == 5);
  CHECK(random_minweight_search(generator_matrix(g23), 200, 1).weight == 7);
}

TEST_CASE("property: Gray enumeration agrees with naive enumeration") {
  std::mt19937_64 rng(17);
  for (auto [n, q] : {std::pair{7u, 2u}, {15u, 2u}, {21u, 2u}, {31u, 2u}, {13u, 3u}, {8u, 3u}, {12u, 5u}}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto c = random_code(rng, n, q);
      if (c.dimension() == 0 || saturating_power(q, c.dimension()) > (1u << 14)) continue;
      const auto g = generator_matrix(c);
      CHECK(weight_distribution_exhaustive(g).counts == naive_distribution(g));
    }
  }
}

TEST_CASE("property: distribution is independent of row order and thread count") {
  std::mt19937_64 rng(23);
  for (std::uint32_t n : {31u, 63u, 127u}) {
    for (int trial = 0; trial < 4; ++trial) {
      auto c = random_code(rng, n);
      if (c.dimension() == 0 || c.dimension() > 20) continue;
      const auto g = generator_matrix(c);
      std::vector<std::size_t> order(g.rows());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const auto permuted = g.select_rows(order);
      const auto a = weight_distribution_exhaustive(g, {kDefaultBudget, 1});
      CHECK(a == weight_distribution_exhaustive(permuted, {kDefaultBudget, 1}));
      CHECK(a == weight_distribution_exhaustive(g, {kDefaultBudget, 4}));
    }
  }
}

TEST_CASE("MacWilliams transform") {
  WeightDistribution whole{3, 2, big({1, 3, 3, 1}), DistributionSource::kEnumeration};
  CHECK(macwilliams_transform(whole, 3, 2).counts == big({1, 0, 0, 0}));
  WeightDistribution ham{7, 2, big({1, 0, 0, 7, 7, 0, 0, 1}), DistributionSource::kEnumeration};
  const auto simplex = macwilliams_transform(ham, 4, 2);
  CHECK(simplex.counts == big({1, 0, 0, 0, 7, 0, 0, 0}));
  CHECK(simplex.source == DistributionSource::kMacWilliams);
  CHECK(macwilliams_transform(simplex, 3, 2).counts == ham.counts);

  WeightDistribution bogus{2, 2, big({1, 0, 3}), DistributionSource::kEnumeration};
  CHECK_THROWS_AS(macwilliams_transform(bogus, 2, 2), ConsistencyError);
  WeightDistribution partial = ham;
  partial.source = DistributionSource::kPartial;
  CHECK_THROWS(macwilliams_transform(partial, 4, 2));
}

TEST_CASE("property: MacWilliams matches closed form, direct dual enumeration, and is an involution") {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (auto [n, q] : {std::pair{7u, 2u}, {15u, 2u}, {17u, 2u}, {21u, 2u}, {23u, 2u}, {31u, 2u}, {11u, 3u}, {13u, 3u}}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto c = random_code(rng, n, q);
      const auto d = dual_code(c);
      if (c.dimension() == 0 || d.dimension() == 0) continue;
      if (saturating_power(q, c.dimension()) > (1u << 20) || saturating_power(q, d.dimension()) > (1u << 20)) continue;
      const auto wc = weight_distribution_exhaustive(generator_matrix(c));
      const auto wd = weight_distribution_exhaustive(generator_matrix(d));
      const auto t = macwilliams_transform(wc, c.dimension(), q);
      CHECK(t.counts == wd.counts);
      CHECK(t.counts == naive_macwilliams(wc.counts, n, q, static_cast<long>(c.dimension())));
      CHECK(macwilliams_transform(t, d.dimension(), q).counts == wc.counts);
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("budget error names the dual route") {
  const std::vector<std::uint32_t> reps{0, 1, 3, 5};
  const auto c = code_from_cosets(reps, 31, 2);
  try {
    weight_distribution_exhaustive(generator_matrix(c), {1024, 1});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()).find("MacWilliams") != std::string::npos);
  }
}

TEST_CASE("randomized search") {
  const auto ham = CyclicCodeSpec::from_generating_set(2, ResidueSet(7, {0, 1, 2, 4}));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = random_minweight_search(generator_matrix(ham), 5, seed);
    CHECK(r.weight == 3);
    CHECK(hamming_weight(r.codeword) == 3);
  }
  CHECK(random_minweight_search(Matrix(2, 0, 7), 10, 1).weight == kInfiniteDistance);
  const std::vector<std::uint32_t> reps{0, 1, 3, 5, 7};
  const auto g = generator_matrix(code_from_cosets(reps, 63, 2));
  CHECK(random_minweight_search(g, 30, 9) == random_minweight_search(g, 30, 9));
}

TEST_CASE("distance ladder") {
  const std::vector<std::uint32_t> c8{0, 31}, u21{21}, star{0, 1, 3, 5, 7, 9, 11, 13, 15, 19, 21, 23, 27, 29, 31, 43, 55, 63};
  auto r = min_distance(code_from_cosets(c8, 127, 2));
  CHECK(r.exact);
  CHECK(r.lower == 63);
  CHECK(r.method == "enumeration");

  r = min_distance(code_from_cosets(u21, 63, 2));
  CHECK((r.exact && r.lower == 42));

  // [127,113]: reached through its 14-dimensional dual
  const std::vector<std::uint32_t> s113 = [] {
    std::vector<std::uint32_t> all;
    for (auto rep : coset_representatives(127, 2))
      if (rep != 13 && rep != 47) all.push_back(rep);
    return all;
  }();
  r = min_distance(code_from_cosets(s113, 127, 2));
  CHECK(r.exact);
  CHECK(r.lower == 5);
  CHECK(r.method == "dual-enumeration+macwilliams");

  const std::vector<std::uint32_t> none{};
  r = min_distance(code_from_cosets(none, 15, 2));
  CHECK((r.exact && r.lower == kInfiniteDistance && r.method == "zero-code"));

  // both sides above a tiny budget: bounds only, BCH below the search result
  r = min_distance(parse_code_spec("q=2 n=31 cosets=0,1,3", true), {1024, 1, 300, 1});
  CHECK(r.lower == 6);
  CHECK(r.upper >= r.lower);
  CHECK((r.method == "bounds" || r.method == "bch+isd"));
  const auto exact = min_distance(parse_code_spec("q=2 n=31 cosets=0,1,3", true));
  CHECK(exact.exact);
  CHECK(exact.lower >= 6);
}

TEST_CASE("property: BCH bound never exceeds the exact distance") {
  std::mt19937_64 rng(31);
  for (std::uint32_t n : {15u, 21u, 31u, 63u, 127u}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto c = random_code(rng, n);
      const auto r = min_distance(c, {std::uint64_t{1} << 18, 1, 200, 0});
      if (c.dimension() == 0) continue;
      CHECK(bch_bound(c) <= r.lower);
      CHECK(r.lower <= r.upper);
      if (r.exact) CHECK(r.lower == r.upper);
    }
  }
}
