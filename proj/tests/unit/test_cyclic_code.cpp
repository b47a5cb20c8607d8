#include <doctest.h>

#include <random>
#include <set>

#include "cyclicpir/cyclic_code.hpp"

using namespace cyclicpir;

namespace {

CyclicCodeSpec random_code(std::mt19937_64& rng, std::uint32_t n, std::uint32_t q = 2) {
  std::vector<std::uint32_t> chosen;
  for (auto rep : coset_representatives(n, q))
    if (rng() & 1u) chosen.push_back(rep);
  return code_from_cosets(chosen, n, q);
}

std::vector<Vector> all_codewords(const Matrix& g) {
  std::vector<Vector> out;
  const std::size_t k = g.rows();
  const std::uint32_t q = g.field_size();
  std::vector<std::uint8_t> msg(k, 0);
  while (true) {
    out.push_back(vector_times_matrix(msg, g));
    std::size_t i = 0;
    while (i < k && ++msg[i] == q) msg[i++] = 0;
    if (i == k) break;
  }
  return out;
}

// Span of all coordinate-wise products, built without any index-set algebra.
Matrix brute_force_star(const Matrix& g1, const Matrix& g2) {
  const std::uint32_t q = g1.field_size();
  const std::size_t n = g1.cols();
  const auto w1 = g1.rows() <= 8 ? all_codewords(g1) : std::vector<Vector>{};
  const auto w2 = g2.rows() <= 8 ? all_codewords(g2) : std::vector<Vector>{};
  auto rows_of = [](const Matrix& g, const std::vector<Vector>& words) {
    if (!words.empty()) return words;
    std::vector<Vector> r;
    for (std::size_t i = 0; i < g.rows(); ++i) r.emplace_back(g.row(i).begin(), g.row(i).end());
    return r;
  };
  Matrix span(q, 0, n);
  for (const auto& a : rows_of(g1, w1)) {
    for (const auto& b : rows_of(g2, w2)) {
      Vector p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = gf_mul(a[j], b[j], q);
      span.append_row(p);
    }
    span = span.row_echelon().reduced;
  }
  return span;
}

}  // namespace

TEST_CASE("cyclotomic cosets") {
  CHECK(cyclotomic_coset(1, 31, 2) == std::vector<std::uint32_t>{1, 2, 4, 8, 16});
  CHECK(cyclotomic_coset(0, 17, 2) == std::vector<std::uint32_t>{0});
  CHECK(cyclotomic_coset(21, 63, 2) == std::vector<std::uint32_t>{21, 42});
  CHECK_THROWS_AS(cyclotomic_coset(1, 12, 2), CodeError);
}

TEST_CASE("coset representatives partition Z/nZ") {
  CHECK(coset_representatives(7, 2) == std::vector<std::uint32_t>{0, 1, 3});
  const auto reps31 = coset_representatives(31, 2);
  CHECK(std::vector<std::uint32_t>(reps31.begin(), reps31.begin() + 3) == std::vector<std::uint32_t>{0, 1, 3});
  CHECK(coset_representatives(1, 2) == std::vector<std::uint32_t>{0});
  for (auto [n, q] : {std::pair{127u, 2u}, {255u, 2u}, {26u, 3u}, {24u, 5u}}) {
    std::vector<int> hits(n, 0);
    for (auto r : coset_representatives(n, q)) {
      const auto c = cyclotomic_coset(r, n, q);
      CHECK(c.front() == r);
      for (auto x : c) ++hits[x];
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("code_from_cosets dimensions") {
  const std::vector<std::uint32_t> c{0, 31}, d{0, 5, 23, 27, 31}, none{}, dup{1, 2, 4};
  CHECK(code_from_cosets(c, 127, 2).dimension() == 8);
  CHECK(code_from_cosets(d, 127, 2).dimension() == 29);
  CHECK(code_from_cosets(none, 127, 2).dimension() == 0);
  CHECK(code_from_cosets(dup, 7, 2).dimension() == 3);
}

TEST_CASE("dual code") {
  const auto hamming = CyclicCodeSpec::from_generating_set(2, ResidueSet(7, {0, 1, 2, 4}));
  CHECK(dual_code(hamming).generating_set() == ResidueSet(7, {1, 2, 4}));
  CHECK(dual_code(CyclicCodeSpec::from_generating_set(2, ResidueSet::full(9))).dimension() == 0);
  const std::vector<std::uint32_t> d{0, 5, 23, 27, 31};
  CHECK(dual_code(code_from_cosets(d, 127, 2)).dimension() == 98);
}

TEST_CASE("star product examples") {
  const std::vector<std::uint32_t> c{0, 31}, d{0, 5, 23, 27, 31};
  const auto s = star_product(code_from_cosets(c, 127, 2), code_from_cosets(d, 127, 2));
  CHECK(s.dimension() == 113);
  const auto missing = s.defining_set();
  ResidueSet expected(127);
  for (auto x : cyclotomic_coset(13, 127, 2)) expected.insert(x);
  for (auto x : cyclotomic_coset(47, 127, 2)) expected.insert(x);
  CHECK(missing == expected);

  const auto zero = CyclicCodeSpec::from_generating_set(2, ResidueSet(7, {0}));
  const auto ham = CyclicCodeSpec::from_generating_set(2, ResidueSet(7, {0, 1, 2, 4}));
  CHECK(star_product(zero, ham) == ham);
  CHECK_THROWS_AS(star_product(zero, CyclicCodeSpec::from_generating_set(2, ResidueSet(9, {0}))), CodeError);
}

TEST_CASE("BCH bound") {
  const std::vector<std::uint32_t> j{0, 1, 3};
  const auto c = parse_code_spec("q=2 n=31 cosets=0,1,3", true);
  CHECK(c.dimension() == 20);
  CHECK(bch_bound(c) == 6);
  CHECK(bch_bound(CyclicCodeSpec::from_generating_set(2, ResidueSet::full(15))) == 1);
  CHECK(bch_bound(CyclicCodeSpec::from_defining_set(2, ResidueSet(7, {3, 5, 6}))) == 3);
}

TEST_CASE("generator polynomials") {
  const auto c = parse_code_spec("q=2 n=31 cosets=0,1,3", true);
  const auto g = generator_polynomial(c);
  CHECK(g.degree() == 11);
  CHECK(g.divides(BasePolynomial::x_pow_minus_one(2, 31)));
  CHECK(generator_polynomial(CyclicCodeSpec::from_generating_set(2, ResidueSet::full(7))) ==
        BasePolynomial(2, {1}));
  auto f8 = FieldSpec::build(2, 3, BasePolynomial(2, {1, 1, 0, 1}));
  const auto h = CyclicCodeSpec::from_defining_set(2, ResidueSet(7, {1, 2, 4}));
  CHECK(generator_polynomial(h, *f8) == BasePolynomial(2, {1, 1, 0, 1}));
  CHECK_THROWS_AS(generator_polynomial(h, *FieldSpec::build(2, 4)), CodeError);
}

TEST_CASE("generator polynomial vanishes exactly on the defining set") {
  std::mt19937_64 rng(7);
  for (std::uint32_t n : {15u, 21u, 31u, 63u}) {
    auto f = field_for_length(2, n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto c = random_code(rng, n);
      const auto g = generator_polynomial(c, *f);
      const auto beta = FieldElement::alpha_power(f, f->order() / n);
      for (std::uint32_t j = 0; j < n; ++j) {
        auto x = beta.pow(j), acc = FieldElement::zero(f), pw = FieldElement::one(f);
        for (int i = 0; i <= g.degree(); ++i) {
          if (g.coeff(i)) acc = acc + pw;
          pw = pw * x;
        }
        CHECK(acc.is_zero() == c.defining_set().contains(j));
      }
    }
  }
}

TEST_CASE("generator matrices") {
  const auto rep = CyclicCodeSpec::from_generating_set(2, ResidueSet(7, {0}));
  const auto g = generator_matrix(rep);
  CHECK(g.rows() == 1);
  for (std::size_t j = 0; j < 7; ++j) CHECK(g(0, j) == 1);
  const auto ham = CyclicCodeSpec::from_generating_set(2, ResidueSet(7, {0, 1, 2, 4}));
  CHECK(generator_matrix(ham).rank() == 4);
  const std::vector<std::uint32_t> c{0, 31};
  const auto g127 = generator_matrix(code_from_cosets(c, 127, 2));
  CHECK(g127.rows() == 8);
  CHECK(g127.rank() == 8);
}

TEST_CASE("property: duality, orthogonality and shift invariance") {
  std::mt19937_64 rng(11);
  for (auto [n, q] : {std::pair{7u, 2u}, {15u, 2u}, {21u, 2u}, {31u, 2u}, {63u, 2u}, {13u, 3u}, {8u, 3u}, {12u, 5u}}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto c = random_code(rng, n, q);
      const auto d = dual_code(c);
      CHECK(c.dimension() + d.dimension() == n);
      CHECK(dual_code(d) == c);
      CHECK(d.defining_set() == c.generating_set().negated());
      if (c.dimension() == 0 || d.dimension() == 0) continue;
      const auto gc = generator_matrix(c), gd = generator_matrix(d);
      CHECK((gc * gd.transpose()).is_zero());
      Matrix shifted(q, 0, n);
      for (std::size_t i = 0; i < gc.rows(); ++i) {
        Vector v(n);
        for (std::size_t j = 0; j < n; ++j) v[(j + 1) % n] = gc(i, j);
        shifted.append_row(v);
      }
      CHECK(gc.row_space_contains(shifted));
    }
  }
}

TEST_CASE("property: star product equals brute-force span of products (n <= 31)") {
  std::mt19937_64 rng(3);
  for (auto [n, q] : {std::pair{7u, 2u}, {15u, 2u}, {21u, 2u}, {31u, 2u}, {8u, 3u}, {13u, 3u}}) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto c1 = random_code(rng, n, q), c2 = random_code(rng, n, q);
      if (c1.dimension() == 0 || c2.dimension() == 0) continue;
      const auto s = star_product(c1, c2);
      const auto span = brute_force_star(generator_matrix(c1), generator_matrix(c2));
      CHECK(span.rows() == s.dimension());
      if (s.dimension() > 0) CHECK(span.row_space_equals(generator_matrix(s)));
    }
  }
}

TEST_CASE("property: star product is commutative, associative and monotone") {
  std::mt19937_64 rng(5);
  for (std::uint32_t n : {31u, 63u, 127u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_code(rng, n), b = random_code(rng, n), c = random_code(rng, n);
      CHECK(star_product(a, b) == star_product(b, a));
      CHECK(star_product(star_product(a, b), c) == star_product(a, star_product(b, c)));
      const auto ab = CyclicCodeSpec::from_generating_set(2, a.generating_set() | b.generating_set());
      CHECK(star_product(a, c).generating_set().is_subset_of(star_product(ab, c).generating_set()));
    }
  }
}

TEST_CASE("code-spec grammar") {
  const auto c = parse_code_spec("  q = 2  n=31 cosets= 3 , 1 ");
  CHECK(c.dimension() == 10);
  CHECK(format_code_spec(c) == "q=2 n=31 cosets=1,3");
  CHECK(format_code_spec(parse_code_spec("q=2 n=31 cosets=")) == "q=2 n=31 cosets=");
  CHECK(format_code_spec(parse_code_spec("q=2 n=31 cosets=24,0")) == "q=2 n=31 cosets=0,3");
  CHECK(c.label() == "U{1,3}");

  auto position_of = [](const char* text) -> long {
    try {
      parse_code_spec(text);
    } catch (const SpecParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("q=2 n=31 cosets=1,x") == 18);
  CHECK(position_of("q=2 m=31 cosets=1") == 4);
  CHECK(position_of("q=2 n=31") == 8);
  CHECK(position_of("q=2 n=31 cosets=40") == 16);
  CHECK(position_of("q=2 q=3 n=31 cosets=1") == 4);
  CHECK(position_of("q=2 n=31 cosets=1,3") == -1);
  CHECK_THROWS_AS(parse_code_spec("q=2 n=30 cosets=1"), CodeError);
  CHECK_THROWS_AS(parse_code_spec("q=4 n=31 cosets=1"), CodeError);
}
