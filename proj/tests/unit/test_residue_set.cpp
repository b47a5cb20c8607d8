#include <doctest.h>

#include <random>
#include <set>

#include "cyclicpir/residue_set.hpp"

using namespace cyclicpir;

namespace {

std::set<std::uint32_t> as_set(const ResidueSet& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

ResidueSet random_set(std::mt19937_64& rng, std::uint32_t n, double density) {
  std::bernoulli_distribution coin(density);
  ResidueSet s(n);
  for (std::uint32_t i = 0; i < n; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

std::uint32_t naive_run(const ResidueSet& s) {
  const std::uint32_t n = s.modulus();
  std::uint32_t best = 0;
  for (std::uint32_t start = 0; start < n; ++start) {
    std::uint32_t len = 0;
    while (len < n && s.contains((start + len) % n)) ++len;
    best = std::max(best, len);
  }
  return best;
}

}  // namespace

TEST_CASE("basic membership and complement") {
  ResidueSet s(10, {1, 3, 9});
  CHECK(s.size() == 3);
  CHECK(s.contains(9));
  CHECK_FALSE(s.contains(0));
  CHECK(s.complement().size() == 7);
  CHECK(ResidueSet::full(130).size() == 130);
  CHECK(ResidueSet::full(130).complement().empty());
}

TEST_CASE("longest cyclic run wraps") {
  CHECK(ResidueSet(7, {5, 6}).longest_cyclic_run() == 2);
  CHECK(ResidueSet(7, {6, 0, 1, 3}).longest_cyclic_run() == 3);
  CHECK(ResidueSet::full(7).longest_cyclic_run() == 7);
  CHECK(ResidueSet(7).longest_cyclic_run() == 0);
}

TEST_CASE("property: word-parallel operations agree with naive set arithmetic") {
  std::mt19937_64 rng(1);
  for (std::uint32_t n : {1u, 7u, 63u, 64u, 65u, 127u, 128u, 255u, 300u, 1023u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_set(rng, n, 0.05 + 0.9 * (trial % 5) / 5.0);
      const auto b = random_set(rng, n, 0.1);
      std::set<std::uint32_t> sum, neg, rot;
      const std::uint32_t shift = static_cast<std::uint32_t>(rng() % (2 * n));
      for (auto x : as_set(a)) {
        for (auto y : as_set(b)) sum.insert((x + y) % n);
        neg.insert((n - x) % n);
        rot.insert((x + shift) % n);
      }
      CHECK(as_set(a.minkowski_sum(b)) == sum);
      CHECK(as_set(a.negated()) == neg);
      CHECK(as_set(a.rotated(shift)) == rot);
      CHECK(a.longest_cyclic_run() == naive_run(a));
      CHECK((a | b).size() + (a & b).size() == a.size() + b.size());
      CHECK((a & b).is_subset_of(a));
    }
  }
}
