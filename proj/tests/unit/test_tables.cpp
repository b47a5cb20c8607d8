#include <doctest.h>

#include "cyclicpir/tables.hpp"

using namespace cyclicpir;

namespace {

const CellReport& cell(const RowReport& r, const std::string& column, const std::string& field) {
  for (const auto& c : r.cells)
    if (c.column == column && c.field == field) return c;
  FAIL("no cell " << column << "." << field);
  return r.cells.front();
}

DistanceReport bounds(std::uint32_t lo, std::uint32_t hi) {
  DistanceReport r;
  r.exact = lo == hi;
  r.lower = lo;
  r.upper = hi;
  return r;
}

}  // namespace

TEST_CASE("coset notation") {
  CHECK(parse_coset_notation("U{0,31}", 127).dimension() == 8);
  CHECK(parse_coset_notation("U_{\\{0,31\\}}", 127) == parse_coset_notation("U{0,31}", 127));
  CHECK(parse_coset_notation("U{1,10,29}", 127) == parse_coset_notation("U{1,5,29}", 127));
  const auto v = parse_coset_notation("V \\ U{85}", 255);
  CHECK(v.dimension() == 253);
  CHECK_FALSE(v.generating_set().contains(85));
  CHECK_THROWS(parse_coset_notation("W{1}", 127));
  CHECK_THROWS(parse_coset_notation("U{1;2}", 127));
}

TEST_CASE("complement notation reproduces the printed retrieval dimensions of table 4") {
  for (const auto& r : table_fixture(4).rows) {
    CAPTURE(r.d_cosets);
    CHECK(parse_coset_notation(r.d_cosets, 255).dimension() == r.d.k);
  }
}

TEST_CASE("property: every fixture row is internally consistent") {
  for (int id : table_ids()) {
    const auto& fx = table_fixture(id);
    for (std::size_t i = 0; i < fx.rows.size(); ++i) {
      const auto& r = fx.rows[i];
      CAPTURE(id);
      CAPTURE(i + 1);
      CHECK(r.d.k + r.d_dual.k == fx.n);
      if (r.star) CHECK(r.star->k + r.star_dual.k == fx.n);
      CHECK(r.rate == Rate{static_cast<std::int64_t>(r.star_dual.k), fx.n});
      const auto& dd = r.d_dual.d;
      if (dd.kind == DistanceClaim::Kind::kExact) CHECK((!r.privacy_at_least && r.privacy + 1 == dd.a));
      if (dd.kind == DistanceClaim::Kind::kAtLeast) CHECK((r.privacy_at_least && r.privacy + 1 == dd.a));
      if (dd.kind == DistanceClaim::Kind::kBchPlus) CHECK(r.privacy + 1 == dd.a + dd.b);
    }
  }
  CHECK_THROWS(table_fixture(2));
}

TEST_CASE("verifiability follows the smaller of k and n - k") {
  CHECK(classify(2, 127, 8) == Verifiability::kExactAtDefault);
  CHECK(classify(2, 127, 98) == Verifiability::kExactAtDeep);
  CHECK(classify(2, 127, 29) == Verifiability::kExactAtDeep);
  CHECK(classify(2, 127, 42) == Verifiability::kBoundOnly);
  CHECK(classify(2, 127, 101) == Verifiability::kExactAtDefault);
}

TEST_CASE("cell judgements") {
  CHECK(judge_dimension(8, 8) == CellStatus::kMatch);
  CHECK(judge_dimension(15, 1) == CellStatus::kMismatch);

  CHECK(judge_distance(DistanceClaim::exact(10), bounds(10, 10), 4) == CellStatus::kMatch);
  CHECK(judge_distance(DistanceClaim::exact(10), bounds(11, 11), 4) == CellStatus::kMismatch);
  CHECK(judge_distance(DistanceClaim::exact(10), bounds(4, 12), 4) == CellStatus::kBoundConsistent);
  CHECK(judge_distance(DistanceClaim::exact(10), bounds(4, 9), 4) == CellStatus::kMismatch);
  CHECK(judge_distance(DistanceClaim::exact(23), bounds(27, 60), 27) == CellStatus::kMismatch);

  CHECK(judge_distance(DistanceClaim::at_least(8), bounds(8, 8), 8) == CellStatus::kBoundConsistent);
  CHECK(judge_distance(DistanceClaim::at_least(8), bounds(5, 9), 5) == CellStatus::kBoundConsistent);
  CHECK(judge_distance(DistanceClaim::at_least(8), bounds(5, 7), 5) == CellStatus::kMismatch);

  CHECK(judge_distance(DistanceClaim::bch_plus(20, 45), bounds(20, 70), 20) == CellStatus::kBoundConsistent);
  CHECK(judge_distance(DistanceClaim::bch_plus(20, 45), bounds(20, 64), 20) == CellStatus::kMismatch);
  CHECK(judge_distance(DistanceClaim::bch_plus(20, 45), bounds(19, 70), 19) == CellStatus::kMismatch);
  CHECK(judge_distance(DistanceClaim::bch_plus(20, 45), bounds(65, 65), 20) == CellStatus::kMatch);

  PirParameters p;
  p.privacy_lo = 7;
  p.privacy_hi = 15;
  CHECK(judge_privacy(15, false, p) == CellStatus::kBoundConsistent);
  CHECK(judge_privacy(16, false, p) == CellStatus::kMismatch);
  CHECK(judge_privacy(7, true, p) == CellStatus::kBoundConsistent);
  p.privacy_lo = p.privacy_hi = 9;
  p.privacy_exact = true;
  CHECK(judge_privacy(9, false, p) == CellStatus::kMatch);
  CHECK(judge_privacy(8, false, p) == CellStatus::kMismatch);
}

TEST_CASE("table 1 rows 2 to 4 at default budget carry no mismatch") {
  TableOptions o;
  o.rows = {2, 3, 4};
  const auto t = reproduce_table(1, o);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.count(CellStatus::kMismatch) == 0);
  const auto& r3 = t.rows[1];
  for (const auto& c : r3.cells) CHECK(c.status == CellStatus::kMatch);
  CHECK(cell(t.rows[0], "D", "d").verifiability == Verifiability::kBoundOnly);
  CHECK(cell(t.rows[0], "D", "d").status == CellStatus::kBoundConsistent);
}

TEST_CASE("table 1 row 5 printed star dimension disagrees with recomputation") {
  TableOptions o;
  o.rows = {5};
  const auto t = reproduce_table(1, o);
  const auto& star = cell(t.rows[0], "star", "k");
  CHECK(star.computed == "126");
  CHECK(star.status == CellStatus::kMismatch);
  CHECK(cell(t.rows[0], "rate", "rate").computed == "1/127");
  CHECK(cell(t.rows[0], "D", "k").status == CellStatus::kMatch);
}

TEST_CASE("table 3 shadow row 1: printed (C*D)^perp distance 7 is below its BCH bound") {
  TableOptions o;
  o.rows = {1};
  const auto t = reproduce_table(3, o);
  const auto& c = cell(t.rows[0], "stardual", "d");
  CHECK(c.bch == 8u);
  CHECK(c.status == CellStatus::kMismatch);
}

TEST_CASE("table 5 bold rows: dimensions match and bounded cells stay consistent") {
  TableOptions o;
  o.rows = {2, 3, 5, 6};
  const auto t = reproduce_table(5, o);
  for (const auto& r : t.rows) {
    CAPTURE(r.index);
    for (const auto& c : r.cells) {
      if (c.expected.starts_with(">=")) CHECK(c.status == CellStatus::kBoundConsistent);
      else CHECK(c.status == CellStatus::kMatch);
    }
  }
}

TEST_CASE("table 4 privacy cells are bound-consistent with BCH equal to the printed a") {
  TableOptions o;
  o.rows = {2, 7};
  const auto t = reproduce_table(4, o);
  for (const auto& r : t.rows) {
    CHECK(cell(r, "Ddual", "d").status == CellStatus::kBoundConsistent);
    CHECK(cell(r, "privacy", "t").status == CellStatus::kBoundConsistent);
    CHECK(cell(r, "privacy", "t").verifiability == Verifiability::kBoundOnly);
  }
}
