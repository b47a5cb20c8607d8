#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclicpir/cyclic_code.hpp"
#include "cyclicpir/distance.hpp"
#include "cyclicpir/pir_scheme.hpp"

namespace cyclicpir {

/// A printed distance entry: absent, "d", ">= d", or "a+b" (BCH bound a,
/// true distance a + b).
struct DistanceClaim {
  enum class Kind { kNone, kExact, kAtLeast, kBchPlus };
  Kind kind = Kind::kNone;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  static DistanceClaim none() { return {}; }
  static DistanceClaim exact(std::uint32_t d) { return {Kind::kExact, d, 0}; }
  static DistanceClaim at_least(std::uint32_t d) { return {Kind::kAtLeast, d, 0}; }
  static DistanceClaim bch_plus(std::uint32_t a, std::uint32_t b) { return {Kind::kBchPlus, a, b}; }
  std::string to_string() const;
};

struct ExpectedCode {
  std::size_t k = 0;
  DistanceClaim d;
  std::string printed;  // cell text when it differs from the canonical rendering
};

struct ExpectedRow {
  std::string c_cosets;  // verbatim notation, e.g. "U{0,31}" or "V \ U{1,13}"
  std::string d_cosets;
  ExpectedCode c, d, d_dual;
  std::optional<ExpectedCode> star;  // absent in the storage-reduction table
  ExpectedCode star_dual;
  std::uint32_t privacy = 0;
  bool privacy_at_least = false;
  Rate rate;
  bool bold = false;
  std::vector<std::string> classification;  // informational optimal/best-known labels
  std::string note;
};

struct TableFixture {
  int id = 0;
  std::string title;
  std::uint32_t n = 0;
  std::uint32_t q = 2;
  std::vector<ExpectedRow> rows;
  std::vector<std::string> notes;
};

enum class CellStatus { kMatch, kBoundConsistent, kMismatch };
enum class Verifiability { kExactAtDefault, kExactAtDeep, kBoundOnly, kNotApplicable };

std::string to_string(CellStatus s);
std::string to_string(Verifiability v);

struct CellReport {
  std::string column;  // C, D, Ddual, star, stardual, privacy, rate
  std::string field;   // k, d, t, rate
  std::string expected;
  std::string computed;
  CellStatus status = CellStatus::kMatch;
  Verifiability verifiability = Verifiability::kNotApplicable;
  std::optional<std::uint32_t> bch;  // BCH bound of the code in this column
};

struct RowReport {
  std::size_t index = 0;  // 1-based, as printed
  bool bold = false;
  std::string c_spec;
  std::string d_spec;
  PirParameters computed;
  std::vector<CellReport> cells;
  std::string note;
};

struct TableReport {
  int id = 0;
  std::string title;
  std::uint64_t budget = kDefaultBudget;
  std::vector<RowReport> rows;
  std::vector<std::string> notes;

  std::size_t count(CellStatus s) const;
  bool has_mismatch() const { return count(CellStatus::kMismatch) > 0; }
};

/// Table ids: 1, 3, 4, 5, 7.
const std::vector<int>& table_ids();
const TableFixture& table_fixture(int id);

/// "U{0,1,5}", "U_{\{0,1\}}", "V \ U{1,13}" (complement of the union).
CyclicCodeSpec parse_coset_notation(const std::string& text, std::uint32_t n, std::uint32_t q = 2);

Verifiability classify(std::uint32_t q, std::size_t n, std::size_t k);

struct TableOptions {
  bool deep = false;
  std::uint64_t budget = kDefaultBudget;  // ignored when deep
  std::uint64_t seed = 1;
  std::uint64_t search_iterations = 2000;
  /// Restrict to these 1-based rows; empty means all.
  std::vector<std::size_t> rows;
};

TableReport reproduce_table(int id, const TableOptions& options = {});

/// Row checks reused by reproduce_table and the acceptance suite.
CellStatus judge_dimension(std::size_t expected, std::size_t computed);
CellStatus judge_distance(const DistanceClaim& claim, const DistanceReport& report,
                          std::optional<std::uint32_t> bch);
CellStatus judge_privacy(std::uint32_t printed, bool at_least, const PirParameters& p);

}  // namespace cyclicpir
