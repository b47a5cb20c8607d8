#include "cyclicpir/tables.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace cyclicpir {

namespace {

using Claim = DistanceClaim;

ExpectedCode ck(std::size_t k, Claim d = Claim::none(), std::string printed = {}) {
  return {k, d, std::move(printed)};
}
Claim ex(std::uint32_t d) { return Claim::exact(d); }
Claim ge(std::uint32_t d) { return Claim::at_least(d); }
Claim bp(std::uint32_t a, std::uint32_t b) { return Claim::bch_plus(a, b); }

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Rows whose D grows by appending cosets to the previous row's list.
struct Chain {
  std::vector<std::uint32_t> reps;
  std::string next(std::initializer_list<std::uint32_t> add) {
    reps.insert(reps.end(), add);
    return "U{" + join(reps) + "}";
  }
};

ExpectedRow row(std::string c, std::string d, ExpectedCode gc, ExpectedCode gd, ExpectedCode gdd,
                std::optional<ExpectedCode> star, ExpectedCode sd, std::uint32_t t, bool t_ge, Rate rate,
                bool bold) {
  ExpectedRow r;
  r.c_cosets = std::move(c);
  r.d_cosets = std::move(d);
  r.c = gc;
  r.d = gd;
  r.d_dual = gdd;
  r.star = star;
  r.star_dual = sd;
  r.privacy = t;
  r.privacy_at_least = t_ge;
  r.rate = rate;
  r.bold = bold;
  return r;
}

TableFixture make_table1() {
  TableFixture t{1, "best-known cyclic pairs at n = 127", 127, 2, {}, {}};
  const std::string o = "optimal", b = "best-known";
  auto add = [&](std::string c, std::string d, ExpectedCode gc, ExpectedCode gd, ExpectedCode gdd, ExpectedCode st,
                 ExpectedCode sd, std::uint32_t priv, std::int64_t u, std::vector<std::string> cls) {
    auto r = row(std::move(c), std::move(d), gc, gd, gdd, st, sd, priv, false, Rate{u, 127}, true);
    r.classification = std::move(cls);
    t.rows.push_back(std::move(r));
  };
  add("U{0,31}", "U{0,5,23,27,31}", ck(8, ex(63)), ck(29, ex(43)), ck(98, ex(10)), ck(113, ex(5)), ck(14, ex(56)), 9,
      14, {o, b, b, o, o});
  add("U{0,11}", "U{1,3,11,23,43,55}", ck(8, ex(63)), ck(42, ex(32)), ck(85, ex(13)), ck(112, ex(6)),
      ck(15, ex(55)), 12, 15, {o, b, b, o, b});
  add("U{0,5,43}", "U{0,23,43}", ck(15, ex(55)), ck(15, ex(55)), ck(112, ex(6)), ck(106, ex(7)), ck(21, ex(48)), 5,
      21, {b, b, o, b, b});
  add("U{0,23,63}", "U{19,31,55}", ck(15, ex(55)), ck(21, ex(48)), ck(106, ex(7)), ck(112, ex(6)), ck(15, ex(55)),
      6, 15, {b, b, b, o, b});
  add("U{1,10,29}", "U{7,31,55}", ck(21, ex(48)), ck(21, ex(48)), ck(106, ex(7)), ck(112, ex(6)), ck(15, ex(55)), 6,
      15, {b, b, b, o, b});
  t.rows[0].note = "the prose names U_1 and U_31 for this storage code; the coset table's U{0,31} is used";
  t.notes.push_back("classification labels (optimal / best-known) are informational and not recomputed");
  return t;
}

TableFixture make_table3() {
  TableFixture t{3, "storage C = U{0,1}, growing D, n = 127", 127, 2, {}, {}};
  const std::string c = "U{0,1}";
  Chain ch;
  auto add = [&](std::string d, ExpectedCode gd, ExpectedCode gdd, ExpectedCode st, ExpectedCode sd,
                 std::uint32_t priv, std::int64_t u, bool bold) {
    t.rows.push_back(row(c, std::move(d), ck(8, ex(63)), gd, gdd, st, sd, priv, false, Rate{u, 127}, bold));
  };
  add(ch.next({0, 1}), ck(8, ex(63)), ck(119, ex(4)), ck(29, ex(31)), ck(98, ex(7)), 3, 98, false);
  add(ch.next({5, 9}), ck(22, ex(47)), ck(105, ex(8)), ck(64, ex(15)), ck(63, ex(16)), 7, 63, true);
  add(ch.next({3}), ck(29, ex(31)), ck(98, ex(8)), ck(64, ex(15)), ck(63, ex(16)), 7, 63, false);
  add(ch.next({11, 19, 21}), ck(50, ex(27)), ck(77, ex(16)), ck(99, ex(7)), ck(28, ex(32)), 15, 28, true);
  add(ch.next({7}), ck(57, ex(23)), ck(70, ex(16)), ck(99, ex(7)), ck(28, ex(32)), 15, 28, true);
  add(ch.next({13}), ck(64, ex(15)), ck(63, ex(16)), ck(99, ex(7)), ck(28, ex(32)), 15, 28, false);
  add(ch.next({23, 27, 43}), ck(85, ex(13)), ck(42, ex(32)), ck(120, ex(3)), ck(7, ex(64)), 31, 7, true);
  add(ch.next({29}), ck(92, ex(11)), ck(35, ex(32)), ck(120, ex(3)), ck(7, ex(64)), 31, 7, true);
  add(ch.next({15}), ck(99, ex(7)), ck(28, ex(32)), ck(120, ex(3)), ck(7, ex(64)), 31, 7, false);
  t.notes.push_back("non-bold rows are the Reed-Muller shadow codes");
  return t;
}

TableFixture make_table4() {
  TableFixture t{4, "dimension-2 storage C = U{85}, n = 255", 255, 2, {}, {}};
  const std::string c = "U{85}";
  auto add = [&](std::vector<std::uint32_t> removed, std::size_t kd, std::size_t kdd, std::uint32_t a,
                 std::uint32_t b, std::size_t u, std::uint32_t priv) {
    t.rows.push_back(row(c, "V \\ U{" + join(removed) + "}", ck(2, ex(170)), ck(kd), ck(kdd, bp(a, b)), std::nullopt,
                         ck(u), priv, false, Rate{static_cast<std::int64_t>(u), 255}, true));
  };
  add({0, 1, 11, 13, 17, 21, 25, 61, 85, 87}, 192, 63, 20, 45, 19, 64);
  add({1, 13, 25, 27, 29, 31, 45, 119}, 195, 60, 15, 51, 8, 65);
  add({0, 1, 7, 13, 25, 31, 39, 45}, 198, 57, 15, 53, 8, 67);
  add({0, 1, 13, 17, 25, 29, 31, 63, 85}, 200, 55, 29, 41, 11, 69);
  add({39, 55, 61, 63, 85, 87, 119, 127}, 201, 54, 40, 32, 9, 71);
  add({0, 1, 9, 13, 25, 31, 111, 119}, 202, 53, 28, 44, 8, 71);
  add({0, 1, 11, 13, 29, 47, 85, 111}, 204, 51, 14, 60, 11, 73);
  t.notes.push_back("a+b means BCH bound a and true minimum distance a+b");
  return t;
}

TableFixture make_table5() {
  TableFixture t{5, "storage C = U{0,1}, growing D, n = 255", 255, 2, {}, {}};
  const std::string c = "U{0,1}";
  Chain ch;
  auto add = [&](std::string d, ExpectedCode gd, ExpectedCode gdd, ExpectedCode st, ExpectedCode sd,
                 std::uint32_t priv, bool priv_ge, std::int64_t u, bool bold) {
    t.rows.push_back(row(c, std::move(d), ck(9, ex(127)), gd, gdd, st, sd, priv, priv_ge, Rate{u, 255}, bold));
  };
  add(ch.next({0, 1}), ck(9, ex(127)), ck(246, ex(4)), ck(37, ex(63)), ck(218, ex(8)), 3, false, 218, false);
  add(ch.next({3, 5}), ck(25, ge(63)), ck(230, ge(8)), ck(93), ck(162), 7, true, 162, true);
  add(ch.next({9}), ck(33, ge(63)), ck(222, ge(8)), ck(93), ck(162), 7, true, 162, true);
  add(ch.next({17}), ck(37, ex(63)), ck(218, ex(8)), ck(93, ex(31)), ck(162, ex(16)), 7, false, 162, false);
  add(ch.next({7, 11, 13, 19, 25}), ck(77, ge(31)), ck(178, ge(16)), ck(161), ck(94), 15, true, 94, true);
  add(ch.next({21}), ck(85, ge(31)), ck(170, ge(16)), ck(163), ck(92), 15, true, 92, true);
  add(ch.next({37}), ck(93, ex(31)), ck(162, ex(16)), ck(163, ex(15)), ck(92, ex(32)), 15, false, 92, false);
  add(ch.next({15, 23, 27, 29, 39}), ck(133, ge(15)), ck(122, ge(32)), ck(219), ck(36), 31, true, 36, true);
  add(ch.next({53}), ck(141, ge(15)), ck(114, ge(32)), ck(219), ck(36, Claim::none(), "[25536]"), 31, true, 36,
      true);
  add(ch.next({45}), ck(149, ge(15)), ck(106, ge(32)), ck(219), ck(36), 31, true, 36, true);
  add(ch.next({51}), ck(153, ge(15)), ck(102, ge(32)), ck(219), ck(36, Claim::none(), "[25536]"), 31, true, 36,
      true);
  add(ch.next({43}), ck(161, ge(15)), ck(94, ge(32)), ck(219), ck(36), 31, true, 36, true);
  add(ch.next({85}), ck(163, ex(15)), ck(92, ex(32)), ck(219, ex(7)), ck(36, ex(64)), 31, false, 36, false);
  add(ch.next({31, 47, 55, 59, 61, 87}), ck(211, ge(7)), ck(44, ge(64)), ck(247), ck(8), 63, true, 8, true);
  add(ch.next({91}), ck(219, ex(7)), ck(36, ex(64)), ck(247, ex(3)), ck(8, ex(128)), 63, false, 8, false);
  for (auto i : {8u, 10u}) t.rows[i].note = "(C*D)^perp printed as [25536], read as [255,36]";
  t.notes.push_back("non-bold rows are the Reed-Muller shadow codes");
  return t;
}

TableFixture make_table7() {
  TableFixture t{7, "cyclic retrieval codes against shortened Reed-Muller, C = U{1}, n = 127", 127, 2, {}, {}};
  const std::string c = "U{1}";
  auto add = [&](std::string d, ExpectedCode gd, ExpectedCode gdd, ExpectedCode st, ExpectedCode sd,
                 std::uint32_t priv, std::int64_t u, bool bold) {
    t.rows.push_back(row(c, std::move(d), ck(7, ex(64)), gd, gdd, st, sd, priv, false, Rate{u, 127}, bold));
  };
  add("U{1}", ck(7, ex(64)), ck(120, ex(3)), ck(28, ex(32)), ck(99, ex(7)), 2, 99, false);
  add("U{0,1,5,9}", ck(22, ex(47)), ck(105, ex(8)), ck(63, ex(16)), ck(64, ex(15)), 7, 64, true);
  add("U{1,5,9,3}", ck(28, ex(32)), ck(99, ex(7)), ck(63, ex(16)), ck(64, ex(15)), 6, 64, false);
  add("U{0,1,5,9,3,11,19,21}", ck(50, ex(23)), ck(77, ex(16)), ck(98, ex(8)), ck(29, ex(31)), 15, 29, true);
  add("U{0,1,5,9,3,11,19,21,7}", ck(57, ex(23)), ck(70, ex(16)), ck(98, ex(8)), ck(29, ex(31)), 15, 29, true);
  add("U{1,5,9,3,11,19,21,7,13}", ck(63, ex(16)), ck(64, ex(15)), ck(98, ex(8)), ck(29, ex(31)), 14, 29, false);
  add("U{0,1,5,9,3,11,19,21,7,13,23,27,43}", ck(85, ex(13)), ck(42, ex(32)), ck(119, ex(4)), ck(8, ex(63)), 31, 8,
      true);
  add("U{0,1,5,9,3,11,19,21,7,13,23,27,43,29}", ck(92, ex(11)), ck(35, ex(32)), ck(119, ex(4)), ck(8, ex(63)), 31, 8,
      true);
  add("U{1,5,9,3,11,19,21,7,13,23,27,29,43,15}", ck(98, ex(8)), ck(29, ex(31)), ck(119, ex(4)), ck(8, ex(63)), 30,
      8, false);
  t.notes.push_back("non-bold rows are shortened Reed-Muller codes, which are cyclic");
  return t;
}

std::string interval(const DistanceReport& r) {
  auto s = [](std::uint32_t v) { return v == kInfiniteDistance ? std::string("inf") : std::to_string(v); };
  if (r.exact) return s(r.lower);
  return "[" + s(r.lower) + "," + s(r.upper) + "]";
}

std::string render(std::uint32_t n, const ExpectedCode& e) {
  if (!e.printed.empty()) return e.printed;
  std::string s = "[" + std::to_string(n) + "," + std::to_string(e.k);
  if (e.d.kind != Claim::Kind::kNone) s += "," + e.d.to_string();
  return s + "]";
}

}  // namespace

std::string DistanceClaim::to_string() const {
  switch (kind) {
    case Kind::kNone: return "";
    case Kind::kExact: return std::to_string(a);
    case Kind::kAtLeast: return ">=" + std::to_string(a);
    case Kind::kBchPlus: return std::to_string(a) + "+" + std::to_string(b);
  }
  return "";
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::kMatch: return "MATCH";
    case CellStatus::kBoundConsistent: return "BOUND-CONSISTENT";
    case CellStatus::kMismatch: return "MISMATCH";
  }
  return "?";
}

std::string to_string(Verifiability v) {
  switch (v) {
    case Verifiability::kExactAtDefault: return "exact-at-default";
    case Verifiability::kExactAtDeep: return "exact-at-deep";
    case Verifiability::kBoundOnly: return "bound-only";
    case Verifiability::kNotApplicable: return "n/a";
  }
  return "?";
}

std::size_t TableReport::count(CellStatus s) const {
  std::size_t total = 0;
  for (const auto& r : rows)
    total += static_cast<std::size_t>(std::count_if(r.cells.begin(), r.cells.end(),
                                                    [&](const CellReport& c) { return c.status == s; }));
  return total;
}

const std::vector<int>& table_ids() {
  static const std::vector<int> ids{1, 3, 4, 5, 7};
  return ids;
}

const TableFixture& table_fixture(int id) {
  static const std::map<int, TableFixture> all{{1, make_table1()},
                                               {3, make_table3()},
                                               {4, make_table4()},
                                               {5, make_table5()},
                                               {7, make_table7()}};
  const auto it = all.find(id);
  if (it == all.end()) throw std::invalid_argument("unknown table id " + std::to_string(id) + " (known: 1 3 4 5 7)");
  return it->second;
}

CyclicCodeSpec parse_coset_notation(const std::string& text, std::uint32_t n, std::uint32_t q) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_' && ch != '\\') s += ch;
  // After stripping, "V \ U{..}" is "VU{..}" and "U_{\{0,1\}}" is "U{{0,1}}".
  bool complement = false;
  if (!s.empty() && s[0] == 'V') {
    complement = true;
    s.erase(0, 1);
  }
  if (s.empty() || s[0] != 'U') throw std::invalid_argument("coset notation must start with U or V: " + text);
  std::vector<std::uint32_t> reps;
  std::uint32_t value = 0;
  bool in_number = false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      value = value * 10 + static_cast<std::uint32_t>(ch - '0');
      in_number = true;
    } else if (ch == ',' || ch == '{' || ch == '}') {
      if (in_number) reps.push_back(value % n);
      value = 0;
      in_number = false;
    } else {
      throw std::invalid_argument("unexpected character in coset notation: " + text);
    }
  }
  if (in_number) reps.push_back(value % n);
  const auto listed = code_from_cosets(reps, n, q);
  if (!complement) return listed;
  return CyclicCodeSpec::from_generating_set(q, listed.generating_set().complement());
}

Verifiability classify(std::uint32_t q, std::size_t n, std::size_t k) {
  const auto words = saturating_power(q, std::min(k, n - k));
  if (words <= kDefaultBudget) return Verifiability::kExactAtDefault;
  if (words <= kDeepBudget) return Verifiability::kExactAtDeep;
  return Verifiability::kBoundOnly;
}

CellStatus judge_dimension(std::size_t expected, std::size_t computed) {
  return expected == computed ? CellStatus::kMatch : CellStatus::kMismatch;
}

CellStatus judge_distance(const DistanceClaim& claim, const DistanceReport& report,
                          std::optional<std::uint32_t> bch) {
  auto within = [&](std::uint32_t d) {
    if (report.exact) return report.lower == d ? CellStatus::kMatch : CellStatus::kMismatch;
    return report.lower <= d && d <= report.upper ? CellStatus::kBoundConsistent : CellStatus::kMismatch;
  };
  switch (claim.kind) {
    case Claim::Kind::kNone: return CellStatus::kMatch;
    case Claim::Kind::kExact:
      if (bch && *bch > claim.a) return CellStatus::kMismatch;
      return within(claim.a);
    case Claim::Kind::kAtLeast:
      // The printed cell is itself only a bound; it is refuted by a lighter word.
      return report.upper < claim.a ? CellStatus::kMismatch : CellStatus::kBoundConsistent;
    case Claim::Kind::kBchPlus:
      if (bch && *bch != claim.a) return CellStatus::kMismatch;
      return within(claim.a + claim.b);
  }
  return CellStatus::kMismatch;
}

CellStatus judge_privacy(std::uint32_t printed, bool at_least, const PirParameters& p) {
  if (at_least) return p.privacy_hi < printed ? CellStatus::kMismatch : CellStatus::kBoundConsistent;
  if (p.privacy_exact) return p.privacy_lo == printed ? CellStatus::kMatch : CellStatus::kMismatch;
  return p.privacy_lo <= printed && printed <= p.privacy_hi ? CellStatus::kBoundConsistent : CellStatus::kMismatch;
}

TableReport reproduce_table(int id, const TableOptions& options) {
  const auto& fx = table_fixture(id);
  TableReport report;
  report.id = id;
  report.title = fx.title;
  report.budget = options.deep ? kDeepBudget : options.budget;
  report.notes = fx.notes;

  SchemeOptions scheme;
  scheme.distance.budget = report.budget;
  scheme.distance.seed = options.seed;
  scheme.distance.search_iterations = options.search_iterations;

  for (std::size_t i = 0; i < fx.rows.size(); ++i) {
    if (!options.rows.empty() && std::find(options.rows.begin(), options.rows.end(), i + 1) == options.rows.end())
      continue;
    const auto& e = fx.rows[i];
    const auto c = parse_coset_notation(e.c_cosets, fx.n, fx.q);
    const auto d = parse_coset_notation(e.d_cosets, fx.n, fx.q);
    const auto star = star_product(c, d);

    RowReport rr;
    rr.index = i + 1;
    rr.bold = e.bold;
    rr.c_spec = format_code_spec(c);
    rr.d_spec = format_code_spec(d);
    rr.note = e.note;
    rr.computed = evaluate_scheme(c, d, scheme);
    const auto& p = rr.computed;

    auto code_cells = [&](const std::string& column, const ExpectedCode& exp, const CodeSummary& got,
                          const CyclicCodeSpec& code) {
      const auto bch = bch_bound(code);
      const auto cls = classify(fx.q, fx.n, got.k);
      rr.cells.push_back({column, "k", render(fx.n, exp), std::to_string(got.k), judge_dimension(exp.k, got.k),
                          Verifiability::kExactAtDefault, bch});
      if (exp.d.kind != Claim::Kind::kNone) {
        rr.cells.push_back({column, "d", exp.d.to_string(), interval(got.distance),
                            judge_distance(exp.d, got.distance, bch), cls, bch});
      }
    };
    code_cells("C", e.c, p.storage, c);
    code_cells("D", e.d, p.retrieval, d);
    code_cells("Ddual", e.d_dual, p.retrieval_dual, dual_code(d));
    if (e.star) code_cells("star", *e.star, p.star, star);
    code_cells("stardual", e.star_dual, p.star_dual, dual_code(star));

    DistanceReport priv;
    priv.exact = p.privacy_exact;
    priv.lower = p.privacy_lo;
    priv.upper = p.privacy_hi;
    rr.cells.push_back({"privacy", "t", (e.privacy_at_least ? ">=" : "") + std::to_string(e.privacy),
                        interval(priv), judge_privacy(e.privacy, e.privacy_at_least, p),
                        classify(fx.q, fx.n, p.retrieval_dual.k), std::nullopt});
    rr.cells.push_back({"rate", "rate", e.rate.to_string(), p.rate.to_string(),
                        p.rate == e.rate ? CellStatus::kMatch : CellStatus::kMismatch,
                        Verifiability::kExactAtDefault, std::nullopt});
    report.rows.push_back(std::move(rr));
  }
  return report;
}

}  // namespace cyclicpir
