#include "cyclicpir/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "cyclicpir/json_io.hpp"
#include "cyclicpir/reed_muller.hpp"

namespace cyclicpir {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  bool deep = false;
  std::string transcript;

  DistanceOptions distance() const {
    DistanceOptions o;
    o.budget = deep ? kDeepBudget : budget;
    o.seed = seed;
    return o;
  }
};

CyclicCodeSpec spec_arg(const std::string& text, bool defining = false) {
  try {
    return parse_code_spec(text, defining);
  } catch (const SpecParseError& e) {
    std::ostringstream msg;
    msg << "malformed code spec, " << e.what() << "\n  " << text << "\n  "
        << std::string(std::min(e.position(), text.size()), ' ') << "^";
    throw UsageError(msg.str());
  }
}

std::string distance_text(const DistanceReport& r) {
  if (r.method == "not-computed") return "?";
  auto s = [](std::uint32_t v) { return v == kInfiniteDistance ? std::string("inf") : std::to_string(v); };
  if (r.exact) return s(r.lower);
  return s(r.lower) + ".." + s(r.upper);
}

std::string brackets(const CodeSummary& c) {
  return "[" + std::to_string(c.n) + "," + std::to_string(c.k) + "," + distance_text(c.distance) + "]";
}

std::string method_text(const DistanceReport& r) {
  return r.method + ", budget " + std::to_string(r.budget) + (r.exact ? "" : ", seed " + std::to_string(r.seed));
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string privacy_text(const PirParameters& p) {
  auto s = [](std::uint32_t v) { return v == kInfiniteDistance ? std::string("inf") : std::to_string(v); };
  if (p.privacy_exact) return "t = " + s(p.privacy_lo);
  return "t in [" + s(p.privacy_lo) + ", " + s(p.privacy_hi) + "]";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// --- subcommands -------------------------------------------------------------

int run_coset(const Globals& g, std::uint32_t n, std::uint32_t q, std::optional<std::uint32_t> of, std::ostream& out) {
  if (n == 0) throw UsageError("n must be positive");
  std::vector<std::uint32_t> reps;
  if (of) {
    reps.push_back(coset_leader(*of % n, n, q));
  } else {
    reps = coset_representatives(n, q);
  }
  Json j = Json::array();
  for (auto r : reps) {
    const auto members = cyclotomic_coset(r, n, q);
    if (g.json) {
      j.push_back({{"leader", r}, {"size", members.size()}, {"members", members}});
    } else {
      out << "U_" << r << " (" << members.size() << "): " << join(members) << "\n";
    }
  }
  if (g.json) print_json(out, j);
  return kExitOk;
}

int run_code_info(const Globals& g, const std::string& text, bool defining, std::ostream& out) {
  const auto c = spec_arg(text, defining);
  const auto summary = summarize(c, g.distance());
  const auto bch = bch_bound(c);
  const auto def = CyclicCodeSpec::from_generating_set(c.q(), c.defining_set());
  if (g.json) {
    print_json(out, {{"spec", format_code_spec(c)},
                     {"q", c.q()},
                     {"n", c.n()},
                     {"k", c.dimension()},
                     {"generating_cosets", c.coset_labels()},
                     {"defining_cosets", def.coset_labels()},
                     {"bch", bch},
                     {"distance", summary.distance}});
    return kExitOk;
  }
  out << format_code_spec(c) << "\n";
  out << brackets(summary) << "\n";
  out << "generating cosets: " << join(c.coset_labels()) << "\n";
  out << "defining cosets: " << join(def.coset_labels()) << "\n";
  out << "BCH bound: " << bch << "\n";
  out << "distance: " << distance_text(summary.distance) << " (" << method_text(summary.distance) << ")\n";
  return kExitOk;
}

int print_code(const Globals& g, const CyclicCodeSpec& c, std::ostream& out) {
  if (g.json) {
    print_json(out, {{"spec", format_code_spec(c)}, {"n", c.n()}, {"k", c.dimension()}, {"cosets", c.coset_labels()}});
  } else {
    out << format_code_spec(c) << "\n[" << c.n() << "," << c.dimension() << "]\n";
  }
  return kExitOk;
}

int run_rm(const Globals& g, const std::string& op, std::uint32_t r, std::uint32_t m, bool shortened,
           std::ostream& out) {
  if (op == "as-cyclic") {
    const auto c = punctured_rm_as_cyclic(r, m, !shortened);
    return print_code(g, c, out);
  }
  RMSpec spec{r, m};
  validate(spec);
  Matrix gen = op == "build" ? rm_generator_matrix(spec) : op == "puncture" ? puncture_at_zero(spec)
                                                                            : shorten_at_zero(spec);
  const auto report = min_distance(gen, g.distance());
  const auto k = gen.rank();
  if (g.json) {
    print_json(out, {{"r", r}, {"m", m}, {"operation", op}, {"n", gen.cols()}, {"k", k}, {"distance", report}});
  } else {
    out << "RM(" << r << "," << m << ") " << op << ": [" << gen.cols() << "," << k << "," << distance_text(report)
        << "]\n";
  }
  return kExitOk;
}

int run_pir_eval(const Globals& g, const std::string& ctext, const std::string& dtext, std::ostream& out) {
  SchemeOptions opts;
  opts.distance = g.distance();
  const auto p = evaluate_scheme(spec_arg(ctext), spec_arg(dtext), opts);
  if (g.json) {
    print_json(out, p);
    return kExitOk;
  }
  out << "C          " << brackets(p.storage) << "  " << p.storage.spec << "\n";
  out << "D          " << brackets(p.retrieval) << "  " << p.retrieval.spec << "\n";
  out << "D^perp     " << brackets(p.retrieval_dual) << "  (" << method_text(p.retrieval_dual.distance) << ")\n";
  out << "C*D        " << brackets(p.star) << "  " << p.star.spec << "\n";
  out << "(C*D)^perp " << brackets(p.star_dual) << "\n";
  out << "privacy    " << privacy_text(p) << "\n";
  out << "rate       " << p.rate.to_string() << "\n";
  return kExitOk;
}

int run_pir_simulate(const Globals& g, const std::string& ctext, const std::string& dtext, std::size_t files,
                     std::size_t rows, std::optional<std::size_t> file, std::ostream& out) {
  const auto c = spec_arg(ctext), d = spec_arg(dtext);
  if (files == 0 || rows == 0) throw UsageError("--files and --rows must be positive");
  if (file && *file >= files) throw UsageError("--file must be below --files");
  const auto db = Database::random(c.q(), files, rows, c.dimension(), g.seed);

  std::ofstream transcript_file;
  std::ostream* transcript = nullptr;
  if (!g.transcript.empty()) {
    if (g.transcript == "-") {
      transcript = &out;
    } else {
      transcript_file.open(g.transcript);
      if (!transcript_file) throw UsageError("cannot open transcript file " + g.transcript);
      transcript = &transcript_file;
    }
  }
  bool all_ok = true;
  Json results = Json::array();
  for (std::size_t f = file.value_or(0); f < (file ? *file + 1 : files); ++f) {
    RetrievalOptions opts;
    if (transcript) {
      opts.transcript = [&, f](const TranscriptEntry& e) {
        Json line = e;
        line["file"] = f;
        *transcript << line.dump() << "\n";
      };
    }
    const auto r = run_full_retrieval(db, c, d, f, g.seed, opts);
    const bool ok = r.file == db.file(f) && r.decomposition_ok;
    all_ok = all_ok && ok;
    const auto eff = std::to_string(r.effective_rate.numerator()) + "/" + std::to_string(r.effective_rate.denominator());
    if (g.json) {
      results.push_back({{"file", f},
                         {"rounds", r.rounds},
                         {"downloaded", r.downloaded},
                         {"uploaded", r.uploaded},
                         {"nominal_rate", r.nominal_rate.to_string()},
                         {"effective_rate", eff},
                         {"decomposition_ok", r.decomposition_ok},
                         {"recovered", ok}});
    } else {
      out << "file " << f << ": " << (ok ? "recovered" : "MISMATCH") << ", rounds " << r.rounds << ", downloaded "
          << r.downloaded << " symbols, nominal rate " << r.nominal_rate.to_string() << ", effective rate " << eff
          << (r.decomposition_ok ? "" : ", decomposition check FAILED") << "\n";
    }
  }
  if (g.json) print_json(out, {{"seed", g.seed}, {"files", files}, {"rows_per_file", rows}, {"results", results}});
  return all_ok ? kExitOk : kExitMismatch;
}

int run_privacy_check(const Globals& g, const std::string& dtext, std::size_t t, const std::string& mode_text,
                      std::uint64_t trials, std::ostream& out) {
  const auto d = spec_arg(dtext);
  PrivacyMode mode = PrivacyMode::kAuto;
  if (mode_text == "exhaustive") mode = PrivacyMode::kExhaustive;
  else if (mode_text == "sampled") mode = PrivacyMode::kSampled;
  else if (mode_text != "auto") throw UsageError("--mode must be auto, exhaustive or sampled");
  const auto v = privacy_check(d, t, mode, trials, g.seed);
  if (g.json) {
    Json j = v;
    j["t"] = t;
    j["spec"] = format_code_spec(d);
    print_json(out, j);
  } else {
    out << "t = " << t << ": " << (v.pass ? "PASS" : "FAIL") << " (" << to_string(v.mode) << ", "
        << v.subsets_checked << " subsets)\n";
    if (v.witness) {
      out << "witness columns:";
      for (auto i : *v.witness) out << " " << i;
      out << "\n";
    }
  }
  return v.pass ? kExitOk : kExitMismatch;
}

struct SearchArgs {
  std::uint32_t n = 0;
  std::uint32_t q = 2;
  std::size_t c_cosets = 2;
  std::size_t d_cosets = 5;
  std::vector<std::uint32_t> pool;
  std::vector<std::uint32_t> fixed_c;
  std::string objective = "privacy";
  std::string min_rate = "0/1";
  std::uint32_t min_privacy = 0;
  bool no_prune = false;
  double seconds = 600;
  std::size_t top = 10;
  std::optional<std::uint64_t> budget;
};

int run_search(const Globals& g, const SearchArgs& a, std::ostream& out) {
  SearchSpec s;
  s.n = a.n;
  s.q = a.q;
  s.max_c_cosets = a.c_cosets;
  s.max_d_cosets = a.d_cosets;
  s.pool = a.pool.empty() ? full_pool(a.n, a.q) : a.pool;
  if (!a.fixed_c.empty()) s.fixed_c = a.fixed_c;
  if (a.objective == "rate") s.objective = SearchObjective::kMaxRate;
  else if (a.objective != "privacy") throw UsageError("--objective must be privacy or rate");
  try {
    s.min_rate = Rate::parse(a.min_rate);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--min-rate: ") + e.what());
  }
  s.min_privacy = a.min_privacy;
  s.bch_pruning = !a.no_prune;
  s.time_budget_seconds = a.seconds;
  s.distance.seed = g.seed;
  if (g.deep) s.distance.budget = kDeepBudget;
  else if (a.budget) s.distance.budget = *a.budget;
  auto r = search_pir_codes(s);
  if (r.hits.size() > a.top) r.hits.resize(a.top);
  if (g.json) {
    print_json(out, r);
    return kExitOk;
  }
  out << "pairs " << r.pairs_considered << ", pruned by BCH " << r.pruned_bch << ", pruned by rate " << r.pruned_rate
      << ", distance evaluations " << r.distance_evaluations << (r.partial ? ", PARTIAL (time budget)" : "") << "\n";
  for (const auto& h : r.hits) {
    out << privacy_text(h.params) << "  rate " << h.params.rate.to_string() << "  C=U{" << join(h.c_cosets)
        << "} D=U{" << join(h.d_cosets) << "}" << (h.pareto ? "  pareto" : "") << "\n";
  }
  return kExitOk;
}

int run_table(const Globals& g, int id, const std::vector<std::size_t>& rows, std::ostream& out) {
  if (std::find(table_ids().begin(), table_ids().end(), id) == table_ids().end()) {
    throw UsageError("unknown table " + std::to_string(id) + " (known: 1 3 4 5 7)");
  }
  TableOptions o;
  o.deep = g.deep;
  o.budget = g.budget;
  o.seed = g.seed;
  o.rows = rows;
  const auto t = reproduce_table(id, o);
  if (g.json) {
    print_json(out, t);
  } else {
    out << "table " << t.id << ": " << t.title << " (budget " << t.budget << ")\n";
    for (const auto& r : t.rows) {
      out << "row " << r.index << (r.bold ? "" : " (shadow)") << "  C=" << r.c_spec << "  D=" << r.d_spec << "\n";
      for (const auto& c : r.cells) {
        out << "  " << c.column << "." << c.field << "  expected " << c.expected << "  computed " << c.computed
            << "  " << to_string(c.status);
        if (c.verifiability != Verifiability::kExactAtDefault) out << "  [" << to_string(c.verifiability) << "]";
        out << "\n";
      }
      if (!r.note.empty()) out << "  note: " << r.note << "\n";
    }
    for (const auto& n : t.notes) out << "note: " << n << "\n";
    out << "MATCH " << t.count(CellStatus::kMatch) << ", BOUND-CONSISTENT " << t.count(CellStatus::kBoundConsistent)
        << ", MISMATCH " << t.count(CellStatus::kMismatch) << "\n";
  }
  return t.has_mismatch() ? kExitMismatch : kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic-code PIR toolkit", "cyclicpir"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Seed for randomized steps");
  app.add_option("--budget", g.budget, "Enumeration budget in codewords")->check(CLI::Range(std::uint64_t{1}, kHardBudgetCap));
  app.add_flag("--deep", g.deep, "Use the 2^29 enumeration budget");
  app.add_option("--transcript", g.transcript, "Write per-round JSON lines to this file ('-' for stdout)");

  std::uint32_t coset_n = 0, coset_q = 2;
  std::optional<std::uint32_t> coset_of;
  auto* coset = app.add_subcommand("coset", "List q-cyclotomic cosets mod n");
  coset->add_option("n", coset_n)->required();
  coset->add_option("--q", coset_q);
  coset->add_option("--of", coset_of, "Only the coset containing this residue");

  auto* code = app.add_subcommand("code", "Cyclic code queries");
  code->require_subcommand(1);
  std::string info_spec;
  bool info_defining = false;
  auto* info = code->add_subcommand("info", "Parameters, BCH bound and distance report");
  info->add_option("spec", info_spec, "q=<q> n=<n> cosets=<r1,r2,...>")->required();
  info->add_flag("--defining", info_defining, "Cosets describe the defining set instead of the generating set");

  std::string star_a, star_b;
  auto* star = app.add_subcommand("star", "Star product of two cyclic codes");
  star->add_option("first", star_a)->required();
  star->add_option("second", star_b)->required();

  std::string dual_spec;
  auto* dual = app.add_subcommand("dual", "Dual code");
  dual->add_option("spec", dual_spec)->required();

  auto* rm = app.add_subcommand("rm", "Reed-Muller codes");
  rm->require_subcommand(1);
  std::uint32_t rm_r = 0, rm_m = 0;
  bool rm_shortened = false;
  std::string rm_op;
  for (const char* name : {"build", "puncture", "shorten", "as-cyclic"}) {
    auto* s = rm->add_subcommand(name);
    s->add_option("r", rm_r, "Order (degree bound c for as-cyclic)")->required();
    s->add_option("m", rm_m)->required();
    if (std::string(name) == "as-cyclic") s->add_flag("--shortened", rm_shortened, "Leave out the zero coset");
    s->callback([&rm_op, name] { rm_op = name; });
  }

  auto* pir = app.add_subcommand("pir", "PIR scheme evaluation and simulation");
  pir->require_subcommand(1);
  std::string pc, pd;
  auto* eval = pir->add_subcommand("eval", "Scheme parameters for storage C and retrieval D");
  eval->add_option("C", pc)->required();
  eval->add_option("D", pd)->required();

  std::size_t sim_files = 2, sim_rows = 1;
  std::optional<std::size_t> sim_file;
  auto* sim = pir->add_subcommand("simulate", "Run the retrieval protocol on a random database");
  sim->add_option("C", pc)->required();
  sim->add_option("D", pd)->required();
  sim->add_option("--files", sim_files);
  sim->add_option("--rows", sim_rows, "Rows per file");
  sim->add_option("--file", sim_file, "Retrieve only this file index");

  std::size_t pc_t = 0;
  std::string pc_mode = "auto";
  std::uint64_t pc_trials = 10'000;
  auto* pcheck = pir->add_subcommand("privacy-check", "Every t columns of G_D independent");
  pcheck->add_option("D", pd)->required();
  pcheck->add_option("t", pc_t)->required();
  pcheck->add_option("--mode", pc_mode, "auto, exhaustive or sampled");
  pcheck->add_option("--trials", pc_trials);

  SearchArgs sa;
  std::uint64_t search_budget = 0;
  auto* search = app.add_subcommand("search", "Search coset-union pairs");
  search->add_option("--n", sa.n)->required();
  search->add_option("--q", sa.q);
  search->add_option("--c-cosets", sa.c_cosets, "Max cosets in C");
  search->add_option("--d-cosets", sa.d_cosets, "Max cosets in D");
  search->add_option("--pool", sa.pool, "Coset leaders to draw from (default: all)")->delimiter(',');
  search->add_option("--fixed-c", sa.fixed_c, "Fix C to this union of cosets")->delimiter(',');
  search->add_option("--objective", sa.objective, "privacy or rate");
  search->add_option("--min-rate", sa.min_rate, "Rate threshold p/q");
  search->add_option("--min-privacy", sa.min_privacy);
  search->add_flag("--no-prune", sa.no_prune, "Disable BCH pruning");
  search->add_option("--seconds", sa.seconds, "Time budget");
  search->add_option("--top", sa.top, "Rows to print");
  auto* search_budget_opt = search->add_option("--distance-budget", search_budget, "Per-candidate enumeration budget");

  int table_id = 0;
  std::vector<std::size_t> table_rows;
  auto* table = app.add_subcommand("table", "Recompute a printed table and diff it");
  table->add_option("id", table_id, "1, 3, 4, 5 or 7")->required();
  table->add_option("--rows", table_rows, "Only these rows (1-based)")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*coset) return run_coset(g, coset_n, coset_q, coset_of, out);
    if (*info) return run_code_info(g, info_spec, info_defining, out);
    if (*star) {
      const auto a = spec_arg(star_a), b = spec_arg(star_b);
      if (a.n() != b.n() || a.q() != b.q()) throw UsageError("codes differ in length or field");
      return print_code(g, star_product(a, b), out);
    }
    if (*dual) return print_code(g, dual_code(spec_arg(dual_spec)), out);
    if (*rm) return run_rm(g, rm_op, rm_r, rm_m, rm_shortened, out);
    if (*eval) return run_pir_eval(g, pc, pd, out);
    if (*sim) return run_pir_simulate(g, pc, pd, sim_files, sim_rows, sim_file, out);
    if (*pcheck) return run_privacy_check(g, pd, pc_t, pc_mode, pc_trials, out);
    if (*search) {
      if (*search_budget_opt) sa.budget = search_budget;
      return run_search(g, sa, out);
    }
    if (*table) return run_table(g, table_id, table_rows, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Domain errors from bad inputs (mismatched codes, invalid RM orders, ...).
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace cyclicpir
