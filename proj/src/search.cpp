#include "cyclicpir/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

namespace cyclicpir {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::vector<std::uint32_t>> unions_up_to(const std::vector<std::uint32_t>& pool, std::size_t cap) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  // Depth-first over a sorted pool emits the unions in lexicographic order.
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      out.push_back(cur);
      if (cur.size() < cap) rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::uint32_t> normalize_pool(const SearchSpec& spec) {
  std::vector<std::uint32_t> pool = spec.pool;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (auto r : pool) {
    if (r >= spec.n || coset_leader(r, spec.n, spec.q) != r) {
      throw SearchError("pool entry " + std::to_string(r) + " is not a coset leader mod " + std::to_string(spec.n));
    }
  }
  return pool;
}

}  // namespace

std::vector<std::uint32_t> full_pool(std::uint32_t n, std::uint32_t q) { return coset_representatives(n, q); }

std::vector<bool> pareto_marks(const std::vector<PirParameters>& schemes) {
  std::vector<std::size_t> order(schemes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return schemes[a].rate > schemes[b].rate; });
  std::vector<bool> marks(schemes.size(), true);
  std::int64_t best_above = -1;  // max proven privacy among strictly higher rates
  for (std::size_t g = 0; g < order.size();) {
    std::size_t e = g;
    std::int64_t group_best = -1;
    while (e < order.size() && schemes[order[e]].rate == schemes[order[g]].rate) {
      group_best = std::max<std::int64_t>(group_best, schemes[order[e]].privacy_lo);
      ++e;
    }
    const auto best_here = std::max(best_above, group_best);
    for (std::size_t i = g; i < e; ++i) {
      const std::int64_t hi = schemes[order[i]].privacy_hi;
      if (best_above >= hi || best_here > hi) marks[order[i]] = false;
    }
    best_above = best_here;
    g = e;
  }
  return marks;
}

SearchResult search_pir_codes(const SearchSpec& spec) {
  SearchResult result;
  if (spec.n == 0) throw SearchError("search length must be positive");
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(spec.time_budget_seconds));
  const auto pool = normalize_pool(spec);
  if (pool.empty() && !spec.fixed_c) return result;

  // Every leader that may appear, with its coset as a residue set.
  std::vector<std::uint32_t> leaders = pool;
  std::vector<std::vector<std::uint32_t>> c_unions;
  if (spec.fixed_c) {
    auto fixed = code_from_cosets(*spec.fixed_c, spec.n, spec.q).coset_labels();
    if (fixed.empty()) throw SearchError("fixed storage code is the zero code");
    leaders.insert(leaders.end(), fixed.begin(), fixed.end());
    c_unions.push_back(std::move(fixed));
  } else {
    c_unions = unions_up_to(pool, spec.max_c_cosets);
  }
  std::sort(leaders.begin(), leaders.end());
  leaders.erase(std::unique(leaders.begin(), leaders.end()), leaders.end());
  std::map<std::uint32_t, std::size_t> slot;
  std::vector<ResidueSet> coset_sets;
  for (auto r : leaders) {
    slot[r] = coset_sets.size();
    const auto members = cyclotomic_coset(r, spec.n, spec.q);
    coset_sets.emplace_back(spec.n, members);
  }
  std::vector<std::vector<ResidueSet>> sums(leaders.size(), std::vector<ResidueSet>(leaders.size()));
  for (std::size_t a = 0; a < leaders.size(); ++a)
    for (std::size_t b = 0; b < leaders.size(); ++b) sums[a][b] = coset_sets[a].minkowski_sum(coset_sets[b]);

  const auto d_unions = unions_up_to(pool, spec.max_d_cosets);

  struct Pair {
    std::size_t c, d;
    ResidueSet star;
  };
  std::vector<Pair> feasible;
  std::vector<char> d_needed(d_unions.size(), 0);
  bool out_of_time = false;
  for (std::size_t di = 0; di < d_unions.size() && !out_of_time; ++di) {
    const auto d = code_from_cosets(d_unions[di], spec.n, spec.q);
    result.pairs_considered += c_unions.size();
    if (spec.bch_pruning && spec.min_privacy > 0) {
      const auto bch = bch_bound(dual_code(d));
      if (bch < spec.min_privacy + 1) {
        result.pruned_bch += c_unions.size();
        continue;
      }
    }
    for (std::size_t ci = 0; ci < c_unions.size(); ++ci) {
      ResidueSet star(spec.n);
      for (auto a : c_unions[ci])
        for (auto b : d_unions[di]) star |= sums[slot[a]][slot[b]];
      const auto u = static_cast<std::int64_t>(spec.n - star.size());
      if (u == 0 || Rate{u, spec.n} < spec.min_rate) {
        ++result.pruned_rate;
        continue;
      }
      feasible.push_back({ci, di, std::move(star)});
      d_needed[di] = 1;
    }
    if ((di & 255) == 0 && Clock::now() > deadline) out_of_time = true;
  }
  result.partial = out_of_time;
  // Ties keep lexicographic (C, D) order; the union lists are already sorted.
  std::sort(feasible.begin(), feasible.end(),
            [](const Pair& a, const Pair& b) { return std::tie(a.c, a.d) < std::tie(b.c, b.d); });

  // Distance work per distinct D, in parallel; each slot is written by one worker.
  std::vector<std::size_t> work;
  for (std::size_t di = 0; di < d_unions.size(); ++di)
    if (d_needed[di]) work.push_back(di);
  std::vector<std::optional<CodeSummary>> dual_summary(d_unions.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> expired{false};
  auto worker = [&] {
    DistanceOptions opts = spec.distance;
    opts.threads = 1;
    for (std::size_t i = next++; i < work.size(); i = next++) {
      if (Clock::now() > deadline) {
        expired = true;
        return;
      }
      const auto d = code_from_cosets(d_unions[work[i]], spec.n, spec.q);
      dual_summary[work[i]] = summarize(dual_code(d), opts);
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work.size(), 1)));
  std::vector<std::thread> pool_threads;
  for (unsigned t = 1; t < threads; ++t) pool_threads.emplace_back(worker);
  worker();
  for (auto& t : pool_threads) t.join();
  if (expired) result.partial = true;

  std::vector<PirParameters> params;
  std::vector<const Pair*> kept;
  for (const auto& pr : feasible) {
    if (!dual_summary[pr.d]) continue;
    const auto c = code_from_cosets(c_unions[pr.c], spec.n, spec.q);
    const auto d = code_from_cosets(d_unions[pr.d], spec.n, spec.q);
    const auto star = CyclicCodeSpec::from_generating_set(spec.q, pr.star);
    PirParameters p;
    p.n = spec.n;
    p.storage = summarize_dimensions(c);
    p.retrieval = summarize_dimensions(d);
    p.retrieval_dual = *dual_summary[pr.d];
    p.star = summarize_dimensions(star);
    p.star_dual = summarize_dimensions(dual_code(star));
    set_privacy(p, p.retrieval_dual.distance);
    if (p.privacy_lo < spec.min_privacy) continue;
    p.retrieved_per_round = p.star_dual.k;
    p.rate = Rate{static_cast<std::int64_t>(p.retrieved_per_round), spec.n};
    params.push_back(std::move(p));
    kept.push_back(&pr);
  }
  result.distance_evaluations =
      static_cast<std::uint64_t>(std::count_if(dual_summary.begin(), dual_summary.end(), [](const auto& s) { return s.has_value(); }));

  const auto marks = pareto_marks(params);
  std::vector<std::size_t> order(params.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = params[a];
    const auto& y = params[b];
    if (spec.objective == SearchObjective::kMaxRate) {
      if (x.rate != y.rate) return x.rate > y.rate;
      return x.privacy_lo > y.privacy_lo;
    }
    if (x.privacy_lo != y.privacy_lo) return x.privacy_lo > y.privacy_lo;
    return x.rate > y.rate;
  });
  for (auto i : order) {
    result.hits.push_back({c_unions[kept[i]->c], d_unions[kept[i]->d], params[i], marks[i]});
  }
  return result;
}

}  // namespace cyclicpir
