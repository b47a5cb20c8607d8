#include "cyclicpir/pir_scheme.hpp"

#include <algorithm>

namespace cyclicpir {

Rate Rate::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw SchemeError("rate must look like p/q: " + text);
  Rate r{std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
  if (r.den <= 0) throw SchemeError("rate denominator must be positive");
  return r;
}

CodeSummary summarize_dimensions(const CyclicCodeSpec& code) {
  CodeSummary s;
  s.spec = format_code_spec(code);
  s.n = code.n();
  s.k = code.dimension();
  s.distance.method = "not-computed";
  s.distance.lower = 1;
  s.distance.upper = kInfiniteDistance;
  return s;
}

CodeSummary summarize(const CyclicCodeSpec& code, const DistanceOptions& options) {
  CodeSummary s = summarize_dimensions(code);
  s.distance = min_distance(code, options);
  return s;
}

void set_privacy(PirParameters& p, const DistanceReport& dual_distance) {
  auto minus_one = [](std::uint32_t d) { return d == kInfiniteDistance ? d : d - 1; };
  p.privacy_lo = minus_one(dual_distance.lower);
  p.privacy_hi = minus_one(dual_distance.upper);
  p.privacy_exact = dual_distance.exact;
}

PirParameters evaluate_scheme(const CyclicCodeSpec& c, const CyclicCodeSpec& d,
                              const SchemeOptions& options) {
  if (c.n() != d.n() || c.q() != d.q()) {
    throw SchemeError("storage and retrieval codes have different length or field");
  }
  if (c.dimension() == 0) throw SchemeError("storage code is the zero code");
  const auto star = star_product(c, d);
  if (star.dimension() == star.n()) {
    throw SchemeError("star product fills the space: dim(C*D) = n, nothing is retrievable");
  }
  const auto d_dual = dual_code(d);
  const auto star_dual = dual_code(star);

  PirParameters p;
  p.n = c.n();
  p.retrieval_dual = summarize(d_dual, options.distance);
  if (options.all_distances) {
    p.storage = summarize(c, options.distance);
    p.retrieval = summarize(d, options.distance);
    p.star = summarize(star, options.distance);
    p.star_dual = summarize(star_dual, options.distance);
  } else {
    p.storage = summarize_dimensions(c);
    p.retrieval = summarize_dimensions(d);
    p.star = summarize_dimensions(star);
    p.star_dual = summarize_dimensions(star_dual);
  }
  set_privacy(p, p.retrieval_dual.distance);
  p.retrieved_per_round = star_dual.dimension();
  p.rate = Rate{static_cast<std::int64_t>(p.retrieved_per_round), static_cast<std::int64_t>(p.n)};
  return p;
}

bool dominates(const PirParameters& a, const PirParameters& b) {
  const bool privacy_ge = a.privacy_lo >= b.privacy_hi;
  const bool privacy_gt = a.privacy_lo > b.privacy_hi;
  const bool rate_ge = a.rate >= b.rate;
  const bool rate_gt = a.rate > b.rate;
  return privacy_ge && rate_ge && (privacy_gt || rate_gt);
}

std::vector<RankedScheme> compare_schemes(const std::vector<PirParameters>& schemes) {
  for (const auto& s : schemes) {
    if (!schemes.empty() && s.n != schemes.front().n) throw SchemeError("compared schemes differ in n");
  }
  std::vector<RankedScheme> rows;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    rows.push_back({schemes[i], i, true, !schemes[i].privacy_exact});
  }
  for (auto& r : rows) {
    for (const auto& other : schemes) {
      if (dominates(other, r.params)) {
        r.pareto = false;
        break;
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const RankedScheme& a, const RankedScheme& b) {
    if (a.params.privacy_lo != b.params.privacy_lo) return a.params.privacy_lo > b.params.privacy_lo;
    return a.params.rate > b.params.rate;
  });
  return rows;
}

std::vector<RankedScheme> compare_schemes(const std::vector<std::pair<CyclicCodeSpec, CyclicCodeSpec>>& pairs,
                                          const SchemeOptions& options) {
  std::vector<PirParameters> params;
  for (const auto& [c, d] : pairs) params.push_back(evaluate_scheme(c, d, options));
  return compare_schemes(params);
}

}  // namespace cyclicpir
