#include "cyclicpir/json_io.hpp"

#include <cstdio>

namespace cyclicpir {

namespace {

Json distance_value(std::uint32_t d) { return d == kInfiniteDistance ? Json(nullptr) : Json(d); }

std::uint32_t distance_from(const Json& j) { return j.is_null() ? kInfiniteDistance : j.get<std::uint32_t>(); }

}  // namespace

void to_json(Json& j, const DistanceReport& r) {
  j = Json{{"exact", r.exact},
           {"lower", distance_value(r.lower)},
           {"upper", distance_value(r.upper)},
           {"method", r.method},
           {"budget", r.budget},
           {"seed", r.seed},
           {"enumerated", r.enumerated}};
}

void from_json(const Json& j, DistanceReport& r) {
  r.exact = j.at("exact").get<bool>();
  r.lower = distance_from(j.at("lower"));
  r.upper = distance_from(j.at("upper"));
  r.method = j.at("method").get<std::string>();
  r.budget = j.at("budget").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.enumerated = j.value("enumerated", std::uint64_t{0});
}

void to_json(Json& j, const CodeSummary& s) {
  j = Json{{"spec", s.spec}, {"n", s.n}, {"k", s.k}, {"distance", s.distance}};
}

void from_json(const Json& j, CodeSummary& s) {
  s.spec = j.at("spec").get<std::string>();
  s.n = j.at("n").get<std::uint32_t>();
  s.k = j.at("k").get<std::size_t>();
  s.distance = j.at("distance").get<DistanceReport>();
}

void to_json(Json& j, const PirParameters& p) {
  j = Json{{"n", p.n},
           {"C", p.storage},
           {"D", p.retrieval},
           {"Ddual", p.retrieval_dual},
           {"star", p.star},
           {"stardual", p.star_dual},
           {"privacy", {{"lo", distance_value(p.privacy_lo)}, {"hi", distance_value(p.privacy_hi)}, {"exact", p.privacy_exact}}},
           {"retrieved_per_round", p.retrieved_per_round},
           {"rate", p.rate.to_string()}};
}

void from_json(const Json& j, PirParameters& p) {
  p.n = j.at("n").get<std::uint32_t>();
  p.storage = j.at("C").get<CodeSummary>();
  p.retrieval = j.at("D").get<CodeSummary>();
  p.retrieval_dual = j.at("Ddual").get<CodeSummary>();
  p.star = j.at("star").get<CodeSummary>();
  p.star_dual = j.at("stardual").get<CodeSummary>();
  const auto& pr = j.at("privacy");
  p.privacy_lo = distance_from(pr.at("lo"));
  p.privacy_hi = distance_from(pr.at("hi"));
  p.privacy_exact = pr.at("exact").get<bool>();
  p.retrieved_per_round = j.at("retrieved_per_round").get<std::size_t>();
  p.rate = Rate::parse(j.at("rate").get<std::string>());
}

void to_json(Json& j, const WeightDistribution& w) {
  Json counts = Json::array();
  for (const auto& c : w.counts) counts.push_back(c.str());
  const char* source = w.source == DistributionSource::kEnumeration   ? "enumeration"
                       : w.source == DistributionSource::kMacWilliams ? "macwilliams"
                                                                      : "partial";
  j = Json{{"n", w.n}, {"q", w.q}, {"source", source}, {"counts", counts}};
}

void to_json(Json& j, const PrivacyVerdict& v) {
  j = Json{{"pass", v.pass}, {"mode", to_string(v.mode)}, {"subsets_checked", v.subsets_checked}};
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
}

void to_json(Json& j, const TranscriptEntry& e) {
  Json recovered = Json::array();
  for (const auto& [coord, value] : e.recovered) recovered.push_back({coord, value});
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(e.queries_digest));
  j = Json{{"round", e.round},
           {"target_row", e.target_row},
           {"S", e.s},
           {"queries_digest", digest},
           {"responses", e.responses},
           {"recovered", recovered}};
}

void to_json(Json& j, const CellReport& c) {
  j = Json{{"column", c.column},
           {"field", c.field},
           {"expected", c.expected},
           {"computed", c.computed},
           {"status", to_string(c.status)},
           {"verifiability", to_string(c.verifiability)}};
  j["bch"] = c.bch ? Json(*c.bch) : Json(nullptr);
}

void to_json(Json& j, const RowReport& r) {
  j = Json{{"row", r.index},
           {"bold", r.bold},
           {"C", r.c_spec},
           {"D", r.d_spec},
           {"parameters", r.computed},
           {"cells", r.cells}};
  if (!r.note.empty()) j["note"] = r.note;
}

void to_json(Json& j, const TableReport& t) {
  j = Json{{"table", t.id},
           {"title", t.title},
           {"budget", t.budget},
           {"rows", t.rows},
           {"notes", t.notes},
           {"summary",
            {{"match", t.count(CellStatus::kMatch)},
             {"bound_consistent", t.count(CellStatus::kBoundConsistent)},
             {"mismatch", t.count(CellStatus::kMismatch)}}}};
}

void to_json(Json& j, const SearchHit& h) {
  j = Json{{"C_cosets", h.c_cosets}, {"D_cosets", h.d_cosets}, {"pareto", h.pareto}, {"parameters", h.params}};
}

void to_json(Json& j, const SearchResult& r) {
  j = Json{{"partial", r.partial},
           {"pairs_considered", r.pairs_considered},
           {"pruned_bch", r.pruned_bch},
           {"pruned_rate", r.pruned_rate},
           {"distance_evaluations", r.distance_evaluations},
           {"hits", r.hits}};
}

}  // namespace cyclicpir
