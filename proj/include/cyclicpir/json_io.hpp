#pragma once

#include <json.hpp>

#include "cyclicpir/distance.hpp"
#include "cyclicpir/pir_protocol.hpp"
#include "cyclicpir/pir_scheme.hpp"
#include "cyclicpir/search.hpp"
#include "cyclicpir/tables.hpp"

namespace cyclicpir {

using Json = nlohmann::ordered_json;

// An infinite distance (zero code, or nothing found) is written as null.
void to_json(Json& j, const DistanceReport& r);
void from_json(const Json& j, DistanceReport& r);

void to_json(Json& j, const CodeSummary& s);
void from_json(const Json& j, CodeSummary& s);

/// {n, C, D, Ddual, star, stardual, privacy{lo,hi,exact}, retrieved_per_round, rate "u/n"}
void to_json(Json& j, const PirParameters& p);
void from_json(const Json& j, PirParameters& p);

void to_json(Json& j, const WeightDistribution& w);  // counts as decimal strings
void to_json(Json& j, const PrivacyVerdict& v);
void to_json(Json& j, const TranscriptEntry& e);
void to_json(Json& j, const CellReport& c);
void to_json(Json& j, const RowReport& r);
void to_json(Json& j, const TableReport& t);
void to_json(Json& j, const SearchHit& h);
void to_json(Json& j, const SearchResult& r);

}  // namespace cyclicpir
