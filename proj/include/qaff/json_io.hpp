#pragma once

// JSON forms of the exact types: integer coefficients as decimal strings,
// Laurent exponents as integers, half-integer exponents as doubled integers.

#include <json.hpp>

#include "qaff/series.hpp"

namespace qaff {

using Json = nlohmann::json;

Json to_json(const VPoly& p);
Json to_json(const VFrac& f);
Json to_json(const FieldElement& x);
Json to_json(const ZPolyF& p);
Json to_json(const MatZ& m);
Json to_json(const CartanData& d);
Json to_json(const Violation& v);
Json to_json(const ViolationReport& r);
Json to_json(const RMatrix& r);
Json to_json(const YbeReport& r);
Json to_json(const FormalSeries& s);
Json to_json(const DoubleSwapReport& r);

VPoly vpoly_from_json(const Json& j);
FieldElement field_from_json(const Json& j);

// Fingerprint of the artifact's pinned conventions; embedded in every output
// and in the Fock cache key.
std::uint64_t convention_ledger_hash();
std::string convention_ledger_text();

}  // namespace qaff
