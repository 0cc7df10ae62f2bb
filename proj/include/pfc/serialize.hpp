#pragma once

// JSON records for families, curve instances and transcripts. Big integers
// and rationals are decimal strings, polynomials use the repo text format.

#include <json.hpp>

#include "pfc/curvegen.hpp"
#include "pfc/family.hpp"

namespace pfc {

using Json = nlohmann::ordered_json;

Json to_json(const NormalizationMap& m);
Json to_json(const PrimeRepresentation& p);
Json to_json(const FamilyReport& r);
Json to_json(const FamilyCandidate& c);
Json to_json(const ScanCounters& c);
Json to_json(const CurveInstance& inst);
Json to_json(const Transcript& t);

/// Rebuilds the candidate from u, r and m and checks any stored t, y, q
/// against it. Throws std::invalid_argument on malformed or inconsistent input.
FamilyCandidate family_from_json(const Json& j);

/// Throws std::invalid_argument on malformed input.
CurveInstance instance_from_json(const Json& j);

/// Fixed 4-decimal rendering used for rho(E) and lg values.
std::string fixed4(double v);

}  // namespace pfc
