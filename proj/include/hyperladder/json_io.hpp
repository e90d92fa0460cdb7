#pragma once

#include "hyperladder/family.hpp"
#include "hyperladder/hilbert.hpp"
#include "hyperladder/ladder.hpp"

#include <json.hpp>

namespace hyperladder {

using Json = nlohmann::json;

/// ["p/q", ...], lowest degree first.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// Rationals are accepted as "p/q" strings or as JSON integers; floats are refused.
Rational rational_from_json(const Json& j);

/// {"family": "jacobi", "alpha": "1/2", "beta": "3/2"} with optional "normalization": "monic".
FamilySpec family_from_json(const Json& j);
Json family_to_json(const FamilySpec& family);

/// {"identity": ..., "family": ..., "l": ..., "m": ..., "status": "pass"|"fail", "residual": "p/q"}
Json report_to_json(const LadderReport& report);
Json identity_to_json(const IdentityResult& result, const std::string& family);

}  // namespace hyperladder
