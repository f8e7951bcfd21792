#pragma once

#include <json.hpp>

#include "srlab/code.hpp"
#include "srlab/polynomial.hpp"
#include "srlab/sumrank.hpp"

namespace srlab {

using Json = nlohmann::ordered_json;

// {"characteristic": p, "tower": [{"degree": d, "modulus": [constant first]}, ...]}
Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

// {"q_tower": ..., "n": n, "generator": [[...], ...]}
Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

// {"q_tower": ..., "blocks": [[m, n], ...], "generator": [[...], ...]}
Json srcode_to_json(const SumRankCode& c);
SumRankCode srcode_from_json(const Json& j);

// {"q_tower": ..., "coeffs": [constant first]}
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j, const FieldPtr& fallback = nullptr);

}  // namespace srlab
