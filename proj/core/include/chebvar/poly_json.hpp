#pragma once

#include <nlohmann/json.hpp>

#include <variant>

#include "chebvar/bipoly.hpp"
#include "chebvar/unipoly.hpp"

namespace chebvar {

using json = nlohmann::json;

/// {"vars": ["x","y"], "terms": [[ex, ey, "coeff"], ...]}, terms in the
/// text rendering order, coefficients as decimal strings.
json to_json(const BiPoly& p);
/// Univariate form of the same encoding: {"vars": ["z"], "terms": [[e, "coeff"], ...]},
/// exponents descending.
json to_json(const UniPoly& p);

/// Inverse of to_json. Extra keys in the object are ignored. Throws ParseError.
BiPoly bipoly_from_json(const json& j);
UniPoly unipoly_from_json(const json& j);
/// Dispatches on the length of "vars".
std::variant<UniPoly, BiPoly> poly_from_json(const json& j);

}  // namespace chebvar
