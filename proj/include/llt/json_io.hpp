#pragma once

#include <json.hpp>

#include "llt/symmetric.hpp"
#include "llt/xqpoly.hpp"

namespace llt {

using Json = nlohmann::ordered_json;

/// [c0, c1, ...]; coefficients outside the int64 range become decimal strings.
Json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

/// {"nvars": N, "terms": [{"exps": [...], "q": [...]}]}, terms in
/// descending exponent order.
Json poly_to_json(const XQPoly& p);
XQPoly poly_from_json(const Json& j);

/// {"basis": "s", "terms": [{"partition": [...], "q": [...]}]}
Json expansion_to_json(const SymExpansion& e);

}  // namespace llt
