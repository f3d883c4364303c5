#pragma once

#include <json.hpp>

#include "rooks/combinatorics.hpp"
#include "rooks/plfn.hpp"
#include "rooks/random.hpp"

namespace rooks {

using nlohmann::json;

/// {"k":3,"values":[3,3,1],"slopes":[0,0,-2]}. "k" may be omitted when the
/// caller supplies it; a mismatch throws std::invalid_argument.
json to_json(const CombinatorialFn& f);
CombinatorialFn combinatorial_fn_from_json(const json& j, std::optional<std::int64_t> k = std::nullopt);

/// Rationals as "p/q" strings; breakpoint values as "point: value" entries.
json to_json(const PiecewiseLinearFn& f);
/// Same layout with JSON numbers for slopes and values and "mode":"float".
json to_json(const FloatPiecewiseLinearFn& f);
PiecewiseLinearFn piecewise_fn_from_json(const json& j);
FloatPiecewiseLinearFn float_piecewise_fn_from_json(const json& j);
/// True when the payload carries "mode":"float".
bool is_float_mode(const json& j);

json to_json(const FunctionClasses& c);
json to_json(const DropTuple& t);
/// Matrix of "p/q" strings, one array per row from the top.
json to_json(const MarginalMatrix& m);

}  // namespace rooks
