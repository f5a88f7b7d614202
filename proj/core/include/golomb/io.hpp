#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "golomb/bolts2d.hpp"
#include "golomb/chebyshev.hpp"
#include "golomb/cycle.hpp"
#include "golomb/grid.hpp"
#include "golomb/measure.hpp"

// JSON / CSV formats. Rationals are always canonical "p/q" strings; parsing
// also accepts JSON integers. Malformed input raises InputError.

namespace golomb::io {

using nlohmann::json;

json to_json(const Rat& value);
Rat rat_from_json(const json& j);

json to_json(const GridPoint& p);
GridPoint point_from_json(const json& j);

/// {"shape":[s1,...,sn], "values":["p/q",...]} (row-major)
json to_json(const TabulatedFunction& f);
TabulatedFunction function_from_json(const json& j);

/// n = 2 table: one line per x1 value, comma-separated x2 values.
TabulatedFunction function_from_csv(std::string_view text);

/// Dispatches on content: a leading '{' means JSON, otherwise CSV.
TabulatedFunction parse_function(std::string_view text);

/// {"shape":[...], "atoms":[{"point":[...], "mass":"p/q"},...]}
json to_json(const FiniteSignedMeasure& mu);
FiniteSignedMeasure measure_from_json(const json& j);

/// {"points":[[...],...], "lambda":["p/q",...]}
json to_json(const CycleVectorPair& pair);
json to_json(const MinimalCycle& cycle);
CycleVectorPair pair_from_json(const json& j, const ProductGrid& grid);

/// {"b":[[...],...], "c":[[...],...]}
json to_json(const GolombCycle& gc);
GolombCycle golomb_from_json(const json& j, const ProductGrid& grid);

/// {"vertices":[[x,y],...], "closed":true|false}
json to_json(const ClosedBolt& bolt, const ProductGrid& grid);

json to_json(const SeparableSum& g);
json to_json(const ApproximationResult& result);
json to_json(const GolombReport& report);
json to_json(const Decomposition& decomposition);
json to_json(const BoltReport& report, const ProductGrid& grid);

}  // namespace golomb::io
