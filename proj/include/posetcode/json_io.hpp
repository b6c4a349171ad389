#pragma once

#include <optional>

#include <json.hpp>

#include "posetcode/lattice_geometry.hpp"
#include "posetcode/predictor.hpp"
#include "posetcode/toric_code.hpp"

namespace posetcode {

// Insertion-ordered so that emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

// {"m": 3, "covers": [[1, 2], [1, 3]]}
Poset poset_from_json(const Json& j);
Json to_json(const Poset& p);
Json to_json(const Ideal& ideal);
Json to_json(const LatticePolytope& a);
Json to_json(const Prediction& prediction);
// Integers that fit in 64 bits become numbers, larger ones decimal strings.
Json to_json(const BigInt& value);

// Parameters of a code; the distance and witness are included when known.
Json code_report(const ToricCode& code, std::optional<double> seconds);

}  // namespace posetcode
