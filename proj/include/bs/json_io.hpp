#pragma once

#include <string>

#include <json.hpp>

#include "bs/betti.hpp"
#include "bs/cohomology.hpp"
#include "bs/decompose.hpp"
#include "bs/pairing.hpp"

namespace bs {

using json = nlohmann::json;

// {"n": int, "entries": [{"col": i, "deg": j, "value": "p/q"}, ...]}
json to_json(const BettiTable& b);
BettiTable betti_from_json(const json& j);

// {"m": int, "window": [lo, hi], "complete": bool,
//  "values": [{"row": i, "twist": d, "value": "p/q"}, ...],
//  "tail_high": ["c0", ...], "tail_low": [...]}
json to_json(const CohomologyTable& c);
CohomologyTable cohomology_from_json(const json& j);

// {"orientation": "betti"|"cohomology", "n"/"m": int, "window": [lo, hi],
//  "coefficients": [{"col","deg","value"} | {"row","twist","value"}, ...]}
json to_json(const Functional& f);
Functional functional_from_json(const json& j);

json to_json(const BettiDecomposition& d);
json to_json(const CohomologyDecomposition& d);

// Parse helpers that throw ParseError with context on malformed input.
json parse_json_text(const std::string& text);

} // namespace bs
