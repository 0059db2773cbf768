#pragma once

#include <string>
#include <string_view>

#include "fbeta/datum.hpp"

namespace fbeta {

// Instance files are JSON with scalar entries in the text grammar of
// fbeta/text.hpp. Two shapes:
//
//   preset:  { "preset": <family>, "datum": {...}, ...family inputs... }
//   custom:  { "label": <string>, "datum": {...}, "params": [...],
//              "beta": [[...]], "alpha": [[...]],
//              "gamma": [[...]]?, "xi": [[...]]? }
//
// datum: { "dot": [[int]], "parity": [0/1]?, "labels": [string]? }
// params: [ { "name": s, "kind": "free"|"torsion", "square": +-1? } ],
// with "exp_den_bound" (default 4) bounding exponent denominators.
// Family inputs: two_parameter takes "omega" ([[int]], defaulting to the
// upper-triangular refinement of dot) and "alt_gamma"; super takes
// "alt_gamma"; multi_parameter takes nothing; multi_super_I takes
// "params", "p_diag" ([scalar]), "p" and "s" tables; multi_super_II takes
// "params" and "s_tilde".
//
// Malformed JSON raises ParseError with line/column; schema and table
// violations raise ConfigError naming the offending field.
AlgebraInstance parse_instance(std::string_view text,
                               const std::string& origin = "<string>");
AlgebraInstance load_instance(const std::string& path);

}  // namespace fbeta
