#pragma once

#include <string>
#include <string_view>

#include "fbeta/scalar.hpp"

namespace fbeta {

// Text form of scalars, shared by the renderer, the config reader and the
// CLI. Grammar (whitespace free between tokens):
//
//   element  := numer [ '/' '(' poly ')' ]
//   numer    := poly | '(' poly ')'
//   poly     := [ '-' ] term ( ('+' | '-') term )*
//   term     := factor ( '*' factor )*
//   factor   := rational | param [ '^' exponent ]
//   rational := integer [ '/' posint ]
//   exponent := sint [ '/' posint ] | '(' sint [ '/' posint ] ')'
//   param    := ident [ '[' int ( ',' int )* ']' ]
//
// A '/' followed by '(' always separates numerator from denominator; a '/'
// followed by a digit continues a rational. Parameter names may carry a
// bracketed integer index list which is part of the name ("q[1,2]").
// The renderer emits terms in descending monomial order and parenthesizes
// fractional exponents, so rendered output reparses to an equal scalar.

std::string render(const Rat& c);
std::string render(const Monomial& m, const ParamTable& pt);
std::string render(const LaurentPoly& p);
std::string render(const FieldElem& x);

// Parses per the grammar above against the given table. Unknown parameter
// names raise ConfigError; syntax errors raise ParseError with 1-based
// line/column. A null table admits only the built-in v.
FieldElem parse_scalar(std::string_view text, const ParamTablePtr& pt);

}  // namespace fbeta
