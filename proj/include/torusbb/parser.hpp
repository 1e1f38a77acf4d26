#pragma once

#include <string>
#include <string_view>

#include "torusbb/polynomial.hpp"

namespace torusbb {

/// Parses
///
///   poly   := ['-'] term (('+' | '-') term)*
///   term   := [coeff '*'] factor ('*' factor)* | coeff
///   factor := ident ['^' nat]
///   coeff  := int ['/' posint]
///
/// with optional whitespace between tokens. Throws SyntaxError (location is
/// the byte offset), UnknownVariable (location is the name) or Overflow for
/// exponents above 2^31-1.
GradedPolynomial parse_polynomial(std::string_view text, const VariableWeighting& ring);

/// A single monomial such as "x^2*y"; "1" is the unit monomial.
Monomial parse_monomial(std::string_view text, const VariableWeighting& ring);

/// Canonical text form; parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const GradedPolynomial& p, const VariableWeighting& ring);
std::string format_monomial(const Monomial& m, const VariableWeighting& ring);

}  // namespace torusbb
