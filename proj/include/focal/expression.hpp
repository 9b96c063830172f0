#pragma once

#include <map>
#include <string>
#include <string_view>

#include "focal/rational.hpp"

namespace focal {

// Polynomial over named symbols, the neutral result of parsing a formula.
// Callers split symbols into parameters and ring generators.
using SymbolMonomial = std::map<std::string, unsigned>;
using FreePoly = std::map<SymbolMonomial, Rational>;

// Grammar: sums and products of rational literals, identifiers, parentheses
// and non-negative integer powers. Division is allowed by constants only.
// Identifiers may contain letters, digits, '_' and trailing primes.
FreePoly parse_free_poly(std::string_view text);

}  // namespace focal
