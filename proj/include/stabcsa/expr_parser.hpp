#pragma once

#include <string>

#include "stabcsa/ratfunc.hpp"

namespace stabcsa {

// Parses polynomial / rational-function expressions over the variables
// x1..xA, y1..yA, t1..tN, the literal i, integers, and + - * / ^ ( ).
// Used by the CLI to read datum files and candidate Pfister vectors.
// Throws ParseError with line/column on malformed input.
RatFunc parse_ratfunc(const std::string& text);

// As above, but rejects expressions with a nontrivial denominator.
MultiPoly parse_poly(const std::string& text);

}  // namespace stabcsa
