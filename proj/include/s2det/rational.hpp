#pragma once

#include <gmpxx.h>

#include <string>

namespace s2det {

// Exact rational scalar. Everything in this library computes over Rat;
// there is no floating point anywhere.
using Rat = mpq_class;

// Parses "5", "-12", "-3/7". Throws FormatError on anything else
// (including a zero denominator). The result is canonicalized.
Rat rat_from_string(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0
// and gcd(p, q) = 1.
std::string rat_to_string(const Rat& value);

} // namespace s2det
