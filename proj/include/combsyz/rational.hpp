#pragma once

#include <gmpxx.h>

#include <string>

namespace combsyz {

// All verdict-relevant arithmetic is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = mpz_class;
using Rat = mpq_class;

// num/den in canonical (lowest-terms, positive-denominator) form.
Rat make_rat(const Int& num, const Int& den);

// Accepts "p" or "p/q" in base 10 with optional sign.
Rat parse_rat(const std::string& text);

// Lowest terms; "p" when the denominator is 1, otherwise "p/q".
std::string rat_string(const Rat& value);

std::string int_string(const Int& value);

}  // namespace combsyz
