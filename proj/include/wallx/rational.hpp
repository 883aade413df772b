#pragma once

#include <gmpxx.h>

#include <string>

namespace wallx {

using Rational = mpq_class;

// Accepts "a" or "a/b" with optional leading '-', b > 0. Canonicalizes.
Rational rat_from_string(const std::string& s);

// Canonical form, "a" or "a/b" with b > 1.
std::string rat_to_string(const Rational& r);

// b^e for integer e; e < 0 requires b != 0.
Rational rat_pow(const Rational& b, long e);

} // namespace wallx
