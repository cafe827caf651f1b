#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bs/errors.hpp"

namespace bs {

using Int = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or "p" (optional leading minus on p). Throws ParseError.
Rational parse_rational(const std::string& s);

// Canonical lowest-terms text: "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Smallest positive rational s such that s*v is an integer for every v in
// vals and the resulting integers have gcd 1. Returns 1 for all-zero input.
Rational primitive_scale_factor(const std::vector<Rational>& vals);

} // namespace bs
