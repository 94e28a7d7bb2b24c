#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace repstab {

// Exact arbitrary-precision rational scalar.  GMP supplies the bignum layer;
// every numeric quantity in this project is either one of these or an F_p
// residue stored canonically inside one (see FieldSpec).  No floating point
// anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den with den != 0, canonicalized (gcd 1, den > 0).
Rational make_rational(long num, long den = 1);

// Accepts "a", "-a" and "a/b" with decimal digits; anything else (including
// whitespace, "+", hex, a zero denominator) is rejected with bad_input.
Rational parse_rational(std::string_view text);

// Canonical form: "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& value);

int sign(const Rational& value);
bool is_integer(const Rational& value);

// Requires an integer value that fits in long long; bad_input otherwise.
long long to_longlong(const Rational& value);

}  // namespace repstab
