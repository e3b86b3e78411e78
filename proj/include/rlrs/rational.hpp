#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlrs {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised for malformed user input (bad rationals, inconsistent orders, ...).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts "p/q", "p" and finite decimals such as "-1.25".
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise, q > 0.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Fixed-point decimal rendering with `digits` fractional digits (rounded to nearest).
std::string to_decimal(const Rational& q, int digits);

int sign(const Rational& q);
Rational abs(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Rational pow(const Rational& q, unsigned long e);
Rational pow2(long e);

// Dyadic rounding to a multiple of 2^-bits.
Rational round_down(const Rational& q, long bits);
Rational round_up(const Rational& q, long bits);
// Rounds |q| outward keeping `bits` significant bits (q > 0).
Rational round_up_rel(const Rational& q, long bits);
Rational round_down_rel(const Rational& q, long bits);

// Directed square roots of q >= 0, accurate to about `bits` significant bits.
Rational sqrt_down(const Rational& q, long bits);
Rational sqrt_up(const Rational& q, long bits);

// floor(log2 |q|) for q != 0.
long ilog2(const Rational& q);

// Best rational approximations (continued-fraction convergents) of q with denominators <= max_den.
Rational nearest_simple(const Rational& q, const Integer& max_den);

long double to_ld(const Rational& q);

}  // namespace rlrs
