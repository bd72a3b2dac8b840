#pragma once

#include <gmpxx.h>

#include <string>

namespace hmp {

// Arbitrary-precision rational, GMP-backed. mpq_class keeps the value
// canonical (gcd-reduced, positive denominator) as long as construction
// goes through make_rational or arithmetic on already-canonical values.
using BigInt = mpz_class;
using BigRational = mpq_class;

// num/den reduced to lowest terms, den > 0.
BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

// Parses "a/b" or "a" with optional sign.
BigRational rational_from_string(const std::string& text);

double to_double(const BigRational& q);

BigRational rational_pow(const BigRational& base, long exponent);

// "a" when den == 1, otherwise "a/b".
std::string to_string(const BigRational& q);

// True when |q| = 2^e for some integer e (including negative e).
// On success stores e in *exponent.
bool is_power_of_two(const BigRational& q, long* exponent);

}  // namespace hmp
