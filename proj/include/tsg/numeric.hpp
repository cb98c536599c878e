#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tsg {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt power(const BigInt& base, unsigned long exponent);
Rational power(const Rational& base, unsigned long exponent);

/// Natural logarithm of a positive big integer, accurate to double precision
/// regardless of magnitude.
double log_of(const BigInt& value);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

bool is_prime(std::uint64_t n);

/// Exponent a/b used by the "close to the mean" test; defaults to 2/3.
struct RationalExponent {
    unsigned long num = 2;
    unsigned long den = 3;
};

} // namespace tsg
