#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace skmaass {

// All exact scalar arithmetic is built on GMP. mpq_class values are kept
// canonical (lowest terms, positive denominator) by construction.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parse "num" or "num/den" (optional sign, base 10). Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

/// Canonical serialization, always "num/den".
std::string rational_str(const Rational& r);

/// Exponent of p in r. r must be nonzero, p >= 2.
long valuation(const Rational& r, std::int64_t p);
long valuation(const Integer& n, std::int64_t p);
long valuation(std::int64_t n, std::int64_t p);

bool is_prime(std::int64_t n);

/// Prime factorization of n >= 1 by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// All positive divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// base^exp as an exact integer, exp >= 0.
Integer ipow(std::int64_t base, unsigned long exp);

/// q^exp for any sign of exp, q != 0.
Rational qpow(std::int64_t q, long exp);

} // namespace skmaass
