#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace prime_scope {

// Arbitrary-precision integers and rationals. mpq_class keeps every value
// canonical (reduced, positive denominator) after each operation.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

inline int sign(const Integer& n) { return sgn(n); }
inline int sign(const Rational& q) { return sgn(q); }

/// max(|numerator|, denominator)
Integer height(const Rational& q);

/// Exponent of p in n; n must be nonzero.
long padic_valuation(const Integer& n, const Integer& p);
/// Exponent of p in q; q must be nonzero.
long padic_valuation(const Rational& q, const Integer& p);

bool is_probable_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Trial-division factorization of |n| > 0 into (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

Integer pow_int(const Integer& base, unsigned long exponent);
Rational pow_rational(const Rational& base, long exponent);

/// Residue of a p-integral rational modulo m (m > 1, gcd(den, m) = 1).
Integer rational_mod(const Rational& q, const Integer& m);

bool is_rational_square(const Rational& q);
Rational rational_sqrt(const Rational& q); // precondition: is_rational_square

// Word-size modular helpers for small primes.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

} // namespace prime_scope
