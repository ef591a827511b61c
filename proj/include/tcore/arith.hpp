#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tcore {

using Integer = mpz_class;
using Rational = mpq_class;

/// Prime factorization by trial division, primes in increasing order.
/// Throws std::invalid_argument for n == 0.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

// gcd with the convention gcd(x, 0) = |x|; always non-negative.
std::int64_t gcd0(std::int64_t a, std::int64_t b);

std::int64_t ipow(std::int64_t base, int exp);

// Euclidean remainder in [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Largest integer <= q.
Integer floor(const Rational& q);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& q);

std::string to_string(const Integer& z);

/// Parses "p/q" or "p". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

} // namespace tcore
