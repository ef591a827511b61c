#include "tcore/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace tcore {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n == 0) {
        throw std::invalid_argument("factorize: zero has no factorization");
    }
    n = std::llabs(n);
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q != 0) {
            continue;
        }
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.emplace_back(q, e);
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (auto [q, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t power = 1;
        for (int i = 0; i < e; ++i) {
            power *= q;
            for (std::size_t k = 0; k < base; ++k) {
                out.push_back(out[k] * power);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    auto f = factorize(n);
    return f.size() == 1 && f.front().second == 1;
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) {
        return false;
    }
    for (auto [q, e] : factorize(n)) {
        if (e > 1) {
            return false;
        }
    }
    return true;
}

std::int64_t gcd0(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

std::int64_t ipow(std::int64_t base, int exp) {
    if (exp < 0) {
        throw std::invalid_argument("ipow: negative exponent");
    }
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) {
            throw std::overflow_error("ipow: result exceeds 64 bits");
        }
    }
    return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational q(Integer(std::to_string(num)), Integer(std::to_string(den)));
    q.canonicalize();
    return q;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Integer& z) {
    return z.get_str();
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace tcore
