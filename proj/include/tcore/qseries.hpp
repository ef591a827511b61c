#pragma once

// Truncated power series in q over the integers or over Z/uZ.
//
// A series of order T knows the coefficients of q^0 .. q^{T-1}; everything
// beyond is unknown (not zero), so reads past the end throw. Binary operations
// silently truncate to the smaller of the two orders.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcore/arith.hpp"

namespace tcore::qseries {

/// Exact arbitrary-precision integer coefficients.
class IntegerRing {
public:
    using value_type = Integer;

    value_type from_int(std::int64_t v) const { return Integer(static_cast<long>(v)); }
    bool is_zero(const value_type& v) const { return v == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    // acc += a * b
    void mul_add(value_type& acc, const value_type& a, const value_type& b) const {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    std::optional<value_type> unit_inverse(const value_type& v) const {
        if (v == 1 || v == -1) {
            return v;
        }
        return std::nullopt;
    }
    std::optional<std::uint64_t> modulus() const { return std::nullopt; }

    bool operator==(const IntegerRing&) const = default;
};

/// Residues modulo a fixed u >= 1, stored in [0, u).
class ResidueRing {
public:
    using value_type = std::uint64_t;

    explicit ResidueRing(std::uint64_t modulus) : modulus_(modulus) {
        if (modulus == 0) {
            throw std::invalid_argument("ResidueRing: modulus must be positive");
        }
    }

    value_type from_int(std::int64_t v) const {
        const auto u = static_cast<std::int64_t>(modulus_);
        return static_cast<value_type>(mod_floor(v, u));
    }
    value_type from_integer(const Integer& v) const {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), modulus_);
        return r.get_ui();
    }
    bool is_zero(value_type v) const { return v == 0; }
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return (s >= modulus_ || s < a) ? s - modulus_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (modulus_ - b); }
    value_type mul(value_type a, value_type b) const {
        if (small()) {
            return (a * b) % modulus_;
        }
        return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % modulus_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : modulus_ - a; }
    void mul_add(value_type& acc, value_type a, value_type b) const {
        if (small()) {
            acc = (acc + a * b) % modulus_;
        } else {
            acc = static_cast<value_type>((static_cast<unsigned __int128>(a) * b + acc) % modulus_);
        }
    }
    std::optional<value_type> unit_inverse(value_type v) const;
    std::optional<std::uint64_t> modulus() const { return modulus_; }
    std::uint64_t value() const { return modulus_; }

    bool operator==(const ResidueRing&) const = default;

private:
    // Products of two residues fit in 64 bits, with room for one addend.
    bool small() const { return modulus_ <= (std::uint64_t{1} << 32); }

    std::uint64_t modulus_;
};

template <class R>
concept CoefficientRing = requires { typename R::value_type; };

template <class Ring>
class Series {
public:
    using ring_type = Ring;
    using value_type = typename Ring::value_type;

    Series(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("Series: truncation order must be positive");
        }
    }

    /// Builds from small integer literals, reducing into the ring.
    static Series from_ints(Ring ring, std::initializer_list<std::int64_t> values, std::size_t order = 0) {
        std::vector<value_type> c(std::max(order, values.size()), ring.from_int(0));
        std::size_t i = 0;
        for (auto v : values) {
            c[i++] = ring.from_int(v);
        }
        return Series(std::move(ring), std::move(c));
    }

    static Series constant(Ring ring, std::int64_t value, std::size_t order) {
        if (order == 0) {
            throw std::invalid_argument("Series: truncation order must be positive");
        }
        std::vector<value_type> c(order, ring.from_int(0));
        c[0] = ring.from_int(value);
        return Series(std::move(ring), std::move(c));
    }

    std::size_t order() const { return coeffs_.size(); }
    const Ring& ring() const { return ring_; }
    std::span<const value_type> coefficients() const { return coeffs_; }

    const value_type& coeff(std::size_t n) const {
        if (n >= coeffs_.size()) {
            throw std::out_of_range("coefficient of q^" + std::to_string(n) + " lies beyond truncation order " +
                                    std::to_string(coeffs_.size()));
        }
        return coeffs_[n];
    }
    const value_type& operator[](std::size_t n) const { return coeff(n); }

    Series truncate(std::size_t order) const {
        if (order == 0) {
            throw std::invalid_argument("Series: truncation order must be positive");
        }
        order = std::min(order, coeffs_.size());
        return Series(ring_, std::vector<value_type>(coeffs_.begin(), coeffs_.begin() + order));
    }

    std::size_t nonzero_count() const {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [&](const value_type& v) { return !ring_.is_zero(v); }));
    }

    bool operator==(const Series&) const = default;

private:
    Ring ring_;
    std::vector<value_type> coeffs_;
};

using IntSeries = Series<IntegerRing>;
using ModSeries = Series<ResidueRing>;

namespace detail {

template <class Ring>
void require_same_ring(const Ring& a, const Ring& b) {
    if (!(a == b)) {
        throw std::invalid_argument("series modulus mismatch");
    }
}

template <class Ring>
std::vector<std::size_t> nonzero_indices(const Series<Ring>& a, std::size_t limit) {
    std::vector<std::size_t> nz;
    const auto c = a.coefficients();
    for (std::size_t i = 0; i < std::min(limit, c.size()); ++i) {
        if (!a.ring().is_zero(c[i])) {
            nz.push_back(i);
        }
    }
    return nz;
}

} // namespace detail

/// (q;q)_inf = prod_{n>=1} (1 - q^n) to order T, via the pentagonal number theorem.
template <class Ring>
Series<Ring> euler_function(Ring ring, std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("euler_function: truncation order must be positive");
    }
    using V = typename Ring::value_type;
    std::vector<V> c(order, ring.from_int(0));
    c[0] = ring.from_int(1);
    for (std::size_t j = 1;; ++j) {
        const std::size_t lo = j * (3 * j - 1) / 2;
        if (lo >= order) {
            break;
        }
        const V sign = ring.from_int(j % 2 == 0 ? 1 : -1);
        c[lo] = sign;
        const std::size_t hi = j * (3 * j + 1) / 2;
        if (hi < order) {
            c[hi] = sign;
        }
    }
    return Series<Ring>(std::move(ring), std::move(c));
}

inline IntSeries euler_function(std::size_t order) {
    return euler_function(IntegerRing{}, order);
}

template <class Ring>
Series<Ring> add(const Series<Ring>& a, const Series<Ring>& b) {
    detail::require_same_ring(a.ring(), b.ring());
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<typename Ring::value_type> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.push_back(a.ring().add(a.coefficients()[i], b.coefficients()[i]));
    }
    return Series<Ring>(a.ring(), std::move(c));
}

template <class Ring>
Series<Ring> sub(const Series<Ring>& a, const Series<Ring>& b) {
    detail::require_same_ring(a.ring(), b.ring());
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<typename Ring::value_type> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.push_back(a.ring().sub(a.coefficients()[i], b.coefficients()[i]));
    }
    return Series<Ring>(a.ring(), std::move(c));
}

/// Cauchy product truncated to min(T_a, T_b). Iterates over the non-zero
/// terms of the sparser factor, so products with eta-type series are cheap.
template <class Ring>
Series<Ring> mul(const Series<Ring>& a, const Series<Ring>& b) {
    detail::require_same_ring(a.ring(), b.ring());
    const Ring& ring = a.ring();
    const std::size_t n = std::min(a.order(), b.order());
    auto nz_a = detail::nonzero_indices(a, n);
    auto nz_b = detail::nonzero_indices(b, n);
    const bool a_sparse = nz_a.size() <= nz_b.size();
    const auto& sparse = a_sparse ? a : b;
    const auto& dense = a_sparse ? b : a;
    const auto& nz = a_sparse ? nz_a : nz_b;

    std::vector<typename Ring::value_type> c(n, ring.from_int(0));
    const auto s = sparse.coefficients();
    const auto d = dense.coefficients();
    for (std::size_t k : nz) {
        const auto& sk = s[k];
        for (std::size_t i = 0; i + k < n; ++i) {
            ring.mul_add(c[i + k], sk, d[i]);
        }
    }
    return Series<Ring>(ring, std::move(c));
}

template <class Ring>
Series<Ring> pow(const Series<Ring>& a, std::uint64_t e) {
    const std::size_t n = a.order();
    if (e == 0) {
        return Series<Ring>::constant(a.ring(), 1, n);
    }
    // Repeated multiplication by a sparse base beats squaring dense powers.
    const std::size_t nnz = std::max<std::size_t>(1, a.nonzero_count());
    const std::uint64_t bits = 64 - static_cast<std::uint64_t>(__builtin_clzll(e));
    if (static_cast<long double>(e) * nnz <= static_cast<long double>(bits) * n) {
        Series<Ring> r = a;
        for (std::uint64_t i = 1; i < e; ++i) {
            r = mul(r, a);
        }
        return r;
    }
    Series<Ring> result = Series<Ring>::constant(a.ring(), 1, n);
    Series<Ring> base = a;
    while (true) {
        if (e & 1) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e == 0) {
            break;
        }
        base = mul(base, base);
    }
    return result;
}

/// a / b up to min(T_a, T_b); the constant term of b must be a unit.
template <class Ring>
Series<Ring> divide(const Series<Ring>& a, const Series<Ring>& b) {
    detail::require_same_ring(a.ring(), b.ring());
    const Ring& ring = a.ring();
    auto inv0 = ring.unit_inverse(b.coefficients()[0]);
    if (!inv0) {
        throw std::domain_error("series constant term is not invertible");
    }
    const std::size_t n = std::min(a.order(), b.order());
    auto nz = detail::nonzero_indices(b, n);
    const auto bc = b.coefficients();
    const auto ac = a.coefficients();
    std::vector<typename Ring::value_type> r(n, ring.from_int(0));
    for (std::size_t i = 0; i < n; ++i) {
        auto acc = ring.from_int(0);
        for (std::size_t k : nz) {
            if (k == 0) {
                continue;
            }
            if (k > i) {
                break;
            }
            ring.mul_add(acc, bc[k], r[i - k]);
        }
        r[i] = ring.mul(*inv0, ring.sub(ac[i], acc));
    }
    return Series<Ring>(ring, std::move(r));
}

template <class Ring>
Series<Ring> inverse(const Series<Ring>& a) {
    return divide(Series<Ring>::constant(a.ring(), 1, a.order()), a);
}

/// Substitutes q -> q^k. The result knows k*T_a coefficients; `order`
/// caps it further when given.
template <class Ring>
Series<Ring> dilate(const Series<Ring>& a, std::size_t k, std::optional<std::size_t> order = std::nullopt) {
    if (k == 0) {
        throw std::invalid_argument("dilate: factor must be positive");
    }
    std::size_t n = k * a.order();
    if (order) {
        if (*order == 0) {
            throw std::invalid_argument("dilate: truncation order must be positive");
        }
        n = std::min(n, *order);
    }
    const Ring& ring = a.ring();
    std::vector<typename Ring::value_type> c(n, ring.from_int(0));
    const auto ac = a.coefficients();
    for (std::size_t i = 0; i * k < n; ++i) {
        c[i * k] = ac[i];
    }
    return Series<Ring>(ring, std::move(c));
}

/// Multiplies by q^s; the result has order min(T_a + s, order).
template <class Ring>
Series<Ring> shift_up(const Series<Ring>& a, std::size_t s, std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("shift_up: truncation order must be positive");
    }
    const std::size_t n = std::min(a.order() + s, order);
    const Ring& ring = a.ring();
    std::vector<typename Ring::value_type> c(n, ring.from_int(0));
    const auto ac = a.coefficients();
    for (std::size_t i = s; i < n; ++i) {
        c[i] = ac[i - s];
    }
    return Series<Ring>(ring, std::move(c));
}

ModSeries reduce_mod(const IntSeries& a, std::uint64_t u);

/// Further reduction of a residue series; u must divide its modulus.
ModSeries reduce_mod(const ModSeries& a, std::uint64_t u);

/// Signed representative text of a coefficient, for output.
std::string to_string(const Integer& v);
std::string to_string(std::uint64_t v);

} // namespace tcore::qseries
