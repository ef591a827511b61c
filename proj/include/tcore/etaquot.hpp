#pragma once

// Eta-quotients prod_{δ|N} η(δz)^{r_δ}: modularity conditions, cusp orders,
// weight, Nebentypus character and q-expansion.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "tcore/arith.hpp"
#include "tcore/qseries.hpp"

namespace tcore::eta {

class EtaQuotient {
public:
    /// Zero exponents are dropped. Throws std::invalid_argument when the level
    /// is not positive or some δ does not divide it.
    EtaQuotient(std::int64_t level, std::map<std::int64_t, std::int64_t> exponents);

    std::int64_t level() const { return level_; }
    const std::map<std::int64_t, std::int64_t>& exponents() const { return exponents_; }
    std::int64_t exponent(std::int64_t delta) const;

    /// Same exponents, different level.
    EtaQuotient with_level(std::int64_t level) const { return EtaQuotient(level, exponents_); }

    /// Parses `N=<int>;<δ>:<r>[,<δ>:<r>]*`, ignoring whitespace.
    static EtaQuotient parse(const std::string& text);
    std::string to_string() const;

    bool operator==(const EtaQuotient&) const = default;

private:
    std::int64_t level_;
    std::map<std::int64_t, std::int64_t> exponents_;
};

/// An eta-quotient together with the integer power of q collected from the
/// η(δz) = q^{δ/24}(q^δ;q^δ)_inf prefactors.
struct ShiftedEtaQuotient {
    EtaQuotient quotient;
    std::int64_t shift;
};

struct Conditions24 {
    bool delta_sum;  // sum δ r_δ ≡ 0 (mod 24)
    bool level_sum;  // sum (N/δ) r_δ ≡ 0 (mod 24)

    bool both() const { return delta_sum && level_sum; }
    bool operator==(const Conditions24&) const = default;
};

struct CuspReport {
    std::map<std::int64_t, Rational> cusp_orders;  // keyed by denominator d | N
    bool holomorphic = false;
    Rational weight;
    bool integral_weight = false;
    Conditions24 conditions_24{};
};

Rational weight(const EtaQuotient& e);

Conditions24 check_conditions_24(const EtaQuotient& e);

struct LevelChoice {
    std::int64_t multiplier;  // M
    std::int64_t level;       // base * M
};

/// Smallest M >= 1 for which both 24-conditions hold at level base*M.
/// Every δ must divide base. M = 24 always works.
LevelChoice minimal_level(const std::map<std::int64_t, std::int64_t>& exponents, std::int64_t base);

/// Order of vanishing at the cusp c/d (independent of c):
///   (N/24) sum_δ gcd(d,δ)^2 r_δ / (gcd(d, N/d) d δ).
/// Throws std::invalid_argument when d does not divide N.
Rational cusp_order(const EtaQuotient& e, std::int64_t d);

CuspReport certify_holomorphic(const EtaQuotient& e);

/// Kronecker symbol (a|n), with (a|0) = [a = ±1], (a|-1) = sign(a) and
/// (a|2) = 0, 1, -1 for a even, a ≡ ±1 (8), a ≡ ±3 (8).
int kronecker(std::int64_t a, std::int64_t n);

/// χ(d) = ((-1)^k s | d) with s = prod δ^{r_δ}. Requires integral weight and
/// gcd(d, N) = 1; throws std::domain_error / std::invalid_argument otherwise.
int character(const EtaQuotient& e, std::int64_t d);

/// B_{α,m,j}: η^{3^α m + 2^{j+1}}(2^3 3^{α+1} m z) / (η(24z) η^{2^j}(2^4 3^{α+1} m z)),
/// level 2^6 3^{α+1} m, shift 3^{2α} m^2 - 1. Requires gcd(m, 6) = 1, j >= 1.
ShiftedEtaQuotient build_B(int alpha, std::int64_t m, int j);

/// D_{α,m,j}: η^{3^α m + 3^{j+1}}(2^3 3^{α+1} m z) / (η(24z) η^{3^j}(2^3 3^{α+2} m z)),
/// level 2^3 3^{α+2} m, shift 3^{2α} m^2 - 1.
ShiftedEtaQuotient build_D(int alpha, std::int64_t m, int j);

/// B_{i,j,t}: η^t(24tz) η^{p^{a+j}-1}(24z) / η^{p^j}(24 p^a z) where p^a
/// exactly divides t and every prime factor of t is >= 5. Level 2^6 3^2 t,
/// shift t^2 - 1.
ShiftedEtaQuotient build_B_density(std::int64_t prime, int power, int j, std::int64_t t);

/// q^shift prod_δ (q^δ;q^δ)^{r_δ} to the given order. The supplied shift must
/// equal (1/24) sum δ r_δ and be non-negative.
template <qseries::CoefficientRing Ring>
qseries::Series<Ring> expand(const EtaQuotient& e, std::int64_t shift, std::size_t order, Ring ring);

qseries::IntSeries expand(const EtaQuotient& e, std::int64_t shift, std::size_t order);
qseries::ModSeries expand(const EtaQuotient& e, std::int64_t shift, std::size_t order, std::uint64_t modulus);

} // namespace tcore::eta
