#include "tcore/etaquot.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcore::eta {

EtaQuotient::EtaQuotient(std::int64_t level, std::map<std::int64_t, std::int64_t> exponents) : level_(level) {
    if (level < 1) {
        throw std::invalid_argument("eta-quotient level must be positive");
    }
    for (auto [delta, r] : exponents) {
        if (delta < 1 || level % delta != 0) {
            throw std::invalid_argument("eta-quotient: " + std::to_string(delta) + " does not divide level " +
                                        std::to_string(level));
        }
        if (r != 0) {
            exponents_.emplace(delta, r);
        }
    }
}

std::int64_t EtaQuotient::exponent(std::int64_t delta) const {
    auto it = exponents_.find(delta);
    return it == exponents_.end() ? 0 : it->second;
}

namespace {

std::int64_t parse_int(const std::string& text, const std::string& what) {
    if (text.empty()) {
        throw std::invalid_argument("eta spec: missing " + what);
    }
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("eta spec: bad " + what + " '" + text + "'");
    }
    if (used != text.size()) {
        throw std::invalid_argument("eta spec: bad " + what + " '" + text + "'");
    }
    return v;
}

} // namespace

EtaQuotient EtaQuotient::parse(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    const auto semi = s.find(';');
    if (s.rfind("N=", 0) != 0 || semi == std::string::npos) {
        throw std::invalid_argument("eta spec must look like N=<int>;<d>:<r>,...");
    }
    const std::int64_t level = parse_int(s.substr(2, semi - 2), "level");
    std::map<std::int64_t, std::int64_t> exps;
    std::stringstream body(s.substr(semi + 1));
    std::string item;
    while (std::getline(body, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("eta spec: expected <d>:<r>, got '" + item + "'");
        }
        const auto delta = parse_int(item.substr(0, colon), "divisor");
        const auto r = parse_int(item.substr(colon + 1), "exponent");
        if (!exps.emplace(delta, r).second) {
            throw std::invalid_argument("eta spec: duplicate divisor " + std::to_string(delta));
        }
    }
    if (exps.empty()) {
        throw std::invalid_argument("eta spec: no factors given");
    }
    return EtaQuotient(level, std::move(exps));
}

std::string EtaQuotient::to_string() const {
    std::string out = "N=" + std::to_string(level_) + ";";
    bool first = true;
    for (auto [delta, r] : exponents_) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += std::to_string(delta) + ":" + std::to_string(r);
    }
    return out;
}

Rational weight(const EtaQuotient& e) {
    std::int64_t sum = 0;
    for (auto [delta, r] : e.exponents()) {
        sum += r;
    }
    return make_rational(sum, 2);
}

namespace {

Conditions24 conditions_at(const std::map<std::int64_t, std::int64_t>& exps, std::int64_t level) {
    std::int64_t delta_sum = 0;
    std::int64_t level_sum = 0;
    for (auto [delta, r] : exps) {
        delta_sum += delta * r;
        level_sum += (level / delta) * r;
    }
    return {delta_sum % 24 == 0, level_sum % 24 == 0};
}

} // namespace

Conditions24 check_conditions_24(const EtaQuotient& e) {
    return conditions_at(e.exponents(), e.level());
}

LevelChoice minimal_level(const std::map<std::int64_t, std::int64_t>& exponents, std::int64_t base) {
    for (auto [delta, r] : exponents) {
        if (delta < 1 || base % delta != 0) {
            throw std::invalid_argument("minimal_level: " + std::to_string(delta) + " does not divide base " +
                                        std::to_string(base));
        }
    }
    for (std::int64_t m = 1; m <= 24; ++m) {
        if (conditions_at(exponents, base * m).both()) {
            return {m, base * m};
        }
    }
    throw std::domain_error("minimal_level: sum of δ r_δ is not divisible by 24 at any level");
}

Rational cusp_order(const EtaQuotient& e, std::int64_t d) {
    const std::int64_t n = e.level();
    if (d < 1 || n % d != 0) {
        throw std::invalid_argument("cusp_order: " + std::to_string(d) + " does not divide level " +
                                    std::to_string(n));
    }
    Rational sum = 0;
    const std::int64_t g = std::gcd(d, n / d);
    for (auto [delta, r] : e.exponents()) {
        const std::int64_t gd = std::gcd(d, delta);
        sum += make_rational(gd * gd * r, g * d * delta);
    }
    return sum * make_rational(n, 24);
}

CuspReport certify_holomorphic(const EtaQuotient& e) {
    CuspReport report;
    report.weight = weight(e);
    report.integral_weight = report.weight.get_den() == 1;
    report.conditions_24 = check_conditions_24(e);
    bool nonnegative = true;
    for (auto d : divisors(e.level())) {
        auto order = cusp_order(e, d);
        nonnegative = nonnegative && order >= 0;
        report.cusp_orders.emplace(d, std::move(order));
    }
    report.holomorphic =
        nonnegative && report.conditions_24.both() && report.integral_weight && report.weight >= 0;
    return report;
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) {
            result = -result;
        }
    }
    // Strip factors of two from the bottom.
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) {
            return 0;
        }
        const std::int64_t r8 = mod_floor(a, 8);
        if ((twos % 2 == 1) && (r8 == 3 || r8 == 5)) {
            result = -result;
        }
    }
    // Jacobi symbol for odd positive n.
    std::int64_t x = mod_floor(a, n);
    std::int64_t y = n;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const std::int64_t r = y % 8;
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3) {
            result = -result;
        }
        x %= y;
    }
    return y == 1 ? result : 0;
}

int character(const EtaQuotient& e, std::int64_t d) {
    const Rational k = weight(e);
    if (k.get_den() != 1) {
        throw std::domain_error("character: weight is not an integer");
    }
    if (std::gcd(d, e.level()) != 1) {
        throw std::invalid_argument("character: d must be coprime to the level");
    }
    // (s|d) is multiplicative in s for fixed d coprime to every δ, and each
    // factor is ±1, so δ^{r_δ} contributes (δ|d)^{|r_δ|}.
    int chi = mpz_odd_p(k.get_num_mpz_t()) ? kronecker(-1, d) : 1;
    for (auto [delta, r] : e.exponents()) {
        if (std::llabs(r) % 2 == 1) {
            chi *= kronecker(delta, d);
        }
    }
    return chi;
}

namespace {

void add_exponent(std::map<std::int64_t, std::int64_t>& exps, std::int64_t delta, std::int64_t r) {
    exps[delta] += r;
}

} // namespace

ShiftedEtaQuotient build_B(int alpha, std::int64_t m, int j) {
    if (alpha < 0 || m < 1 || j < 1 || std::gcd(m, std::int64_t{6}) != 1) {
        throw std::invalid_argument("build_B: need alpha >= 0, j >= 1, m >= 1 with gcd(m, 6) = 1");
    }
    const std::int64_t c = ipow(3, alpha) * m;
    const std::int64_t inner = 8 * 3 * c;  // 2^3 3^{α+1} m
    std::map<std::int64_t, std::int64_t> exps;
    add_exponent(exps, inner, c + ipow(2, j + 1));
    add_exponent(exps, 24, -1);
    add_exponent(exps, 2 * inner, -ipow(2, j));
    return {EtaQuotient(8 * inner, std::move(exps)), c * c - 1};
}

ShiftedEtaQuotient build_D(int alpha, std::int64_t m, int j) {
    if (alpha < 0 || m < 1 || j < 1 || std::gcd(m, std::int64_t{6}) != 1) {
        throw std::invalid_argument("build_D: need alpha >= 0, j >= 1, m >= 1 with gcd(m, 6) = 1");
    }
    const std::int64_t c = ipow(3, alpha) * m;
    const std::int64_t inner = 8 * 3 * c;  // 2^3 3^{α+1} m
    std::map<std::int64_t, std::int64_t> exps;
    add_exponent(exps, inner, c + ipow(3, j + 1));
    add_exponent(exps, 24, -1);
    add_exponent(exps, 3 * inner, -ipow(3, j));
    return {EtaQuotient(3 * inner, std::move(exps)), c * c - 1};
}

ShiftedEtaQuotient build_B_density(std::int64_t prime, int power, int j, std::int64_t t) {
    if (t < 1 || power < 1 || j < 1) {
        throw std::invalid_argument("build_B_density: need t >= 1, power >= 1, j >= 1");
    }
    bool found = false;
    for (auto [q, e] : factorize(t)) {
        if (q < 5) {
            throw std::invalid_argument("build_B_density: every prime factor of t must be >= 5");
        }
        if (q == prime) {
            found = (e == power);
        }
    }
    if (!found) {
        throw std::invalid_argument("build_B_density: " + std::to_string(prime) + "^" + std::to_string(power) +
                                    " must exactly divide t");
    }
    const std::int64_t pa = ipow(prime, power);
    const std::int64_t pj = ipow(prime, j);
    std::map<std::int64_t, std::int64_t> exps;
    add_exponent(exps, 24 * t, t);
    add_exponent(exps, 24, pa * pj - 1);
    add_exponent(exps, 24 * pa, -pj);
    return {EtaQuotient(576 * t, std::move(exps)), t * t - 1};
}

template <qseries::CoefficientRing Ring>
qseries::Series<Ring> expand(const EtaQuotient& e, std::int64_t shift, std::size_t order, Ring ring) {
    using namespace qseries;
    if (order == 0) {
        throw std::invalid_argument("expand: truncation order must be positive");
    }
    std::int64_t delta_sum = 0;
    for (auto [delta, r] : e.exponents()) {
        delta_sum += delta * r;
    }
    if (delta_sum % 24 != 0) {
        throw std::domain_error("expand: q-prefactor exponent " + std::to_string(delta_sum) + "/24 is not integral");
    }
    if (delta_sum / 24 != shift) {
        throw std::invalid_argument("expand: shift " + std::to_string(shift) + " does not match prefactor " +
                                    std::to_string(delta_sum / 24));
    }
    if (shift < 0) {
        throw std::domain_error("expand: negative q-power is not representable");
    }
    const auto s = static_cast<std::size_t>(shift);
    const std::size_t body_order = order > s ? order - s : 1;
    auto numerator = Series<Ring>::constant(ring, 1, body_order);
    auto denominator = Series<Ring>::constant(ring, 1, body_order);
    for (auto [delta, r] : e.exponents()) {
        const auto d = static_cast<std::size_t>(delta);
        auto factor = dilate(euler_function(ring, (body_order + d - 1) / d), d, body_order);
        auto powered = pow(factor, static_cast<std::uint64_t>(std::llabs(r)));
        if (r > 0) {
            numerator = mul(numerator, powered);
        } else {
            denominator = mul(denominator, powered);
        }
    }
    return qseries::shift_up(divide(numerator, denominator), s, order);
}

template qseries::IntSeries expand(const EtaQuotient&, std::int64_t, std::size_t, qseries::IntegerRing);
template qseries::ModSeries expand(const EtaQuotient&, std::int64_t, std::size_t, qseries::ResidueRing);

qseries::IntSeries expand(const EtaQuotient& e, std::int64_t shift, std::size_t order) {
    return expand(e, shift, order, qseries::IntegerRing{});
}

qseries::ModSeries expand(const EtaQuotient& e, std::int64_t shift, std::size_t order, std::uint64_t modulus) {
    return expand(e, shift, order, qseries::ResidueRing(modulus));
}

} // namespace tcore::eta
