#include "tcore/raduseller.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tcore/cores.hpp"

namespace tcore::rs {

std::int64_t ExponentVector::sum() const {
    std::int64_t s = 0;
    for (auto [delta, e] : r) {
        s += e;
    }
    return s;
}

std::int64_t ExponentVector::delta_sum() const {
    std::int64_t s = 0;
    for (auto [delta, e] : r) {
        s += delta * e;
    }
    return s;
}

void ExponentVector::validate() const {
    if (M < 1) {
        throw std::invalid_argument("exponent vector: M must be positive");
    }
    for (auto [delta, e] : r) {
        if (delta < 1 || M % delta != 0) {
            throw std::invalid_argument("exponent vector: " + std::to_string(delta) + " does not divide M = " +
                                        std::to_string(M));
        }
    }
}

std::string DeltaStarReport::failed() const {
    std::string out;
    const std::pair<char, bool> conds[] = {{'a', a}, {'b', b}, {'c', c}, {'d', d}, {'e', e}, {'f', f}};
    for (auto [name, ok] : conds) {
        if (!ok) {
            if (!out.empty()) {
                out += ",";
            }
            out += name;
        }
    }
    return out;
}

std::int64_t kappa(std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("kappa: m must be positive");
    }
    const auto mm = static_cast<__int128>(m) * m - 1;
    return static_cast<std::int64_t>(std::gcd(static_cast<std::int64_t>(mm % 24), std::int64_t{24}));
}

std::int64_t p_hat(std::int64_t p) {
    if (p < 5) {
        throw std::domain_error("p_hat: (p^2 - 1)/24 is integral only for primes p >= 5");
    }
    return (p * p - 1) / 24;
}

std::int64_t A_t(std::int64_t m, std::int64_t p, std::int64_t t) {
    const std::int64_t k = kappa(m);
    const std::int64_t modulus = 24 * m;
    const std::int64_t x = mod_floor(-k * mod_floor(24 * t + p * p - 1, modulus), modulus);
    return modulus / std::gcd(x, modulus);
}

int eps2(std::int64_t m, std::int64_t p) {
    if (m % 2 != 0) {
        return 0;
    }
    return ((p - 1) / 2) % 2 == 1 ? 1 : 0;
}

int epsp(std::int64_t m, std::int64_t p) {
    return m % p == 0 ? 0 : 1;
}

std::vector<std::int64_t> P_set(std::int64_t m, const ExponentVector& r, std::int64_t t, SRange range) {
    if (m < 1 || t < 0 || t >= m) {
        throw std::invalid_argument("P_set: need m >= 1 and 0 <= t < m");
    }
    r.validate();
    const std::int64_t modulus = 24 * m;
    std::set<std::int64_t> acting;
    for (std::int64_t x = 1; x < modulus; ++x) {
        if (std::gcd(x, modulus) != 1) {
            continue;
        }
        acting.insert(range == SRange::squares ? static_cast<std::int64_t>((static_cast<__int128>(x) * x) % modulus)
                                               : x);
    }
    const __int128 ds = r.delta_sum();
    std::set<std::int64_t> orbit;
    for (std::int64_t s : acting) {
        const __int128 shifted = static_cast<__int128>(s - 1) * ds;
        if (shifted % 24 != 0) {
            continue;
        }
        const __int128 value = static_cast<__int128>(t) * s + shifted / 24;
        auto residue = static_cast<std::int64_t>(value % m);
        orbit.insert(residue < 0 ? residue + m : residue);
    }
    return {orbit.begin(), orbit.end()};
}

DeltaStarReport delta_star_check(const DeltaStarTuple& tuple) {
    const auto& [m, M, N, r, t] = tuple;
    if (m < 1 || M < 1 || N < 1 || t < 0 || t >= m) {
        throw std::invalid_argument("delta_star_check: need positive m, M, N and 0 <= t < m");
    }
    r.validate();
    if (r.M != M) {
        throw std::invalid_argument("delta_star_check: exponent vector is indexed by a different M");
    }
    DeltaStarReport rep;
    const std::int64_t k = kappa(m);

    rep.a = std::ranges::all_of(factorize(m), [&](auto qe) { return N % qe.first == 0; });

    rep.b = true;
    for (auto [delta, e] : r.r) {
        if (e != 0 && (static_cast<__int128>(m) * N) % delta != 0) {
            rep.b = false;
        }
    }

    if (rep.b) {
        Integer sum = 0;
        for (auto [delta, e] : r.r) {
            sum += Integer(static_cast<long>(e)) * Integer(static_cast<long>(m)) * Integer(static_cast<long>(N)) /
                   Integer(static_cast<long>(delta));
        }
        Integer value = sum * k * N;
        rep.c = mpz_divisible_ui_p(value.get_mpz_t(), 24) != 0;
    }

    rep.d = (static_cast<__int128>(k) * N * r.sum()) % 8 == 0;

    const std::int64_t modulus = 24 * m;
    const __int128 raw = -static_cast<__int128>(24) * k * t - static_cast<__int128>(k) * r.delta_sum();
    auto reduced = static_cast<std::int64_t>(raw % modulus);
    const std::int64_t e_value = modulus / std::gcd(reduced, modulus);
    rep.e = N % e_value == 0;

    // prod δ^{|r_δ|} = 2^s j with j odd; only j mod 8 matters.
    std::int64_t s = 0;
    std::int64_t j8 = 1;
    for (auto [delta, e] : r.r) {
        std::int64_t odd = delta;
        int v2 = 0;
        while (odd % 2 == 0) {
            odd /= 2;
            ++v2;
        }
        const std::int64_t mult = std::llabs(e);
        s += v2 * mult;
        for (std::int64_t i = 0; i < mult % 2; ++i) {
            j8 = (j8 * (odd % 8)) % 8;
        }
        // odd^2 ≡ 1 (mod 8), so only the parity of |r_δ| matters.
    }
    rep.s = s;
    rep.j_mod8 = j8;
    if (m % 2 != 0) {
        rep.f = true;
    } else {
        const bool first = (static_cast<__int128>(k) * N) % 4 == 0 && (static_cast<__int128>(s) * N) % 8 == 0;
        const bool second = s % 2 == 0 && (static_cast<__int128>(1 - j8) * N) % 8 == 0;
        rep.f = first || second;
    }
    return rep;
}

Rational p_mr(const Matrix2& gamma, std::int64_t m, const ExponentVector& r) {
    if (gamma.det() != 1) {
        throw std::invalid_argument("p_mr: matrix must have determinant 1");
    }
    if (m < 1) {
        throw std::invalid_argument("p_mr: m must be positive");
    }
    r.validate();
    const std::int64_t k = kappa(m);
    const std::int64_t mc = m * gamma.c;
    std::optional<Rational> best;
    for (std::int64_t lambda = 0; lambda < m; ++lambda) {
        Rational sum = 0;
        for (auto [delta, e] : r.r) {
            const std::int64_t g = gcd0(delta * gamma.a + delta * k * lambda * gamma.c, mc);
            sum += Rational(Integer(static_cast<long>(e)) * g * g, Integer(static_cast<long>(delta * m)));
        }
        sum.canonicalize();
        if (!best || sum < *best) {
            best = sum;
        }
    }
    return *best / 24;
}

Rational p_star_a(const Matrix2& gamma, const std::map<std::int64_t, std::int64_t>& a, std::int64_t N) {
    Rational sum = 0;
    for (auto [delta, e] : a) {
        if (delta < 1 || N % delta != 0) {
            throw std::invalid_argument("p_star_a: " + std::to_string(delta) + " does not divide N");
        }
        const std::int64_t g = gcd0(delta, gamma.c);
        sum += make_rational(e * g * g, delta);
    }
    return sum / 24;
}

std::optional<std::vector<Matrix2>> coset_reps(std::int64_t N) {
    if (N < 1) {
        throw std::invalid_argument("coset_reps: N must be positive");
    }
    if (!is_squarefree(N) && !(N % 2 == 0 && is_squarefree(N / 2))) {
        return std::nullopt;
    }
    std::vector<Matrix2> reps;
    for (auto delta : divisors(N)) {
        reps.push_back({1, 0, delta, 1});
    }
    return reps;
}

std::int64_t index_gamma0(std::int64_t N) {
    if (N < 1) {
        throw std::invalid_argument("index_gamma0: N must be positive");
    }
    std::int64_t idx = N;
    for (auto [q, e] : factorize(N)) {
        idx = idx / q * (q + 1);
    }
    return idx;
}

Rational nu_value(const DeltaStarTuple& tuple, const std::map<std::int64_t, std::int64_t>& a, std::int64_t t_min) {
    const auto report = delta_star_check(tuple);
    if (!report.member()) {
        throw std::domain_error("nu: tuple fails Δ* condition(s) " + report.failed());
    }
    const auto reps = coset_reps(tuple.N);
    if (!reps) {
        throw std::domain_error("nu: neither N nor N/2 is square-free");
    }
    for (const auto& gamma : *reps) {
        if (p_mr(gamma, tuple.m, tuple.r) + p_star_a(gamma, a, tuple.N) < 0) {
            throw std::domain_error("nu: p_mr + p*_a is negative at a coset representative");
        }
    }
    std::int64_t a_sum = 0;
    std::int64_t a_delta_sum = 0;
    for (auto [delta, e] : a) {
        a_sum += e;
        a_delta_sum += delta * e;
    }
    const Rational head = make_rational((tuple.r.sum() + a_sum) * index_gamma0(tuple.N) - a_delta_sum, 24);
    return head - make_rational(tuple.r.delta_sum(), 24 * tuple.m) - make_rational(t_min, tuple.m);
}

std::int64_t nu_bound(const DeltaStarTuple& tuple, const std::map<std::int64_t, std::int64_t>& a,
                      std::int64_t t_min) {
    return floor(nu_value(tuple, a, t_min)).get_si();
}

namespace {

std::int64_t level_for(std::int64_t m, std::int64_t p) {
    std::int64_t n = ipow(2, eps2(m, p)) * ipow(p, epsp(m, p));
    for (auto [q, e] : factorize(m)) {
        n *= q;
    }
    return n;
}

Rational theorem_bound_value(std::int64_t p, std::int64_t m) {
    Integer top = Integer(static_cast<long>(ipow(2, eps2(m, p)) * ipow(p + 1, epsp(m, p)) * (p - 1)));
    for (auto [q, e] : factorize(m)) {
        top *= (q + 1);
    }
    return Rational(top, 24) - make_rational(p * p - 1, 24 * m);
}

void require_prime(std::int64_t x, std::int64_t min, const char* what) {
    if (x < min || !is_prime(x)) {
        throw std::invalid_argument(std::string("corollary_bounds: ") + what + " must be a prime >= " +
                                    std::to_string(min));
    }
}

} // namespace

std::int64_t corollary_bounds(BoundVariant variant, std::int64_t p, std::int64_t second) {
    switch (variant) {
    case BoundVariant::general:
        require_prime(p, 3, "p");
        if (second < 1) {
            throw std::invalid_argument("corollary_bounds: m must be positive");
        }
        return floor(theorem_bound_value(p, second)).get_si();
    case BoundVariant::two_p:
        require_prime(p, 5, "p");
        return ipow(2, eps2(2 * p, p)) * 3 * p_hat(p) - 1;
    case BoundVariant::p_q:
        require_prime(p, 5, "p");
        require_prime(second, 3, "q");
        if (second == p) {
            throw std::invalid_argument("corollary_bounds: p and q must be distinct");
        }
        return p_hat(p) * (second + 1);
    }
    throw std::invalid_argument("corollary_bounds: unknown variant");
}

std::shared_ptr<const qseries::ModSeries> TcoreSeriesCache::get(std::int64_t p, std::uint64_t u, std::size_t order) {
    std::lock_guard lock(mutex_);
    auto& slot = entries_[{p, u}];
    if (!slot || slot->order() < order) {
        slot = std::make_shared<const qseries::ModSeries>(cores::tcore_series(static_cast<int>(p), order, u));
    }
    return slot;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::proven:
        return "proven";
    case Verdict::refuted:
        return "refuted";
    case Verdict::not_applicable:
        return "not_applicable";
    }
    return "not_applicable";
}

Verdict parse_verdict(const std::string& text) {
    if (text == "proven") {
        return Verdict::proven;
    }
    if (text == "refuted") {
        return Verdict::refuted;
    }
    if (text == "not_applicable") {
        return Verdict::not_applicable;
    }
    throw std::invalid_argument("unknown verdict '" + text + "'");
}

VerificationReport verify_claim(const CongruenceClaim& claim, const VerifyOptions& options) {
    VerificationReport rep;
    rep.claim = claim;
    auto inapplicable = [&](std::string why) {
        rep.verdict = Verdict::not_applicable;
        rep.reason = std::move(why);
        return rep;
    };

    const auto [p, m, t, u] = claim;
    if (p < 3 || !is_prime(p)) {
        return inapplicable("p must be a prime >= 3");
    }
    if (m < 1 || m > kMaxModulusFactor) {
        return inapplicable("m must lie in [1, " + std::to_string(kMaxModulusFactor) + "]");
    }
    if (t < 0 || t >= m) {
        return inapplicable("t must lie in [0, m)");
    }
    if (u < 2) {
        return inapplicable("u must be >= 2");
    }

    rep.kappa = kappa(m);
    if (p >= 5) {
        rep.p_hat = p_hat(p);
    }
    rep.A_t = A_t(m, p, t);
    rep.eps2 = eps2(m, p);
    rep.epsp = epsp(m, p);
    const std::int64_t N = level_for(m, p);
    rep.level = N;
    rep.theorem_bound = floor(theorem_bound_value(p, m)).get_si();
    if (p >= 5 && m % p == 0 && is_squarefree(m)) {
        std::int64_t prod = 1;
        for (auto [q, e] : factorize(m)) {
            if (q != p) {
                prod *= q + 1;
            }
        }
        rep.closed_form_bound = ipow(2, *rep.eps2) * p_hat(p) * prod - 1;
    }

    if (N % *rep.A_t != 0) {
        return inapplicable("A_t = " + std::to_string(*rep.A_t) + " does not divide N = " + std::to_string(N));
    }
    const DeltaStarTuple tuple{m, p, N, ExponentVector::tcore(p), t};
    const auto membership = delta_star_check(tuple);
    if (!membership.member()) {
        return inapplicable("tuple fails Δ* condition(s) " + membership.failed());
    }
    const auto reps = coset_reps(N);
    if (!reps) {
        return inapplicable("neither N nor N/2 is square-free");
    }
    for (const auto& gamma : *reps) {
        if (p_mr(gamma, m, tuple.r) < 0) {
            return inapplicable("p_mr is negative at [[1,0],[" + std::to_string(gamma.c) + ",1]]");
        }
    }

    rep.P_set = P_set(m, tuple.r, t, options.s_range);
    const std::int64_t t_min = rep.P_set.front();
    const std::int64_t t_max = rep.P_set.back();
    rep.nu = nu_value(tuple, {}, t_min);
    rep.bound = floor(*rep.nu).get_si();

    const std::int64_t last_n = std::max<std::int64_t>(*rep.bound, 0);
    const auto order = static_cast<std::size_t>(m * last_n + t_max + 1);
    if (order > options.max_series) {
        throw std::length_error("verify_claim: needs " + std::to_string(order) + " coefficients, guard is " +
                                std::to_string(options.max_series));
    }
    std::shared_ptr<const qseries::ModSeries> series;
    if (options.cache != nullptr) {
        series = options.cache->get(p, static_cast<std::uint64_t>(u), order);
    } else {
        series = std::make_shared<const qseries::ModSeries>(
            cores::tcore_series(static_cast<int>(p), order, static_cast<std::uint64_t>(u)));
    }

    for (std::int64_t t_prime : rep.P_set) {
        for (std::int64_t n = 0; n <= *rep.bound; ++n) {
            const CoefficientCheck check{t_prime, n, series->coeff(static_cast<std::size_t>(m * n + t_prime))};
            rep.checks.push_back(check);
            if (check.residue != 0 && !rep.witness) {
                rep.witness = check;
            }
        }
    }
    rep.verdict = rep.witness ? Verdict::refuted : Verdict::proven;
    return rep;
}

} // namespace tcore::rs
