#pragma once

// Finite-check proofs of congruences a_p(mn + t') ≡ 0 (mod u) for p-core
// partition numbers, following the Radu–Sellers Δ* machinery specialised to
// the generating function (q^p;q^p)^p / (q;q), i.e. r = (r_1 = -1, r_p = p).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tcore/arith.hpp"
#include "tcore/qseries.hpp"

namespace tcore::rs {

/// Exponents r_δ indexed by the divisors δ of M.
struct ExponentVector {
    std::int64_t M = 1;
    std::map<std::int64_t, std::int64_t> r;

    /// (r_1, r_p) = (-1, p): the p-core generating function.
    static ExponentVector tcore(std::int64_t p) { return {p, {{1, -1}, {p, p}}}; }

    std::int64_t sum() const;        // Σ r_δ
    std::int64_t delta_sum() const;  // Σ δ r_δ
    /// Throws std::invalid_argument unless every key divides M.
    void validate() const;
};

struct DeltaStarTuple {
    std::int64_t m = 1;
    std::int64_t M = 1;
    std::int64_t N = 1;
    ExponentVector r;
    std::int64_t t = 0;
};

/// Conditions (a)–(f) of Δ*, plus the decomposition prod δ^{|r_δ|} = 2^s j.
struct DeltaStarReport {
    bool a = false;
    bool b = false;
    bool c = false;
    bool d = false;
    bool e = false;
    bool f = false;
    std::int64_t s = 0;
    std::int64_t j_mod8 = 1;

    bool member() const { return a && b && c && d && e && f; }
    std::string failed() const;
};

struct CongruenceClaim {
    std::int64_t p = 0;
    std::int64_t m = 0;
    std::int64_t t = 0;
    std::int64_t u = 0;

    bool operator==(const CongruenceClaim&) const = default;
};

struct Matrix2 {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 1;

    std::int64_t det() const { return a * d - b * c; }
    bool operator==(const Matrix2&) const = default;
};

/// Which residues s act on t in P(t).
enum class SRange {
    squares,    // squares in (Z/24m)^*
    all_units,  // every unit of Z/24m (comparison only)
};

std::int64_t kappa(std::int64_t m);

/// (p^2 - 1)/24; throws std::domain_error for p < 5.
std::int64_t p_hat(std::int64_t p);

std::int64_t A_t(std::int64_t m, std::int64_t p, std::int64_t t);

int eps2(std::int64_t m, std::int64_t p);
int epsp(std::int64_t m, std::int64_t p);

/// P_{m,r}(t): sorted orbit of t under t -> ts + (s-1)/24 Σ δ r_δ (mod m).
std::vector<std::int64_t> P_set(std::int64_t m, const ExponentVector& r, std::int64_t t,
                                SRange range = SRange::squares);

DeltaStarReport delta_star_check(const DeltaStarTuple& tuple);

/// min over λ in [0, m) of (1/24) Σ r_δ gcd^2(δa + δκλc, mc) / (δm).
Rational p_mr(const Matrix2& gamma, std::int64_t m, const ExponentVector& r);

/// (1/24) Σ_{δ|N} a_δ gcd^2(δ, c) / δ.
Rational p_star_a(const Matrix2& gamma, const std::map<std::int64_t, std::int64_t>& a, std::int64_t N);

/// {[[1,0],[δ,1]] : δ | N}, a full set of double coset representatives of
/// Γ0(N)\Γ/Γ∞ when N or N/2 is square-free; nullopt otherwise.
std::optional<std::vector<Matrix2>> coset_reps(std::int64_t N);

/// [Γ : Γ0(N)] = N prod_{q|N} (1 + 1/q).
std::int64_t index_gamma0(std::int64_t N);

/// The Sturm-type cutoff ν (exact). Throws std::domain_error unless the
/// tuple is in Δ*, coset representatives are available and
/// p_mr + p*_a >= 0 at each of them.
Rational nu_value(const DeltaStarTuple& tuple, const std::map<std::int64_t, std::int64_t>& a, std::int64_t t_min);

/// ⌊ν⌋.
std::int64_t nu_bound(const DeltaStarTuple& tuple, const std::map<std::int64_t, std::int64_t>& a,
                      std::int64_t t_min);

enum class BoundVariant {
    general,  // ⌊2^{ε2}(p+1)^{εp}(p-1)prod(p_i+1)/24 - (p^2-1)/(24m)⌋; second = m
    two_p,    // m = 2p: 2^{ε2}·3·p̂ - 1; second ignored
    p_q,      // m = pq: p̂(q+1); second = q
};

/// Closed-form bounds from the corollaries. Throws std::invalid_argument when
/// (p, second) do not have the variant's shape.
std::int64_t corollary_bounds(BoundVariant variant, std::int64_t p, std::int64_t second = 0);

/// Thread-safe store of a_p(n) mod u expansions; a request is served by any
/// cached expansion of the same (p, u) that is long enough.
class TcoreSeriesCache {
public:
    std::shared_ptr<const qseries::ModSeries> get(std::int64_t p, std::uint64_t u, std::size_t order);

private:
    std::mutex mutex_;
    std::map<std::pair<std::int64_t, std::uint64_t>, std::shared_ptr<const qseries::ModSeries>> entries_;
};

enum class Verdict { proven, refuted, not_applicable };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

struct CoefficientCheck {
    std::int64_t t_prime = 0;
    std::int64_t n = 0;
    std::uint64_t residue = 0;

    bool operator==(const CoefficientCheck&) const = default;
};

struct VerificationReport {
    CongruenceClaim claim;
    std::optional<std::int64_t> kappa;
    std::optional<std::int64_t> p_hat;
    std::optional<std::int64_t> A_t;
    std::optional<int> eps2;
    std::optional<int> epsp;
    std::optional<std::int64_t> level;  // N
    std::vector<std::int64_t> P_set;
    std::optional<Rational> nu;
    std::optional<std::int64_t> bound;
    std::optional<std::int64_t> theorem_bound;
    std::optional<std::int64_t> closed_form_bound;
    std::vector<CoefficientCheck> checks;
    Verdict verdict = Verdict::not_applicable;
    std::optional<CoefficientCheck> witness;
    std::string reason;
};

inline constexpr std::size_t kDefaultMaxSeries = 200000;
inline constexpr std::int64_t kMaxModulusFactor = 1000000;

struct VerifyOptions {
    SRange s_range = SRange::squares;
    std::size_t max_series = kDefaultMaxSeries;
    TcoreSeriesCache* cache = nullptr;
};

/// Runs the finite check. Malformed or inadmissible claims give
/// Verdict::not_applicable; throws std::length_error when the required
/// expansion exceeds options.max_series.
VerificationReport verify_claim(const CongruenceClaim& claim, const VerifyOptions& options = {});

} // namespace tcore::rs
