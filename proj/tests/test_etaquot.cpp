#include <gtest/gtest.h>

#include <numeric>

#include "tcore/cores.hpp"
#include "tcore/etaquot.hpp"

using namespace tcore;
using namespace tcore::eta;

namespace {

Rational closed_form_weight_B(int alpha, std::int64_t m, int j) {
    return make_rational(ipow(3, alpha) * m - 1, 2) + ipow(2, j - 1);
}

Rational closed_form_weight_D(int alpha, std::int64_t m, int j) {
    return make_rational(ipow(3, alpha) * m - 1, 2) + ipow(3, j);
}

Rational closed_form_weight_density(std::int64_t p, int a, int j, std::int64_t t) {
    return make_rational(t + (ipow(p, a + j) - 1) - ipow(p, j), 2);
}

// Kronecker symbol of (-1)^k prod δ^{|r_δ|} at d, evaluated on the full integer.
int character_oracle(const EtaQuotient& e, std::int64_t d) {
    Integer s = 1;
    std::int64_t k2 = 0;
    for (auto [delta, r] : e.exponents()) {
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), Integer(static_cast<long>(delta)).get_mpz_t(), static_cast<unsigned long>(std::llabs(r)));
        s *= power;
        k2 += r;
    }
    if ((k2 / 2) % 2 != 0) {
        s = -s;
    }
    return mpz_kronecker(s.get_mpz_t(), Integer(static_cast<long>(d)).get_mpz_t());
}

} // namespace

TEST(EtaQuotient, ValidatesDivisors) {
    EXPECT_THROW(EtaQuotient(10, {{3, 1}}), std::invalid_argument);
    EXPECT_THROW(EtaQuotient(0, {}), std::invalid_argument);
    EXPECT_EQ(EtaQuotient(6, {{2, 0}, {3, 1}}).exponents().size(), 1u);
}

TEST(EtaQuotient, ParseAndPrint) {
    const auto e = EtaQuotient::parse(" N = 192 ; 24 : 4 , 48 : -2 ");
    EXPECT_EQ(e.level(), 192);
    EXPECT_EQ(e.exponent(24), 4);
    EXPECT_EQ(e.exponent(48), -2);
    EXPECT_EQ(e.to_string(), "N=192;24:4,48:-2");
    EXPECT_EQ(EtaQuotient::parse(e.to_string()), e);
    EXPECT_THROW(EtaQuotient::parse("N=192;24:4,24:1"), std::invalid_argument);
    EXPECT_THROW(EtaQuotient::parse("192;24:4"), std::invalid_argument);
    EXPECT_THROW(EtaQuotient::parse("N=192;24"), std::invalid_argument);
    EXPECT_THROW(EtaQuotient::parse("N=192;7:1"), std::invalid_argument);
}

TEST(Weight, Examples) {
    EXPECT_EQ(weight(build_B(0, 1, 1).quotient), 1);
    EXPECT_EQ(weight(EtaQuotient(1, {{1, 1}})), make_rational(1, 2));
    EXPECT_EQ(weight(build_B(1, 5, 2).quotient), 9);
    EXPECT_EQ(weight(build_B(0, 5, 1).quotient), 3);
}

TEST(Conditions24, Examples) {
    EXPECT_EQ(check_conditions_24(build_B(0, 1, 1).quotient), (Conditions24{true, true}));
    EXPECT_EQ(check_conditions_24(EtaQuotient(1, {{1, 1}})), (Conditions24{false, false}));
    for (int alpha = 0; alpha <= 2; ++alpha) {
        EXPECT_TRUE(check_conditions_24(build_D(alpha, 5, 1).quotient).both());
    }
}

TEST(MinimalLevel, SmallestValidMultiplier) {
    // B family over base 2^4 3^{α+1} m: 4 at j = 1.
    for (int alpha = 0; alpha <= 2; ++alpha) {
        for (std::int64_t m : {1, 5, 7, 11}) {
            const auto b = build_B(alpha, m, 1).quotient;
            const auto choice = minimal_level(b.exponents(), 16 * ipow(3, alpha + 1) * m);
            EXPECT_EQ(choice.multiplier, 4);
            EXPECT_EQ(choice.level, b.level());
            const auto d = build_D(alpha, m, 1).quotient;
            EXPECT_EQ(minimal_level(d.exponents(), d.level()).multiplier, 1);
        }
    }
    EXPECT_THROW(minimal_level({{1, 1}}, 1), std::domain_error);
}

TEST(MinimalLevel, ConventionalLevelsAreValidMultiples) {
    for (int alpha = 0; alpha <= 2; ++alpha) {
        for (std::int64_t m : {1, 5, 7, 11}) {
            for (int j = 1; j <= 2; ++j) {
                const auto b = build_B(alpha, m, j).quotient;
                const std::int64_t base_b = 16 * ipow(3, alpha + 1) * m;
                EXPECT_EQ(4 % minimal_level(b.exponents(), base_b).multiplier, 0);
                EXPECT_TRUE(check_conditions_24(b).both());
            }
        }
    }
    for (auto [p, a, t] : {std::tuple{5, 1, 5}, {7, 1, 7}, {5, 2, 25}, {5, 1, 35}, {7, 1, 35}}) {
        const auto e = build_B_density(p, a, 1, t).quotient;
        EXPECT_EQ(24 % minimal_level(e.exponents(), 24 * t).multiplier, 0);
        EXPECT_TRUE(check_conditions_24(e).both());
    }
}

TEST(CuspOrder, Examples) {
    const auto b = build_B(0, 1, 1).quotient;
    EXPECT_GT(cusp_order(b, 1), 0);
    EXPECT_EQ(cusp_order(b, 16), 0);
    EXPECT_EQ(cusp_order(EtaQuotient(1, {{1, 24}}), 1), 1);
    EXPECT_THROW(cusp_order(b, 5), std::invalid_argument);
}

TEST(CertifyHolomorphic, Builders) {
    for (auto [alpha, m, j] : {std::tuple{0, 1, 1}, {1, 5, 1}, {0, 7, 2}}) {
        EXPECT_TRUE(certify_holomorphic(build_B(alpha, m, j).quotient).holomorphic);
    }
    EXPECT_TRUE(certify_holomorphic(build_D(1, 1, 1).quotient).holomorphic);
    EXPECT_TRUE(certify_holomorphic(build_D(0, 5, 1).quotient).holomorphic);
    const auto bad = certify_holomorphic(EtaQuotient(2, {{1, 1}, {2, -1}}));
    EXPECT_FALSE(bad.holomorphic);
    const auto half = certify_holomorphic(EtaQuotient(1, {{1, 1}}));
    EXPECT_FALSE(half.integral_weight);
    EXPECT_FALSE(half.holomorphic);
}

TEST(CertifyHolomorphic, ParameterSweep) {
    for (int alpha = 0; alpha <= 2; ++alpha) {
        for (std::int64_t m : {1, 5, 7, 11}) {
            for (int j = 1; j <= 2; ++j) {
                const auto b = build_B(alpha, m, j).quotient;
                const auto rb = certify_holomorphic(b);
                EXPECT_TRUE(rb.holomorphic) << b.to_string();
                EXPECT_EQ(rb.weight, closed_form_weight_B(alpha, m, j));
                EXPECT_EQ(b.level(), 64 * ipow(3, alpha + 1) * m);
                const auto d = build_D(alpha, m, j).quotient;
                const auto rd = certify_holomorphic(d);
                EXPECT_TRUE(rd.holomorphic) << d.to_string();
                EXPECT_EQ(rd.weight, closed_form_weight_D(alpha, m, j));
                EXPECT_EQ(d.level(), 8 * ipow(3, alpha + 2) * m);
                bool touches_zero = false;
                for (const auto& [dd, order] : rb.cusp_orders) {
                    touches_zero = touches_zero || order == 0;
                }
                EXPECT_TRUE(touches_zero) << b.to_string();
            }
        }
    }
    for (std::int64_t t : {5, 7, 25, 35}) {
        for (auto [p, a] : factorize(t)) {
            for (int j = 1; j <= 2; ++j) {
                const auto e = build_B_density(p, a, j, t).quotient;
                const auto r = certify_holomorphic(e);
                EXPECT_TRUE(r.holomorphic) << e.to_string();
                EXPECT_EQ(r.weight, closed_form_weight_density(p, a, j, t));
                EXPECT_EQ(e.level(), 576 * t);
            }
        }
    }
}

TEST(Kronecker, Examples) {
    EXPECT_EQ(kronecker(2, 7), 1);
    for (int a = -10; a <= 10; ++a) {
        EXPECT_EQ(kronecker(a, 1), 1);
    }
    EXPECT_EQ(kronecker(5, 3), -1);
    EXPECT_EQ(kronecker(3, 5), -1);
    EXPECT_EQ(kronecker(2, 3), -1);
}

TEST(Kronecker, MatchesGmp) {
    for (std::int64_t a = -60; a <= 60; ++a) {
        for (std::int64_t n = -60; n <= 60; ++n) {
            ASSERT_EQ(kronecker(a, n), mpz_kronecker(Integer(static_cast<long>(a)).get_mpz_t(),
                                                     Integer(static_cast<long>(n)).get_mpz_t()))
                << a << " " << n;
        }
    }
}

TEST(Character, Examples) {
    const auto b = build_B(0, 1, 1).quotient;
    EXPECT_EQ(character(b, 1), 1);
    EXPECT_EQ(character(b, 5), character_oracle(b, 5));
    EXPECT_THROW(character(EtaQuotient(1, {{1, 1}}), 5), std::domain_error);
    EXPECT_THROW(character(b, 6), std::invalid_argument);
}

TEST(Character, MatchesFullKroneckerAndIsMultiplicative) {
    std::vector<EtaQuotient> quotients = {build_B(0, 1, 1).quotient, build_B(1, 1, 1).quotient,
                                          build_B(0, 5, 1).quotient, build_D(0, 1, 1).quotient,
                                          build_D(1, 5, 2).quotient, build_B_density(5, 1, 1, 5).quotient,
                                          build_B_density(7, 1, 1, 35).quotient};
    for (const auto& e : quotients) {
        std::vector<std::int64_t> coprime;
        for (std::int64_t d = 1; d < 400; ++d) {
            if (std::gcd(d, e.level()) == 1) {
                coprime.push_back(d);
                ASSERT_EQ(character(e, d), character_oracle(e, d)) << e.to_string() << " d=" << d;
                EXPECT_EQ(character(e, d) * character(e, d), 1);
            }
        }
        for (std::size_t i = 0; i + 1 < coprime.size() && i < 30; ++i) {
            const auto d1 = coprime[i];
            const auto d2 = coprime[i + 1];
            EXPECT_EQ(character(e, d1 * d2), character(e, d1) * character(e, d2));
        }
    }
}

TEST(Builders, Examples) {
    const auto b0 = build_B(0, 1, 1);
    EXPECT_EQ(b0.quotient, EtaQuotient(192, {{24, 4}, {48, -2}}));
    EXPECT_EQ(b0.shift, 0);
    const auto b1 = build_B(1, 1, 1);
    EXPECT_EQ(b1.quotient.exponents(), (std::map<std::int64_t, std::int64_t>{{24, -1}, {72, 7}, {144, -2}}));
    EXPECT_EQ(b1.shift, 8);
    EXPECT_EQ(build_D(0, 1, 1).quotient.level(), 72);
    EXPECT_EQ(weight(build_D(0, 1, 1).quotient), 3);
    const auto bd = build_B_density(5, 1, 1, 5);
    EXPECT_EQ(bd.quotient.level(), 2880);
    EXPECT_EQ(bd.shift, 24);
    EXPECT_EQ(weight(bd.quotient), 12);
    // {120: 5, 24: 24, 120: -5} merges to η(24z)^24.
    EXPECT_EQ(bd.quotient.exponents(), (std::map<std::int64_t, std::int64_t>{{24, 24}}));
    EXPECT_THROW(build_B(0, 3, 1), std::invalid_argument);
    EXPECT_THROW(build_D(0, 2, 1), std::invalid_argument);
    EXPECT_THROW(build_B_density(3, 1, 1, 3), std::invalid_argument);
    EXPECT_THROW(build_B_density(5, 2, 1, 5), std::invalid_argument);
}

TEST(Expand, Singleton) {
    const EtaQuotient e(24, {{24, 1}});
    auto expect = qseries::shift_up(qseries::dilate(qseries::euler_function(3), 24, 60), 1, 60);
    EXPECT_EQ(expand(e, 1, 60), expect);
    EXPECT_THROW(expand(e, 0, 60), std::invalid_argument);
    EXPECT_THROW(expand(EtaQuotient(1, {{1, 1}}), 0, 10), std::domain_error);
}

TEST(Expand, GeneratingFunctionIdentities) {
    const auto a3 = cores::tcore_series(3, 60);
    const auto checks = [&](const ShiftedEtaQuotient& s, std::uint64_t u, std::int64_t offset) {
        const auto series = expand(s.quotient, s.shift, static_cast<std::size_t>(24 * 50 + offset + 1), u);
        for (int n = 0; n <= 50; ++n) {
            ASSERT_EQ(series.coeff(24 * n + offset), qseries::reduce_mod(a3, u).coeff(n)) << "n=" << n;
        }
    };
    checks(build_B(1, 1, 1), 4, 8);
    checks(build_D(1, 1, 1), 9, 8);
}

TEST(Expand, DensityQuotient) {
    const auto a5 = cores::tcore_series(5, 60, 25);
    const auto s = build_B_density(5, 1, 1, 5);
    const auto series = expand(s.quotient, s.shift, 24 * 50 + 25, 25);
    for (int n = 0; n <= 50; ++n) {
        ASSERT_EQ(series.coeff(24 * n + 24), a5.coeff(n)) << n;
    }
}
