#include <gtest/gtest.h>

#include <random>

#include "tcore/qseries.hpp"

using namespace tcore;
using namespace tcore::qseries;

namespace {

IntSeries ints(std::initializer_list<std::int64_t> v, std::size_t order = 0) {
    return IntSeries::from_ints(IntegerRing{}, v, order);
}

ModSeries mods(std::uint64_t u, std::initializer_list<std::int64_t> v, std::size_t order = 0) {
    return ModSeries::from_ints(ResidueRing(u), v, order);
}

// Multiply out prod_{n=1}^{T-1} (1 - q^n) one factor at a time.
IntSeries naive_euler(std::size_t order) {
    std::vector<Integer> c(order, 0);
    c[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        for (std::size_t k = order; k-- > n;) {
            c[k] -= c[k - n];
        }
    }
    return IntSeries(IntegerRing{}, c);
}

IntSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<Integer> c(order);
    for (auto& x : c) {
        x = coef(rng);
    }
    if (unit_constant) {
        c[0] = (rng() & 1) ? 1 : -1;
    }
    return IntSeries(IntegerRing{}, c);
}

} // namespace

TEST(EulerFunction, PentagonalTerms) {
    EXPECT_EQ(euler_function(13), ints({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    EXPECT_EQ(euler_function(1), ints({1}));
    EXPECT_EQ(euler_function(ResidueRing(2), 13), mods(2, {1, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}));
}

TEST(EulerFunction, MatchesDirectProduct) {
    for (std::size_t order : {1u, 2u, 7u, 40u, 150u}) {
        EXPECT_EQ(euler_function(order), naive_euler(order)) << order;
    }
}

TEST(Mul, SmallProducts) {
    EXPECT_EQ(mul(ints({1, 1}, 3), ints({1, -1}, 3)), ints({1, 0, -1}));
    EXPECT_EQ(mul(ints({1, 1, 1}), ints({1, 1, 0})).truncate(2), ints({1, 2}));
    EXPECT_EQ(mul(ints({1, 1, 1}, 2), ints({1, 1}, 2)), ints({1, 2}));
    EXPECT_EQ(mul(euler_function(6), inverse(euler_function(6))), IntSeries::constant(IntegerRing{}, 1, 6));
}

TEST(Mul, TruncatesToShorterOrder) {
    EXPECT_EQ(mul(ints({1, 1}, 5), ints({1, 1}, 3)).order(), 3u);
}

TEST(Mul, ModulusMismatchThrows) {
    EXPECT_THROW(mul(mods(3, {1, 1}), mods(5, {1, 1})), std::invalid_argument);
    EXPECT_THROW(add(mods(3, {1, 1}), mods(9, {1, 1})), std::invalid_argument);
}

TEST(Pow, Examples) {
    EXPECT_EQ(pow(ints({1, -1}, 3), 2), ints({1, -2, 1}));
    EXPECT_EQ(pow(ints({3, 4, 5}), 0), ints({1, 0, 0}));
    // Brute-force product: 1 - 4q + 2q^2 + 8q^3 - 5q^4 - 4q^5 - 10q^6 + 8q^7 + 9q^8.
    const auto e4 = pow(euler_function(20), 4);
    EXPECT_EQ(e4.coeff(4), -5);
    EXPECT_EQ(e4.coeff(8), 9);
    EXPECT_EQ(e4, pow(naive_euler(20), 4));
}

TEST(Pow, BothStrategiesAgreeWithRepeatedMultiplication) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, 30, false);
        for (std::uint64_t e : {1u, 2u, 5u, 13u}) {
            auto expect = IntSeries::constant(IntegerRing{}, 1, 30);
            for (std::uint64_t k = 0; k < e; ++k) {
                expect = mul(expect, a);
            }
            EXPECT_EQ(pow(a, e), expect);
        }
    }
}

TEST(Inverse, Examples) {
    EXPECT_EQ(inverse(ints({1, -1}, 4)), ints({1, 1, 1, 1}));
    EXPECT_EQ(inverse(euler_function(8)), ints({1, 1, 2, 3, 5, 7, 11, 15}));
    EXPECT_EQ(inverse(ints({1}, 5)), ints({1}, 5));
}

TEST(Inverse, NonUnitConstantThrows) {
    EXPECT_THROW(inverse(ints({2, 1})), std::domain_error);
    EXPECT_THROW(inverse(ints({0, 1})), std::domain_error);
    EXPECT_THROW(inverse(mods(9, {3, 1})), std::domain_error);
    EXPECT_NO_THROW(inverse(mods(9, {2, 1})));
}

TEST(Inverse, TwoSidedOnRandomSeries) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> len(1, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t order = len(rng);
        auto a = random_series(rng, order, true);
        auto b = inverse(a);
        const auto one = IntSeries::constant(IntegerRing{}, 1, order);
        ASSERT_EQ(mul(a, b), one) << "trial " << trial;
        ASSERT_EQ(mul(b, a), one) << "trial " << trial;
    }
}

TEST(Inverse, ResidueRingRandom) {
    std::mt19937_64 rng(7);
    for (std::uint64_t u : {2ull, 9ull, 25ull, 1000003ull, (1ull << 40) + 15}) {
        auto a = reduce_mod(random_series(rng, 40, true), u);
        EXPECT_EQ(mul(a, inverse(a)), ModSeries::constant(ResidueRing(u), 1, 40)) << u;
    }
}

TEST(RingAxioms, OnRandomSeries) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_series(rng, 25, false);
        auto b = random_series(rng, 25, false);
        auto c = random_series(rng, 25, false);
        EXPECT_EQ(mul(a, b), mul(b, a));
        EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
        EXPECT_EQ(sub(add(a, b), b), a);
        auto ma = reduce_mod(a, 7), mb = reduce_mod(b, 7), mc = reduce_mod(c, 7);
        EXPECT_EQ(mul(ma, mb), reduce_mod(mul(a, b), 7));
        EXPECT_EQ(mul(ma, add(mb, mc)), add(mul(ma, mb), mul(ma, mc)));
    }
}

TEST(Dilate, Examples) {
    EXPECT_EQ(dilate(ints({1, -1}), 3, 4), ints({1, 0, 0, -1}));
    auto a = ints({1, 2, 3, 4});
    EXPECT_EQ(dilate(a, 1), a);
    EXPECT_EQ(dilate(euler_function(4), 2).coeff(2), -1);
    EXPECT_EQ(dilate(euler_function(4), 2).order(), 8u);
}

TEST(Dilate, Composition) {
    std::mt19937_64 rng(5);
    for (std::size_t k : {1u, 2u, 3u}) {
        for (std::size_t l : {1u, 2u, 5u}) {
            auto a = random_series(rng, 12, false);
            EXPECT_EQ(dilate(dilate(a, k), l), dilate(a, k * l));
        }
    }
}

TEST(Coefficients, ReadingPastTruncationThrows) {
    auto a = ints({1, 2, 3});
    EXPECT_EQ(a.coeff(2), 3);
    EXPECT_THROW(a.coeff(3), std::out_of_range);
    EXPECT_THROW(IntSeries::constant(IntegerRing{}, 1, 0), std::invalid_argument);
}

TEST(ReduceMod, Examples) {
    auto a = ints({1, -2, 1});
    EXPECT_EQ(reduce_mod(a, 2), mods(2, {1, 0, 1}));
    EXPECT_EQ(reduce_mod(reduce_mod(a, 6), 6), reduce_mod(a, 6));
    EXPECT_EQ(reduce_mod(reduce_mod(a, 6), 3), reduce_mod(a, 3));
    EXPECT_THROW(reduce_mod(reduce_mod(a, 6), 4), std::invalid_argument);
    const auto reduced = reduce_mod(ints({-7, 13, -1}), 5);
    for (auto c : reduced.coefficients()) {
        EXPECT_LT(c, 5u);
    }
}

TEST(ReduceMod, FrobeniusInstance) {
    EXPECT_EQ(reduce_mod(pow(euler_function(13), 4), 2),
              reduce_mod(pow(dilate(euler_function(7), 2, 13), 2), 2));
}

// (q;q)^{p^j} ≡ (q^p;q^p)^{p^{j-1}} (mod p^j).
TEST(ReduceMod, PrimePowerFrobenius) {
    const std::size_t order = 200;
    for (std::uint64_t p : {2u, 3u, 5u}) {
        std::uint64_t pj = 1;
        for (int j = 1; j <= 3; ++j) {
            const std::uint64_t prev = pj;
            pj *= p;
            const ResidueRing ring(pj);
            auto lhs = pow(euler_function(ring, order), pj);
            auto rhs = pow(dilate(euler_function(ring, order / p + 1), p, order), prev);
            EXPECT_EQ(lhs, rhs) << "p=" << p << " j=" << j;
        }
    }
}

TEST(ShiftUp, MovesAndTruncates) {
    EXPECT_EQ(shift_up(ints({1, 2, 3}), 2, 4), ints({0, 0, 1, 2}));
}
