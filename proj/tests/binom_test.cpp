#include <ppinv/binom.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace ppinv;

namespace {

// m(m-1)...(m-k+1)/k! exactly, then reduced mod p.  Small |m|, k only.
std::uint64_t generalized_binom_exact(std::int64_t m, std::uint64_t k, std::uint64_t p) {
    __int128 num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= static_cast<__int128>(m) - static_cast<__int128>(i);
        den *= static_cast<__int128>(i + 1);
    }
    const __int128 v = num / den;
    const __int128 P = static_cast<__int128>(p);
    return static_cast<std::uint64_t>(((v % P) + P) % P);
}

std::uint64_t pow3(unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= 3;
    return r;
}

} // namespace

TEST(BinomModP, Examples) {
    EXPECT_EQ(binom_mod_p(6, 1, 3), 0u);
    EXPECT_EQ(binom_mod_p(12, 3, 3), 1u);  // 220
    for (std::uint64_t m : {0u, 1u, 17u, 1000u}) EXPECT_EQ(binom_mod_p(m, 0, 5), 1u);
    EXPECT_EQ(binom_mod_p(3, 5, 3), 0u);
    EXPECT_THROW(binom_mod_p(5, 2, 9), std::invalid_argument);
    EXPECT_THROW(binom_generalized_mod_p(5, 2, 1), std::invalid_argument);
}

TEST(BinomModP, MatchesPascalTriangle) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
        std::vector<std::uint64_t> row{1};
        for (std::uint64_t m = 0; m <= 200; ++m) {
            for (std::uint64_t k = 0; k <= m; ++k) ASSERT_EQ(binom_mod_p(m, k, p), row[k]) << m << " " << k;
            std::vector<std::uint64_t> next(m + 2, 1);
            for (std::uint64_t k = 1; k <= m; ++k) next[k] = (row[k - 1] + row[k]) % p;
            row = std::move(next);
        }
    }
}

TEST(BinomGeneralized, MatchesExactProductFormula) {
    for (std::uint64_t p : {3u, 5u, 7u})
        for (std::int64_t m = -40; m <= 40; ++m)
            for (std::uint64_t k = 0; k <= 12; ++k)
                ASSERT_EQ(binom_generalized_mod_p(m, k, p), generalized_binom_exact(m, k, p)) << m << " " << k;
    EXPECT_EQ(binom_generalized_mod_p(-1, 0, 3), 1u);
}

TEST(BinomGeneralized, NegativeUpperIndexReduction) {
    // C(-2-2i, i-1) = (-1)^{i-1} C(3i, i-1) mod 3
    for (std::int64_t i = 1; i <= 400; ++i) {
        const std::uint64_t lhs = binom_generalized_mod_p(-2 - 2 * i, static_cast<std::uint64_t>(i - 1), 3);
        std::uint64_t rhs = binom_mod_p(static_cast<std::uint64_t>(3 * i), static_cast<std::uint64_t>(i - 1), 3);
        if ((i - 1) % 2 == 1) rhs = (3 - rhs) % 3;
        ASSERT_EQ(lhs, rhs) << "i=" << i;
    }
}

TEST(BinomGeneralized, ShiftByPrimePowerInvariance) {
    std::mt19937_64 rng(11);
    for (auto [q, p] : std::vector<std::pair<std::int64_t, std::uint64_t>>{{9, 3}, {27, 3}, {25, 5}, {49, 7}}) {
        std::uniform_int_distribution<std::int64_t> md(-300, 300);
        std::uniform_int_distribution<std::uint64_t> kd(0, static_cast<std::uint64_t>(q - 1));
        for (int s = 0; s < 300; ++s) {
            const auto m = md(rng);
            const auto k = kd(rng);
            ASSERT_EQ(binom_generalized_mod_p(q + m, k, p), binom_generalized_mod_p(m, k, p));
        }
    }
}

TEST(Digits, Examples) {
    EXPECT_EQ(digits(4, 3).digits, (std::vector<std::uint64_t>{1, 1}));
    EXPECT_TRUE(digits(0, 3).digits.empty());
    EXPECT_EQ(digits(0, 3, 3).digits, (std::vector<std::uint64_t>{0, 0, 0}));
    EXPECT_EQ(digits(5, 3, 4).digits, (std::vector<std::uint64_t>{2, 1, 0, 0}));
    EXPECT_THROW(digits(9, 3, 2), std::invalid_argument);
    for (std::uint64_t m : {0u, 1u, 100u, 12345u}) EXPECT_EQ(digits(m, 7).value(), m);
}

TEST(Digits, RangeWidthIsAllTwos) {
    for (unsigned n = 1; n <= 10; ++n) {
        const std::uint64_t q = pow3(n);
        const auto d = digits((5 * q - 3) / 6 - (q + 1) / 2, 3, n - 1);
        for (auto t : d.digits) EXPECT_EQ(t, 2u);
    }
}

TEST(Theorem3Support, Examples) {
    EXPECT_EQ(theorem3_support(1), (std::set<std::uint64_t>{1}));
    EXPECT_EQ(theorem3_support(2), (std::set<std::uint64_t>{1, 4}));
    EXPECT_EQ(theorem3_support(3), (std::set<std::uint64_t>{1, 4, 13}));
    EXPECT_THROW(theorem3_support(0), std::invalid_argument);
}

TEST(Theorem3Support, MatchesLucasEnumeration) {
    for (unsigned n = 1; n <= 7; ++n) {
        const std::uint64_t q = pow3(n);
        std::set<std::uint64_t> brute;
        for (std::uint64_t i = 1; i < q; ++i)
            if (binom_mod_p(3 * i, i - 1, 3) != 0) brute.insert(i);
        EXPECT_EQ(brute, theorem3_support(n)) << "n=" << n;
        // nothing above (q-1)/2
        for (std::uint64_t i = (q - 1) / 2 + 1; i < q; ++i) ASSERT_EQ(binom_mod_p(3 * i, i - 1, 3), 0u);
    }
}

TEST(Theorem4Support, Examples) {
    EXPECT_EQ(theorem4_support(2), (std::set<std::uint64_t>{5, 6, 7}));
    EXPECT_EQ(theorem4_support(1), (std::set<std::uint64_t>{2}));
    EXPECT_EQ(theorem4_range(2), (std::pair<std::uint64_t, std::uint64_t>{5, 7}));
    EXPECT_THROW(theorem4_point(1, 0, 3), std::invalid_argument);
    EXPECT_THROW(theorem4_point(0, 3, 3), std::invalid_argument);
    EXPECT_THROW(theorem6_signed_value(2, 2, 2), std::invalid_argument);
}

TEST(Theorem4Support, EquivalentCharacterizations) {
    for (unsigned n = 1; n <= 6; ++n) {
        const std::uint64_t q = pow3(n);
        const auto [lo, hi] = theorem4_range(n);
        const auto predicted = theorem4_support(n);
        for (std::uint64_t i = lo; i <= hi; ++i) {
            const bool nonzero = binom_mod_p(3 * i - (q - 1) / 2, i - lo, 3) != 0;
            ASSERT_EQ(nonzero, predicted.count(i) == 1) << "n=" << n << " i=" << i;
            ASSERT_EQ(nonzero, theorem4_digits_monotone(i, n)) << "n=" << n << " i=" << i;
        }
    }
    EXPECT_THROW(theorem4_digits_monotone(4, 2), std::invalid_argument);
}

TEST(Theorem5And6, ResiduesMatchLucas) {
    for (unsigned n = 1; n <= 6; ++n) {
        const std::uint64_t q = pow3(n);
        const std::uint64_t lo = (q + 1) / 2;
        for (unsigned k = 0; k < n; ++k)
            for (unsigned j = 0; j <= k; ++j) {
                const std::uint64_t i = theorem4_point(j, k, n);
                const std::uint64_t v = binom_mod_p(3 * i - (q - 1) / 2, i - lo, 3);
                EXPECT_EQ(v, theorem5_value(j, k, n));
                EXPECT_EQ(v, j == k ? 1u : 2u);
                const std::uint64_t signed_v = (i - lo) % 2 == 0 ? v : (3 - v) % 3;
                EXPECT_EQ(signed_v, theorem6_signed_value(j, k, n));
            }
    }
}

TEST(Theorem6, SignParityIdentity) {
    for (unsigned m = 0; m <= 12; ++m) EXPECT_EQ(((pow3(m) - 1) / 2) % 2, m % 2) << "m=" << m;
}
