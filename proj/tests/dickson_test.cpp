#include <ppinv/binom.hpp>
#include <ppinv/dickson.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace ppinv;

TEST(DicksonPoly, SmallIndices) {
    auto F = Field::create(3, 2);
    for (auto a : F->elements()) {
        const Poly d1 = dickson_poly({1, a, true}, F);
        EXPECT_EQ(d1, Poly::constant(F, a));
        // a^2 - 2x
        const Poly d2 = dickson_poly({2, a, true}, F);
        EXPECT_EQ(d2, Poly(F, {F->mul(a, a), F->from_int(-2)}));
        for (std::uint64_t n = 1; n <= 20; ++n)
            ASSERT_EQ(dickson_poly({n, a, true}, F).eval(F->zero()), F->pow(a, static_cast<std::int64_t>(n)));
    }
    EXPECT_THROW(dickson_poly({0, F->one(), false}, F), std::invalid_argument);
}

TEST(DicksonPoly, FunctionalEquation) {
    // D_n(y + a/y, a) = y^n + (a/y)^n
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {5, 2}, {7, 1}}) {
        auto F = Field::create(p, n);
        for (std::uint64_t idx : {1u, 2u, 3u, 7u, 11u, 14u}) {
            for (auto a : F->elements()) {
                const Poly d = dickson_poly({idx, a, false}, F);
                for (auto y : F->elements()) {
                    if (y == F->zero()) continue;
                    const Elem ay = F->div(a, y);
                    const auto e = static_cast<std::int64_t>(idx);
                    ASSERT_EQ(d.eval(F->add(y, ay)), F->add(F->pow(y, e), F->pow(ay, e)));
                }
            }
        }
    }
}

TEST(DicksonCoefficient, MatchesRationalForm) {
    std::vector<std::vector<unsigned __int128>> C(51, std::vector<unsigned __int128>(51, 0));
    for (std::size_t m = 0; m <= 50; ++m) {
        C[m][0] = 1;
        for (std::size_t k = 1; k <= m; ++k) C[m][k] = C[m - 1][k - 1] + C[m - 1][k];
    }
    for (std::uint64_t n = 1; n <= 50; ++n)
        for (std::uint64_t i = 0; 2 * i <= n; ++i) {
            const unsigned __int128 num = static_cast<unsigned __int128>(n) * C[n - i][i];
            ASSERT_EQ(num % (n - i), 0u);
            const unsigned __int128 exact = num / (n - i);
            for (std::uint64_t p : {3u, 5u, 7u})
                ASSERT_EQ(dickson_coefficient_mod_p(n, i, p), static_cast<std::uint64_t>(exact % p))
                    << "n=" << n << " i=" << i << " p=" << p;
        }
    EXPECT_THROW(dickson_coefficient_mod_p(4, 3, 3), std::invalid_argument);
}

TEST(HouPP, IsPermutation) {
    for (unsigned n : {2u, 4u, 6u}) EXPECT_TRUE(is_permutation(hou_pp(Field::create(3, n)))) << "n=" << n;
}

TEST(HouPP, RejectsOddDegreeAndOtherCharacteristic) {
    EXPECT_THROW(hou_pp(Field::create(3, 3)), std::invalid_argument);
    EXPECT_THROW(hou_pp(Field::create(5, 2)), std::invalid_argument);
    EXPECT_THROW(theorem1_inverse(Field::create(3, 1)), std::invalid_argument);
    EXPECT_THROW(reversed_dickson_inverse_3n5(Field::create(7, 2)), std::invalid_argument);
}

TEST(HouPP, BranchView) {
    for (unsigned n : {2u, 4u}) {
        auto F = Field::create(3, n);
        const Poly f = hou_pp(F);
        const auto bpp = hou_branches(F);
        const CyclotomicClasses cls(F);
        for (auto c : F->elements()) ASSERT_EQ(f.eval(c), bpp(cls, c));
        // x(x+1)^2
        const Poly xp1(F, {F->one(), F->one()});
        EXPECT_EQ(bpp.f1, Poly::x(F) * xp1 * xp1);
    }
}

TEST(Theorem1, GF9Instance) {
    auto F = Field::create(3, 2);
    const Elem one = F->one(), m1 = F->from_int(-1);
    const Poly expected = Poly::monomial(F, one, 3) * Poly::from_terms(F, {{one, 4}, {one, 0}}) +
                          Poly::from_terms(F, {{one, 1}, {one, 2}, {one, 3}}) * Poly::from_terms(F, {{one, 4}, {m1, 0}});
    EXPECT_EQ(theorem1_inverse(F), expected);
    const Poly f = hou_pp(F), g = theorem1_inverse(F);
    for (auto c : F->elements()) EXPECT_EQ(g.eval(f.eval(c)), c);
}

TEST(Theorem1, MatchesOracleAndGenericMachinery) {
    for (unsigned n : {2u, 4u}) {
        auto F = Field::create(3, n);
        const Poly g = theorem1_inverse(F);
        EXPECT_EQ(g, invert_by_interpolation(hou_pp(F))) << "n=" << n;

        const auto bpp = hou_branches(F);
        const CyclotomicClasses cls(F);
        const auto behavior = analyze(bpp, cls);
        const Poly g0 = Poly::monomial(F, F->from_int(-1), detail::ipow(3, n - 1));
        const Poly g1 = theorem2_branch_inverse(bpp.f1, cls, 1, 1);
        EXPECT_EQ(g1, hou_branch1_inverse(F));
        EXPECT_EQ(lemma2_assemble_inverse(bpp, g0, g1, behavior), g);
        EXPECT_EQ(invert_branched(bpp), g);
    }
}

TEST(Theorem1, PointwiseAtDegreeSix) {
    auto F = Field::create(3, 6);
    const Poly f = hou_pp(F), g = theorem1_inverse(F);
    for (auto c : F->elements()) ASSERT_EQ(g.eval(f.eval(c)), c);
}

TEST(Theorem1, BranchInverseSupportMatchesBinomialPrediction) {
    for (unsigned n : {2u, 4u, 6u}) {
        auto F = Field::create(3, n);
        const Poly g1 = hou_branch1_inverse(F);
        const std::uint64_t h = (F->order() - 1) / 2;
        std::set<std::uint64_t> support, predicted;
        for (std::size_t e = 0; e < g1.coeffs().size(); ++e)
            if (g1.coeffs()[e] != F->zero()) support.insert(e);
        for (auto i : theorem4_support(n)) predicted.insert(i - h);
        EXPECT_EQ(support, predicted) << "n=" << n;
        // coefficient (-1)^{j+k} times multiplicity
        for (unsigned k = 0; k < n; ++k)
            for (unsigned j = 0; j <= k; ++j) {
                const std::uint64_t i = theorem4_point(j, k, n);
                EXPECT_EQ(g1.coeff(i - h).index, theorem6_signed_value(j, k, n));
            }
    }
}

TEST(ReversedDickson, IdentityAndInverse) {
    for (unsigned n : {2u, 4u}) {
        auto F = Field::create(3, n);
        const Poly d = reversed_dickson_3n5(F);
        EXPECT_EQ(d, dickson_poly({F->order() + 5, F->one(), true}, F)) << "n=" << n;
        const Poly dinv = reversed_dickson_inverse_3n5(F);
        EXPECT_EQ(compose(dinv, d), Poly::x(F));
        EXPECT_EQ(compose(d, dinv), Poly::x(F));
        EXPECT_EQ(dinv, invert_by_interpolation(d));
    }
}
