#include <ppinv/text.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace ppinv;

TEST(ParsePoly, Examples) {
    auto F = Field::create(3, 2);
    EXPECT_EQ(parse_poly("x^3 + 2*x + 1", F).coeffs(), (std::vector<Elem>{Elem{1}, Elem{2}, Elem{0}, Elem{1}}));
    EXPECT_EQ(parse_poly("g^4", F), Poly::constant(F, F->from_int(-1)));
    EXPECT_EQ(parse_poly("g^4", F).coeff(0), Elem{2});
    EXPECT_EQ(parse_poly("x^9", F), Poly::x(F));
    EXPECT_EQ(parse_poly("x - x", F), Poly(F));
    EXPECT_EQ(parse_poly("-x", F), -Poly::x(F));
    EXPECT_EQ(parse_poly("[0,1]*x^2", F), Poly::monomial(F, F->from_coords(std::vector<std::uint64_t>{0, 1}), 2));
    EXPECT_EQ(parse_poly("g^-1*x", F), Poly::monomial(F, F->inv(F->primitive()), 1));
    EXPECT_EQ(parse_poly("  x^5 -x^6- x^7 - x + x^2 ", F),
              Poly::from_terms(F, {{F->one(), 5}, {F->from_int(-1), 6}, {F->from_int(-1), 7}, {F->from_int(-1), 1},
                                   {F->one(), 2}}));
}

TEST(ParsePoly, ErrorsCarryPosition) {
    auto F = Field::create(3, 2);
    for (const char* bad : {"", "x^", "2*", "y", "x^3 +", "9", "[1,2", "[3]", "x^3x", "2*y"})
        EXPECT_THROW(parse_poly(bad, F), ParseError) << bad;
    try {
        parse_poly("x + 9", F);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}

TEST(ParseElement, Forms) {
    auto F = Field::create(3, 2);
    EXPECT_EQ(parse_element("7", *F), Elem{7});
    EXPECT_EQ(parse_element("[1,2]", *F), Elem{7});
    EXPECT_EQ(parse_element("[]", *F), F->zero());
    EXPECT_EQ(parse_element("g^0", *F), F->one());
    EXPECT_EQ(parse_element("g^9", *F), F->primitive());
    EXPECT_THROW(parse_element("[1,1,1]", *F), ParseError);
    EXPECT_THROW(parse_element("g^", *F), ParseError);
}

TEST(ParseField, Forms) {
    auto F = parse_field("3^2");
    EXPECT_EQ(F->order(), 9u);
    EXPECT_EQ(parse_field("3^2:1,0,1")->modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    EXPECT_EQ(parse_field("5")->order(), 5u);
    EXPECT_EQ(format_field(*parse_field("3^4")), "3^4:" + [] {
        const auto m = Field::create(3, 4)->modulus();
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
        return s;
    }());
    EXPECT_THROW(parse_field("3^"), ParseError);
    EXPECT_THROW(parse_field("x"), ParseError);
    EXPECT_THROW(parse_field("3^2:2,0,1"), std::invalid_argument);
    EXPECT_THROW(parse_field("4^1"), std::invalid_argument);
}

TEST(RenderPoly, Examples) {
    auto F = Field::create(3, 2);
    EXPECT_EQ(render_poly(Poly(F)), "0");
    EXPECT_EQ(render_poly(parse_poly("x^3 + 2*x + 1", F)), "x^3 + 2*x + 1");
    EXPECT_EQ(render_poly(Poly::x(F)), "x");
}

TEST(RenderPoly, RoundTrip) {
    std::mt19937_64 rng(12);
    for (unsigned n : {1u, 2u, 3u, 4u}) {
        auto F = Field::create(3, n);
        std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(F->order() - 1));
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Elem> c(F->order());
            for (auto& e : c) e = d(rng) % 3 == 0 ? Elem{d(rng)} : F->zero();
            const Poly f(F, c);
            ASSERT_EQ(parse_poly(render_poly(f), F), f) << render_poly(f);
        }
    }
    auto G = Field::create(5, 2);
    std::uniform_int_distribution<std::uint32_t> d(0, 24);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Elem> c(25);
        for (auto& e : c) e = Elem{d(rng)};
        const Poly f(G, c);
        ASSERT_EQ(parse_poly(render_poly(f), G), f);
    }
}
