#include <gtest/gtest.h>

#include <random>

#include "tricross/poly.hpp"

using tricross::LaurentPoly2;

namespace {

LaurentPoly2 random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(-4, 4), c(-3, 3), k(0, 5);
    LaurentPoly2 p;
    for (int i = k(rng); i > 0; --i) p += LaurentPoly2::monomial(c(rng), e(rng), e(rng));
    return p;
}

}  // namespace

TEST(LaurentPoly2, TextRoundTrip) {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto p = random_poly(rng);
        EXPECT_EQ(LaurentPoly2::parse(p.to_string()), p);
    }
    EXPECT_EQ(LaurentPoly2().to_string(), "0");
}

TEST(LaurentPoly2, ParseAcceptsAnyTermOrder) {
    auto p = LaurentPoly2::parse("1 a^1 z^0 + -2 a^-1 z^2 + 3 a^1 z^0");
    EXPECT_EQ(p.coeff(1, 0), 4);
    EXPECT_EQ(p.coeff(-1, 2), -2);
    EXPECT_EQ(p.size(), 2u);
    EXPECT_THROW(LaurentPoly2::parse("1 b^2"), std::invalid_argument);
}

TEST(LaurentPoly2, RingLaws) {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_TRUE((x - x).is_zero());
        EXPECT_EQ(x.pow(3), x * x * x);
    }
}

TEST(LaurentPoly2, MirrorIsAnInvolutiveRingMap) {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto x = random_poly(rng), y = random_poly(rng);
        EXPECT_EQ(x.mirrored().mirrored(), x);
        EXPECT_EQ((x * y).mirrored(), x.mirrored() * y.mirrored());
    }
    EXPECT_EQ(LaurentPoly2::delta().mirrored(), LaurentPoly2::delta());
}

TEST(LaurentPoly2, ShiftAndSpan) {
    auto p = LaurentPoly2::parse("1 a^-2 z^1 + 1 a^3 z^0");
    EXPECT_EQ(p.a_span(), 5);
    auto q = p.shifted(2, -1, -1);
    EXPECT_EQ(q.coeff(0, 0), -1);
    EXPECT_EQ(q.coeff(5, -1), -1);
}
