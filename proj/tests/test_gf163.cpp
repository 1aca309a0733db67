#include "jtdfe/errors.hpp"
#include "jtdfe/gf163.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jtdfe;
using namespace jtdfe::gf163;

namespace {

FieldElement random_fe(std::mt19937_64& rng) {
    return FieldElement::from_words({rng(), rng(), rng() & ((std::uint64_t{1} << 35) - 1)});
}

}  // namespace

TEST(Gf163, MulMatchesBitSerialReference) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const FieldElement a = random_fe(rng), b = random_fe(rng);
        ASSERT_EQ(mul(a, b), oracle::slow_mul(a, b)) << a.to_hex() << " * " << b.to_hex();
    }
    const FieldElement top = FieldElement::monomial(162);
    EXPECT_EQ(mul(top, top), oracle::slow_mul(top, top));
}

TEST(Gf163, SquareIsSelfProduct) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const FieldElement a = random_fe(rng);
        EXPECT_EQ(sqr(a), mul(a, a));
    }
}

TEST(Gf163, FieldAxioms) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const FieldElement a = random_fe(rng), b = random_fe(rng), c = random_fe(rng);
        EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
        EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        EXPECT_EQ(add(a, a), FieldElement::zero());
        EXPECT_EQ(mul(a, FieldElement::one()), a);
        // Frobenius has order 163
        EXPECT_EQ(sqr_n(a, 163), a);
    }
}

TEST(Gf163, ReductionOfT163) {
    // t^163 = t^7 + t^6 + t^3 + 1
    const FieldElement t162 = FieldElement::monomial(162);
    const FieldElement t = FieldElement::monomial(1);
    EXPECT_EQ(mul(t162, t).to_hex(), "c9");
}

TEST(Gf163, InversionCostsNineMultiplications) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 200; ++i) {
        FieldElement a = random_fe(rng);
        if (a.is_zero()) continue;
        OpCounter ctr;
        const FieldElement ai = inv(a, &ctr);
        EXPECT_EQ(mul(a, ai), FieldElement::one());
        EXPECT_EQ(ctr.mul, 9u);
        EXPECT_EQ(ctr.inv, 1u);
        EXPECT_EQ(ctr.sqr, 162u);
    }
    EXPECT_EQ(inv(FieldElement::one()), FieldElement::one());
    EXPECT_THROW(inv(FieldElement::zero()), DivisionByZero);
}

TEST(Gf163, CountersTrackEachOperation) {
    OpCounter ctr;
    const FieldElement a = FieldElement::monomial(5), b = FieldElement::monomial(100);
    mul(a, b, &ctr);
    sqr(a, &ctr);
    sqr(a, &ctr);
    add(a, b, &ctr);
    EXPECT_EQ(ctr, (OpCounter{1, 2, 0, 1}));
    OpCounter sum = ctr;
    sum += ctr;
    EXPECT_EQ(sum - ctr, ctr);
}

TEST(Gf163, HexRoundTrip) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 200; ++i) {
        const FieldElement a = random_fe(rng);
        EXPECT_EQ(FieldElement::from_hex(a.to_hex()), a);
    }
    EXPECT_EQ(FieldElement::zero().to_hex(), "0");
    EXPECT_EQ(FieldElement::from_hex("0000ABC"), FieldElement::from_hex("abc"));
    EXPECT_EQ(FieldElement::from_hex("7" + std::string(40, 'f')).to_hex(), "7" + std::string(40, 'f'));
    EXPECT_THROW(FieldElement::from_hex("8" + std::string(40, '0')), std::invalid_argument);
    EXPECT_THROW(FieldElement::from_hex(std::string(42, '1')), std::invalid_argument);
    EXPECT_THROW(FieldElement::from_hex("12g"), std::invalid_argument);
    EXPECT_THROW(FieldElement::from_hex(""), std::invalid_argument);
    EXPECT_THROW(FieldElement::monomial(163), std::invalid_argument);
}

TEST(Gf163, TraceAndHalfTrace) {
    std::mt19937_64 rng(16);
    int ones = 0;
    for (int i = 0; i < 300; ++i) {
        const FieldElement c = random_fe(rng);
        const int tr = trace(c);
        ASSERT_EQ(tr, trace_by_definition(c));
        ones += tr;
        const auto z = solve_quadratic(c);
        if (tr == 1) {
            EXPECT_FALSE(z.has_value());
        } else {
            ASSERT_TRUE(z.has_value());
            EXPECT_EQ(add(sqr(*z), *z), c);
        }
    }
    // trace is balanced; a 300-sample count far from 150 would signal a bad mask
    EXPECT_GT(ones, 90);
    EXPECT_LT(ones, 210);
    EXPECT_EQ(trace(FieldElement::one()), 1);  // 163 is odd
}
