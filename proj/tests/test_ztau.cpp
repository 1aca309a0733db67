#include "jtdfe/curve_params.hpp"
#include "jtdfe/errors.hpp"
#include "jtdfe/ztau.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jtdfe;

namespace {

BigInt random_big(std::mt19937_64& rng, unsigned bits) {
    BigInt v = 0;
    for (unsigned i = 0; i < bits; i += 64) v = (v << 64) + BigInt(std::to_string(rng()));
    v >>= static_cast<mp_bitcnt_t>((bits + 63) / 64 * 64 - bits);
    return (rng() & 1) ? BigInt(-v) : v;
}

KleinianInt random_kle(std::mt19937_64& rng, unsigned bits) {
    return KleinianInt(random_big(rng, bits), random_big(rng, bits));
}

std::vector<int> widen(const std::vector<std::int8_t>& d) { return {d.begin(), d.end()}; }
std::vector<int> widen(const std::vector<std::uint8_t>& d) { return {d.begin(), d.end()}; }

}  // namespace

class ZtauBothMu : public ::testing::TestWithParam<Mu> {};

TEST_P(ZtauBothMu, RingLaws) {
    const Mu mu = GetParam();
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_kle(rng, 100), y = random_kle(rng, 100), z = random_kle(rng, 100);
        EXPECT_EQ(mul(x, y, mu), mul(y, x, mu));
        EXPECT_EQ(mul(mul(x, y, mu), z, mu), mul(x, mul(y, z, mu), mu));
        EXPECT_EQ(mul(x, y + z, mu), mul(x, y, mu) + mul(x, z, mu));
        EXPECT_EQ(norm(mul(x, y, mu), mu), norm(x, mu) * norm(y, mu));
        EXPECT_EQ(mul(x, conj(x, mu), mu), KleinianInt(norm(x, mu), BigInt(0)));
    }
}

TEST_P(ZtauBothMu, TauSatisfiesCharacteristicEquation) {
    const Mu mu = GetParam();
    const KleinianInt tau(0L, 1L);
    EXPECT_EQ(mul(tau, tau, mu), KleinianInt(-2L, to_int(mu)));
    for (unsigned k = 0; k < 40; ++k) EXPECT_EQ(norm(tau_pow(k, mu), mu), BigInt(1) << k);
}

TEST_P(ZtauBothMu, DivTau) {
    const Mu mu = GetParam();
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        KleinianInt x = random_kle(rng, 80);
        if (x.a % 2 != 0) {
            EXPECT_THROW(div_tau(x, mu), NotDivisible);
            x.a += 1;
        }
        EXPECT_EQ(mul(KleinianInt(0L, 1L), div_tau(x, mu), mu), x);
    }
}

TEST_P(ZtauBothMu, ExactQuotient) {
    const Mu mu = GetParam();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto x = random_kle(rng, 60), y = random_kle(rng, 40);
        if (y.is_zero()) continue;
        const auto q = exact_quotient(mul(x, y, mu), y, mu);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, x);
    }
    EXPECT_FALSE(exact_quotient(KleinianInt(1L, 0L), KleinianInt(0L, 1L), mu).has_value());
    EXPECT_THROW(exact_quotient(KleinianInt(1L, 0L), KleinianInt(), mu), DivisionByZero);
}

TEST(Ztau, RoundDivHalvesAwayFromZero) {
    EXPECT_EQ(round_div(5, 2), 3);
    EXPECT_EQ(round_div(-5, 2), -3);
    EXPECT_EQ(round_div(4, 3), 1);
    EXPECT_EQ(round_div(-4, 3), -1);
    EXPECT_EQ(round_div(5, 3), 2);
    EXPECT_EQ(round_div(-5, 3), -2);
    EXPECT_EQ(round_div(0, 7), 0);
}

TEST(Ztau, DeltaMatchesGeometricSum) {
    for (Mu mu : {Mu::Plus, Mu::Minus}) {
        for (unsigned m : {2u, 5u, 11u, 163u}) {
            std::vector<int> ones(m, 1);
            const KleinianInt d = delta(m, mu);
            EXPECT_EQ(d, oracle::eval_lsb_first(ones, mu));
            // (tau - 1) * delta = tau^m - 1
            EXPECT_EQ(mul(d, KleinianInt(-1L, 1L), mu), tau_pow(m, mu) - KleinianInt(1L, 0L));
        }
    }
    EXPECT_EQ(delta(5, Mu::Plus), KleinianInt(-1L, -2L));
    EXPECT_EQ(norm(delta(5, Mu::Plus), Mu::Plus), 11);
}

TEST(Ztau, ReductionSoundness) {
    const CurveParams p = CurveParams::koblitz(1, 163);
    const KleinianInt d = delta(p.m, p.mu);
    const BigInt nd = norm(d, p.mu);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
        BigInt k = abs(random_big(rng, 163)) % (p.n - 1) + 1;
        const KleinianInt rho = reduce_mod_delta(k, p);
        ASSERT_TRUE(exact_quotient(KleinianInt(k, BigInt(0)) - rho, d, p.mu).has_value());
        EXPECT_LE(norm(rho, p.mu), nd);
    }
    EXPECT_THROW(reduce_mod_delta(0, p), OutOfRange);
    EXPECT_THROW(reduce_mod_delta(p.n, p), OutOfRange);
    EXPECT_NO_THROW(reduce_mod_delta(p.n - 1, p));
}

TEST(Ztau, KoblitzParamsK163) {
    const CurveParams p = CurveParams::koblitz(1, 163);
    EXPECT_EQ(p.h, 2u);
    EXPECT_EQ(p.r, BigInt("4000000000000000000020108a2e0cc0d99f8a5ef", 16));
    EXPECT_NO_THROW(p.validate());
    CurveParams bad = p;
    bad.r += 1;
    EXPECT_THROW(bad.validate(), InvalidConfig);
}

TEST(Ztau, UnsignedExpansionWorkedExample) {
    EXPECT_EQ(tau_expand_unsigned(KleinianInt(-5L, -18L), Mu::Plus).msb_string(), "1101011011");
    EXPECT_EQ(tau_expand_unsigned(KleinianInt(-21L, 5L), Mu::Plus).msb_string(), "111011001");
    EXPECT_EQ(tau_expand_unsigned(KleinianInt(), Mu::Plus).msb_string(), "");
}

TEST_P(ZtauBothMu, UnsignedRoundTripLarge) {
    const Mu mu = GetParam();
    std::mt19937_64 rng(5);
    int nonterminating = 0;
    for (int i = 0; i < 10000; ++i) {
        const KleinianInt x = random_kle(rng, 162);
        try {
            const TauExpansion e = tau_expand_unsigned(x, mu);
            ASSERT_EQ(oracle::eval_lsb_first(widen(e.digits), mu), x) << x.str();
            if (!e.digits.empty()) EXPECT_EQ(e.digits.back(), 1);
        } catch (const NonTerminating&) {
            ++nonterminating;
        }
    }
    RecordProperty("nonterminating", nonterminating);
    EXPECT_EQ(nonterminating, 0);
}

TEST_P(ZtauBothMu, UnsignedSmallBoxTerminates) {
    const Mu mu = GetParam();
    for (long a = -40; a <= 40; ++a)
        for (long b = -40; b <= 40; ++b) {
            const KleinianInt x(a, b);
            EXPECT_EQ(eval_digits(tau_expand_unsigned(x, mu).digits, mu), x);
        }
}

TEST_P(ZtauBothMu, TnafIsNonAdjacentAndExact) {
    const Mu mu = GetParam();
    std::mt19937_64 rng(6);
    for (int i = 0; i < 2000; ++i) {
        const KleinianInt x = random_kle(rng, 90);
        const TauNaf n = tnaf(x, mu);
        ASSERT_EQ(oracle::eval_lsb_first(widen(n.digits), mu), x);
        for (std::size_t j = 1; j < n.length(); ++j) EXPECT_FALSE(n.digits[j] != 0 && n.digits[j - 1] != 0);
    }
    EXPECT_EQ(tnaf(KleinianInt(), mu).length(), 0u);
}

TEST_P(ZtauBothMu, TjsfExactAndSparse) {
    const Mu mu = GetParam();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const KleinianInt x = random_kle(rng, 90), y = random_kle(rng, 90);
        const TauJsf j = tjsf(x, y, mu);
        ASSERT_EQ(j.rows[0].size(), j.rows[1].size());
        ASSERT_EQ(oracle::eval_lsb_first(widen(j.rows[0]), mu), x);
        ASSERT_EQ(oracle::eval_lsb_first(widen(j.rows[1]), mu), y);
        // among any three consecutive columns at least one is all zero
        for (std::size_t c = 2; c < j.length(); ++c) {
            bool some_zero = false;
            for (std::size_t k = c - 2; k <= c; ++k) some_zero |= j.rows[0][k] == 0 && j.rows[1][k] == 0;
            EXPECT_TRUE(some_zero) << "columns " << c - 2 << ".." << c;
        }
    }
}

TEST_P(ZtauBothMu, TjsfWeightBetweenBruteMinimumAndNafPair) {
    const Mu mu = GetParam();
    // not pointwise: only the totals are ordered against the tau-NAF pair
    std::size_t jsf_total = 0, naf_total = 0;
    for (long a0 = -12; a0 <= 12; a0 += 3)
        for (long b0 = -12; b0 <= 12; b0 += 4)
            for (long a1 = -12; a1 <= 12; a1 += 5)
                for (long b1 = -12; b1 <= 12; b1 += 3) {
                    const KleinianInt x(a0, b0), y(a1, b1);
                    const TauJsf j = tjsf(x, y, mu);
                    const TauNaf n0 = tnaf(x, mu), n1 = tnaf(y, mu);
                    std::size_t naf_pair = 0;
                    for (std::size_t c = 0; c < std::max(n0.length(), n1.length()); ++c)
                        if ((c < n0.length() && n0.digits[c]) || (c < n1.length() && n1.digits[c])) ++naf_pair;
                    const int best = oracle::brute_min_joint_weight(x, y, mu, static_cast<int>(j.length()) + 4);
                    ASSERT_GE(best, 0);
                    EXPECT_LE(static_cast<std::size_t>(best), j.joint_weight());
                    jsf_total += j.joint_weight();
                    naf_total += naf_pair;
                }
    EXPECT_LT(jsf_total, naf_total);
}

TEST(Ztau, DensitiesOnReducedScalars) {
    const CurveParams p = CurveParams::koblitz(1, 163);
    std::mt19937_64 rng(8);
    double naf_nz = 0, naf_len = 0, jsf_nz = 0, jsf_len = 0;
    for (int i = 0; i < 2000; ++i) {
        const BigInt k = abs(random_big(rng, 163)) % (p.n - 1) + 1;
        const BigInt l = abs(random_big(rng, 163)) % (p.n - 1) + 1;
        const KleinianInt e0 = reduce_mod_delta(k, p), e1 = reduce_mod_delta(l, p);
        const TauNaf n = tnaf(e0, p.mu);
        naf_nz += static_cast<double>(n.weight());
        naf_len += static_cast<double>(n.length());
        const TauJsf j = tjsf(e0, e1, p.mu);
        jsf_nz += static_cast<double>(j.joint_weight());
        jsf_len += static_cast<double>(j.length());
    }
    EXPECT_NEAR(naf_nz / naf_len, 1.0 / 3.0, 0.02);
    EXPECT_NEAR(jsf_nz / jsf_len, 0.5, 0.02);
}

TEST(Ztau, KleinianString) {
    EXPECT_EQ(KleinianInt(-5L, -18L).str(), "(-5,-18)");
    EXPECT_EQ(KleinianInt().str(), "(0,0)");
}

INSTANTIATE_TEST_SUITE_P(BothMu, ZtauBothMu, ::testing::Values(Mu::Plus, Mu::Minus),
                         [](const auto& info) { return info.param == Mu::Plus ? "MuPlus" : "MuMinus"; });
