#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "printing.hpp"
#include "uglmn/qcoeff.hpp"

using namespace uglmn;

namespace {

const VFunc v = VFunc::v_power(1);
const VFunc vinv = VFunc::v_power(-1);

VFunc random_vfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), exp(-2, 3), len(0, 3);
    auto laurent = [&] {
        std::vector<std::pair<int, BigRat>> t;
        for (int k = len(rng); k > 0; --k) t.emplace_back(exp(rng), BigRat(coef(rng)));
        return VFunc::laurent(t);
    };
    VFunc num = laurent();
    VFunc den = laurent();
    if (den.is_zero()) den = VFunc(1);
    return num / den;
}

}  // namespace

TEST(BigRat, SmallArithmeticStaysInline) {
    BigRat a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, BigRat(1, 2));
    EXPECT_TRUE((a + b).is_small());
    EXPECT_EQ(BigRat(6, -4), BigRat(-3, 2));
    EXPECT_EQ((a / b).get_str(), "2");
    EXPECT_LT(BigRat(-1, 2), BigRat(1, 3));
}

TEST(BigRat, OverflowFallsBackAndDemotes) {
    const BigRat big(std::numeric_limits<long long>::max());
    const BigRat sq = big * big;
    EXPECT_FALSE(sq.is_small());
    EXPECT_EQ(sq.to_mpq(), mpq_class(big.to_mpq() * big.to_mpq()));
    const BigRat back = sq / big;
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, big);
    EXPECT_EQ(BigRat("123456789012345678901234567890/3").get_str(), "41152263004115226300411522630");
}

TEST(BigRat, DivisionByZeroThrows) {
    EXPECT_THROW(BigRat(1, 0), std::domain_error);
    EXPECT_THROW(BigRat(1) / BigRat(0), std::domain_error);
}

TEST(VFunc, CommonDenominator) {
    const VFunc sum = v + vinv;
    EXPECT_EQ(sum, VFunc(VPoly{{2, 1}, {0, 1}}, VPoly{{1, 1}}));
    EXPECT_TRUE((v * vinv).is_one());
}

TEST(VFunc, CancelsCommonFactors) {
    const VFunc q(VPoly{{2, 1}, {0, -1}}, VPoly{{1, 1}, {0, -1}});
    EXPECT_EQ(q, v + 1);
    EXPECT_TRUE(q.den().is_one());
}

TEST(VFunc, CanonicalFormIsUnique) {
    const VFunc a(VPoly{{1, 2}, {0, 2}}, VPoly{{2, 4}, {1, 4}});
    EXPECT_EQ(a.den(), (VPoly{{1, 1}}));
    EXPECT_EQ(a.num(), (VPoly{{0, BigRat(1, 2)}}));
    EXPECT_EQ(VFunc(VPoly{}, VPoly{{3, 7}}).den(), VPoly(BigRat(1)));
}

TEST(VFunc, InverseOfZeroThrows) {
    EXPECT_THROW(VFunc().inv(), std::domain_error);
    EXPECT_THROW(VFunc(1) / VFunc(), std::domain_error);
    EXPECT_THROW(VFunc(VPoly{{0, 1}}, VPoly{}), std::domain_error);
}

TEST(VFunc, TimesPowerMatchesMultiplication) {
    const VFunc x = (v + 3) / (v * v - 2);
    EXPECT_EQ(x.times_power(-3, -1), x * VFunc::v_power(-3, -1));
    EXPECT_EQ(quantum_integer(3).times_power(2), quantum_integer(3) * v * v);
}

TEST(VFunc, SignedPower) {
    VFunc::SignedPower sp{};
    ASSERT_TRUE(VFunc::v_power(-4, -1).as_signed_power(sp));
    EXPECT_EQ(sp.sign, -1);
    EXPECT_EQ(sp.exponent, -4);
    EXPECT_FALSE(quantum_integer(2).as_signed_power(sp));
    EXPECT_FALSE(VFunc(2).as_signed_power(sp));
}

TEST(QuantumInteger, SmallValues) {
    EXPECT_TRUE(quantum_integer(0).is_zero());
    EXPECT_TRUE(quantum_integer(1).is_one());
    EXPECT_EQ(quantum_integer(2), v + vinv);
    EXPECT_EQ(quantum_integer(3), v * v + 1 + vinv * vinv);
    EXPECT_THROW(quantum_integer(-1), std::invalid_argument);
}

TEST(QuantumInteger, ThreeTermIdentity) {
    for (int a = 0; a <= 30; ++a) {
        EXPECT_TRUE((quantum_integer(a) + quantum_integer(a + 2) - (v + vinv) * quantum_integer(a + 1)).is_zero()) << a;
    }
}

TEST(QuantumInteger, PascalRule) {
    for (int a = 0; a <= 40; ++a) {
        EXPECT_EQ(quantum_integer(a + 1), v * quantum_integer(a) + VFunc::v_power(-a)) << a;
    }
}

TEST(QuantumInteger, ClassicalLimit) {
    for (int i = 0; i <= 40; ++i) EXPECT_EQ(quantum_integer(i).evaluate(1), BigRat(i));
}

TEST(QuantumFactorial, SmallValues) {
    EXPECT_TRUE(quantum_factorial(0).is_one());
    EXPECT_EQ(quantum_factorial(2), v + vinv);
    const VFunc expected = (v + vinv) * (v * v + 1 + vinv * vinv);
    EXPECT_EQ(quantum_factorial(3), expected);
    EXPECT_EQ(quantum_factorial(3).to_string(), expected.to_string());
    EXPECT_EQ(quantum_factorial(5).evaluate(1), BigRat(120));
}

TEST(Evaluate, ExactValues) {
    EXPECT_EQ(quantum_integer(2).evaluate(3), BigRat(10, 3));
    EXPECT_EQ(v.evaluate(1), BigRat(1));
    EXPECT_EQ(vinv.evaluate(BigRat(-2)), BigRat(-1, 2));
}

TEST(Evaluate, PoleThrows) {
    const VFunc x = VFunc(1) / (v - vinv);
    EXPECT_THROW(x.evaluate(1), std::domain_error);
    EXPECT_THROW(x.evaluate(-1), std::domain_error);
    EXPECT_EQ(x.evaluate(2), BigRat(2, 3));
}

TEST(VFunc, RingAxiomsOnRandomValues) {
    std::mt19937 rng(12345);
    for (int t = 0; t < 200; ++t) {
        const VFunc a = random_vfunc(rng), b = random_vfunc(rng), c = random_vfunc(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
        // Evaluation is a ring map away from poles.
        const BigRat q(5, 2);
        if (!b.is_zero()) {
            try {
                EXPECT_EQ((a * b).evaluate(q), a.evaluate(q) * b.evaluate(q));
                EXPECT_EQ((a + b).evaluate(q), a.evaluate(q) + b.evaluate(q));
            } catch (const std::domain_error&) {
            }
        }
    }
}

TEST(VFunc, Printing) {
    EXPECT_EQ(VFunc().to_string(), "0");
    EXPECT_EQ(VFunc(1).to_string(), "1");
    EXPECT_NE((v + vinv).to_string().find("v^-1"), std::string::npos);
}
