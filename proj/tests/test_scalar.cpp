/*
   Copyright 2026 The zpair Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "support.hpp"

using namespace zpair;

namespace {

const FieldContext Q5 = FieldContext::quadratic(5);

Scalar q5(long a, long b) { return Scalar(mpq_class(a), mpq_class(b), Q5); }

}  // namespace

TEST(Scalar, RationalArithmetic) {
    Scalar half(mpq_class(1, 2)), third(mpq_class(1, 3));
    EXPECT_EQ(half + third, Scalar(mpq_class(5, 6)));
    EXPECT_EQ(half - third, Scalar(mpq_class(1, 6)));
    EXPECT_EQ(half * third, Scalar(mpq_class(1, 6)));
    EXPECT_EQ(half / third, Scalar(mpq_class(3, 2)));
}

TEST(Scalar, QuadraticArithmetic) {
    Scalar rt = Scalar::sqrt_of(Q5);
    EXPECT_EQ(rt * rt, Scalar(5));
    EXPECT_EQ(Scalar(1) / q5(2, 1), q5(-2, 1));
    EXPECT_EQ(q5(1, 1) * q5(1, -1), Scalar(-4));
    EXPECT_TRUE(((q5(3, 2) - q5(3, 2))).is_zero());
}

TEST(Scalar, ZeroTests) {
    EXPECT_TRUE(q5(0, 0).is_zero());
    EXPECT_FALSE(Scalar(mpq_class(1, 7)).is_zero());
    EXPECT_TRUE((Scalar(3) - Scalar(3) + (q5(0, 2) - q5(0, 2))).is_zero());
}

TEST(Scalar, Errors) {
    EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
    EXPECT_THROW(q5(0, 0).inverse(), std::domain_error);
    Scalar r2 = Scalar::sqrt_of(FieldContext::quadratic(2));
    EXPECT_THROW(Scalar::sqrt_of(Q5) + r2, std::invalid_argument);
    EXPECT_THROW(FieldContext::quadratic(4), std::invalid_argument);
    EXPECT_THROW(FieldContext::quadratic(1), std::invalid_argument);
    EXPECT_THROW(Scalar(mpq_class(1), mpq_class(1), FieldContext{}), std::invalid_argument);
}

TEST(Scalar, RationalsEmbedInQuadraticFields) {
    EXPECT_EQ(Scalar(2) * Scalar::sqrt_of(Q5), q5(0, 2));
    EXPECT_EQ(q5(1, 1) + Scalar(mpq_class(1, 2)), Scalar(mpq_class(3, 2), mpq_class(1), Q5));
}

TEST(Scalar, InverseProperty) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> c(-50, 50);
    for (int k = 0; k < 200; ++k) {
        Scalar x(mpq_class(c(rng), 1 + std::abs(c(rng))), mpq_class(c(rng), 1 + std::abs(c(rng))), Q5);
        if (x.is_zero()) continue;
        EXPECT_TRUE((x * x.inverse()).is_one());
    }
}

TEST(Scalar, ParsePrintRoundTrip) {
    for (std::string s : {"0", "3/4", "-2", "1/2+3/5*rt", "1/2-3/5*rt", "0+1*rt", "-7-1*rt"}) {
        EXPECT_EQ(to_string(parse_scalar(s, Q5)), s);
    }
    EXPECT_EQ(parse_scalar("rt", Q5), Scalar::sqrt_of(Q5));
    EXPECT_EQ(parse_scalar("-rt", Q5), q5(0, -1));
    EXPECT_EQ(parse_scalar("2+rt", Q5), q5(2, 1));
    EXPECT_EQ(parse_scalar("6/4"), Scalar(mpq_class(3, 2)));
    EXPECT_EQ(to_string(parse_scalar("6/4")), "3/2");
}

TEST(Scalar, ParseErrors) {
    EXPECT_THROW(parse_scalar("rt"), std::invalid_argument);
    EXPECT_THROW(parse_scalar("1/"), std::invalid_argument);
    EXPECT_THROW(parse_scalar("abc"), std::invalid_argument);
    EXPECT_THROW(parse_scalar(""), std::invalid_argument);
    EXPECT_THROW(parse_scalar("1/0"), std::domain_error);
    EXPECT_THROW(parse_scalar("1+2rt", Q5), std::invalid_argument);
}

TEST(Scalar, ResidueIsARingMap) {
    const auto p = modular::draw_primes(1, 5).front();
    const auto root = *modular::sqrt_mod(5, p);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-1000, 1000);
    for (int k = 0; k < 200; ++k) {
        Scalar x(mpq_class(c(rng), 1 + std::abs(c(rng))), mpq_class(c(rng)), Q5);
        Scalar y(mpq_class(c(rng)), mpq_class(c(rng), 1 + std::abs(c(rng))), Q5);
        EXPECT_EQ((x + y).residue(p, root), (x.residue(p, root) + y.residue(p, root)) % p);
        EXPECT_EQ((x * y).residue(p, root), modular::mul_mod(x.residue(p, root), y.residue(p, root), p));
    }
}

TEST(Scalar, UnluckyPrime) {
    const std::uint64_t p = modular::draw_primes(1).front();
    Scalar x(mpq_class(1, static_cast<unsigned long>(p)));
    EXPECT_THROW(x.residue(p, 0), UnluckyPrime);
}

TEST(Modular, PrimesAndRoots) {
    auto ps = modular::draw_primes(3, 5);
    ASSERT_EQ(ps.size(), 3u);
    for (auto p : ps) {
        EXPECT_GT(p, 1ULL << 31);
        EXPECT_LT(p, 1ULL << 32);
        EXPECT_TRUE(modular::is_prime(p));
        auto r = modular::sqrt_mod(5, p);
        ASSERT_TRUE(r);
        EXPECT_EQ(modular::mul_mod(*r, *r, p), 5u);
    }
    EXPECT_TRUE(std::is_sorted(ps.rbegin(), ps.rend()));
    EXPECT_FALSE(modular::is_prime(1));
    EXPECT_TRUE(modular::is_prime(2));
    EXPECT_FALSE(modular::is_prime(3215031751ULL));
    EXPECT_FALSE(modular::sqrt_mod(2, 5).has_value());
}
