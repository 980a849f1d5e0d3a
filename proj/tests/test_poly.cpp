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
using zpair::testing::var;

namespace {

HomogPoly random_poly(std::mt19937_64& rng, int n, int d) {
    std::uniform_int_distribution<long> c(-5, 5);
    HomogPoly p(n, d);
    for (const auto& m : monomials_of_degree(n, d)) p.add_term(m, Scalar(c(rng)));
    return p;
}

Derivation random_derivation(std::mt19937_64& rng, int n, int d) {
    std::vector<HomogPoly> comps;
    for (int i = 0; i < n; ++i) comps.push_back(random_poly(rng, n, d));
    return Derivation(comps);
}

}  // namespace

TEST(Poly, MonomialBasisSizes) {
    for (int n = 1; n <= 6; ++n) {
        for (int d = 0; d <= 15; ++d) {
            MonomialBasis b(n, d);
            EXPECT_EQ(b.size(), binomial(n + d - 1, d)) << n << " " << d;
            for (std::size_t k = 0; k < b.size(); k += 7) EXPECT_EQ(b.find(b.list()[k]), k);
        }
    }
    MonomialBasis b(3, 2);
    EXPECT_EQ(b.find(Monomial{1, 1, 1}), b.size());
}

TEST(Poly, ApplyDerivation) {
    const int n = 3;
    HomogPoly x = var(0, n), y = var(1, n), z = var(2, n);
    Derivation e = Derivation::euler(n);
    LinearForm a = zpair::testing::form("1 -1 2");
    EXPECT_EQ(apply(e, a), a.to_poly());
    Derivation t = Derivation::coordinate(1, x * z);
    EXPECT_EQ(apply(t, a), Scalar(-1) * (x * z));
    EXPECT_EQ(t(y * y), Scalar(2) * (x * y * z));
    EXPECT_EQ(e(x * y * z), Scalar(3) * (x * y * z));
}

TEST(Poly, ReduceModLinearForm) {
    const int n = 3;
    HomogPoly x = var(0, n), y = var(1, n), z = var(2, n);
    LinearForm xy = zpair::testing::form("1 -1 0"), yz = zpair::testing::form("0 1 -1");
    HomogPoly got = reduce_mod(x * x, xy);
    ASSERT_EQ(got.nvars(), 2);
    EXPECT_EQ(got, var(0, 2) * var(0, 2));
    got = reduce_mod(y * (x - y), yz);
    EXPECT_EQ(got, var(1, 2) * (var(0, 2) - var(1, 2)));
    EXPECT_TRUE(reduce_mod((x - y) * z, xy).is_zero());
}

TEST(Poly, DivisionIdentity) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        HomogPoly f = random_poly(rng, 3, 1 + k % 5);
        LinearForm a({Scalar(1 + k % 3), Scalar(-2), Scalar(k % 4)});
        if (k % 2) a = LinearForm({Scalar(0), Scalar(3), Scalar(1)});
        auto dv = divide_by_linear(f, a);
        EXPECT_EQ(dv.quotient * a.to_poly() + dv.remainder, f);
        for (const auto& [m, c] : dv.remainder.terms()) EXPECT_EQ(m[a.pivot()], 0);
    }
}

TEST(Poly, Divides) {
    const int n = 3;
    HomogPoly x = var(0, n), y = var(1, n), z = var(2, n);
    LinearForm xy = zpair::testing::form("1 -1 0");
    EXPECT_TRUE(divides(xy, (x - y) * (z + x)));
    EXPECT_FALSE(divides(xy, x * y + z * z));
    EXPECT_TRUE(divides(xy, HomogPoly(n, 4)));
}

TEST(Poly, DerivationIsLinearAndLeibniz) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        Derivation t = random_derivation(rng, 3, 2);
        HomogPoly f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2), h = random_poly(rng, 3, 3);
        EXPECT_EQ(t(f + g), t(f) + t(g));
        EXPECT_EQ(t(Scalar(mpq_class(3, 7)) * f), Scalar(mpq_class(3, 7)) * t(f));
        EXPECT_EQ(t(f * h), t(f) * h + f * t(h));
        EXPECT_EQ((f * t)(h), f * t(h));
    }
}

TEST(Poly, ReductionIsARingMap) {
    std::mt19937_64 rng(9);
    LinearForm a({Scalar(2), Scalar(-3), Scalar(5)});
    for (int k = 0; k < 10; ++k) {
        HomogPoly f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2), h = random_poly(rng, 3, 1);
        EXPECT_EQ(reduce_mod(f + g, a), reduce_mod(f, a) + reduce_mod(g, a));
        EXPECT_EQ(reduce_mod(f * h, a), reduce_mod(f, a) * reduce_mod(h, a));
    }
}

TEST(Poly, QuadraticCoefficients) {
    const FieldContext q5 = FieldContext::quadratic(5);
    LinearForm a({Scalar(1), Scalar(0), Scalar(2) + Scalar::sqrt_of(q5)});
    HomogPoly f = a.to_poly() * var(1, 3);
    EXPECT_TRUE(divides(a, f));
    EXPECT_EQ(a.normalized(), a);
    LinearForm b({Scalar(0), Scalar(2) + Scalar::sqrt_of(q5), Scalar(1)});
    EXPECT_TRUE(b.normalized()[1].is_one());
    EXPECT_TRUE(projectively_equal(b, LinearForm({Scalar(0), Scalar(1), Scalar(-2) + Scalar::sqrt_of(q5)})));
}

TEST(Poly, ShapeErrors) {
    EXPECT_THROW(var(0, 3) + var(0, 2), std::invalid_argument);
    EXPECT_THROW(var(0, 3) + var(0, 3) * var(1, 3), std::invalid_argument);
    HomogPoly p(3, 2);
    EXPECT_THROW(p.add_term(Monomial{1, 0, 0}, Scalar(1)), std::invalid_argument);
    EXPECT_THROW(divide_by_linear(p, LinearForm({Scalar(0), Scalar(0), Scalar(0)})), std::invalid_argument);
    EXPECT_THROW(Derivation::euler(3) + Derivation::euler(2), std::invalid_argument);
}

TEST(Poly, DeletedA3Generators) {
    const int n = 3;
    HomogPoly x = var(0, n), y = var(1, n), z = var(2, n);
    Derivation t2 = Derivation::coordinate(1, y * (x - y));
    Derivation t3 = Derivation::coordinate(2, z * (x - z));
    LinearForm h = zpair::testing::form("0 1 -1");
    EXPECT_EQ(apply(t2, h), y * (x - y));
    EXPECT_FALSE(divides(h, apply(t2, h)));
    EXPECT_TRUE(divides(h, apply(t2 + t3, h)));
    EXPECT_TRUE(apply(Derivation(n, 2), h).is_zero());
}
