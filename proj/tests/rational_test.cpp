// Copyright 2026 The SIA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sia/rational.hpp"

#include <limits>
#include <random>
#include <sstream>

#include "gtest/gtest.h"

namespace sia {
namespace {

TEST(RationalTest, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational(27).to_fraction_string(), "27/1");
}

TEST(RationalTest, ParseAcceptsIntegersFractionsDecimals) {
  EXPECT_EQ(*Rational::Parse("12"), Rational(12));
  EXPECT_EQ(*Rational::Parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(*Rational::Parse("0.25"), Rational(1, 4));
  EXPECT_EQ(*Rational::Parse("-1.5"), Rational(-3, 2));
  // Leading zeros are decimal, not octal.
  EXPECT_EQ(*Rational::Parse("010"), Rational(10));
  EXPECT_EQ(*Rational::Parse("08/010"), Rational(4, 5));
  EXPECT_EQ(*Rational::Parse("0.08"), Rational(2, 25));
  EXPECT_FALSE(Rational::Parse("0x10"));
  EXPECT_FALSE(Rational::Parse("1/0"));
  EXPECT_FALSE(Rational::Parse("abc"));
  EXPECT_FALSE(Rational::Parse(""));
  EXPECT_FALSE(Rational::Parse("1.2.3"));
}

TEST(RationalTest, FloorCeilOnNegatives) {
  EXPECT_EQ(Rational(-7, 2).floor(), Rational(-4));
  EXPECT_EQ(Rational(-7, 2).ceil(), Rational(-3));
  EXPECT_EQ(Rational(7, 2).floor(), Rational(3));
  EXPECT_EQ(Rational(5).ceil(), Rational(5));
}

TEST(RationalTest, DecimalRendering) {
  EXPECT_EQ(*Rational(3, 2).to_exact_decimal(), "1.5");
  EXPECT_EQ(*Rational(-1, 8).to_exact_decimal(), "-0.125");
  EXPECT_FALSE(Rational(1, 3).to_exact_decimal());
  EXPECT_EQ(Rational(2, 3).to_fixed(3), "0.667");
  EXPECT_EQ(Rational(-2, 3).to_fixed(2), "-0.67");
  EXPECT_EQ(Rational(1, 8).to_fixed(2), "0.13");
  EXPECT_EQ(Rational(27).to_fixed(6), "27.000000");
}

TEST(RationalTest, OverflowPromotesAndDemotes) {
  const int64_t big = std::numeric_limits<int64_t>::max();
  Rational r(big);
  Rational sq = r * r;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class(big) * mpz_class(big)));
  Rational back = sq / r;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, r);
  EXPECT_EQ(Rational(std::numeric_limits<int64_t>::min()) - Rational(1),
            Rational(mpq_class(mpz_class(std::numeric_limits<int64_t>::min()) -
                               1)));
}

// Every operation agrees with GMP on operands near the int64 edge.
TEST(RationalTest, ArithmeticMatchesGmp) {
  std::mt19937_64 rng(11);
  auto draw = [&rng]() -> int64_t {
    switch (rng() % 3) {
      case 0:
        return static_cast<int64_t>(rng() % 21) - 10;
      case 1:
        return static_cast<int64_t>(rng() % 2000001) - 1000000;
      default:
        return static_cast<int64_t>(rng() >> 1) * ((rng() & 1) ? 1 : -1);
    }
  };
  auto draw_den = [&]() {
    int64_t d = draw();
    return d == 0 ? int64_t{1} : d;
  };
  for (int trial = 0; trial < 4000; ++trial) {
    const int64_t an = draw(), ad = draw_den(), bn = draw(), bd = draw_den();
    Rational a(an, ad), b(bn, bd);
    mpq_class qa{mpz_class(an), mpz_class(ad)};
    mpq_class qb{mpz_class(bn), mpz_class(bd)};
    qa.canonicalize();
    qb.canonicalize();
    ASSERT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    ASSERT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    ASSERT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    if (bn != 0) ASSERT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    ASSERT_EQ(a < b, qa < qb);
    ASSERT_EQ(a == b, qa == qb);
  }
}

TEST(RationalTest, StreamsAsString) {
  std::ostringstream os;
  os << Rational(-5, 10);
  EXPECT_EQ(os.str(), "-1/2");
}

}  // namespace
}  // namespace sia
