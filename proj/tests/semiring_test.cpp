/*
   Copyright 2026 the cartdiff authors

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

#include "cartdiff/semiring.hpp"

namespace {

using namespace cartdiff;

TEST(SemiringTags, RoundTrip) {
    for (const char *tag : {"nat", "int", "rat", "modp:2", "modp:97"}) {
        auto r = semiring::parse_tag(tag);
        ASSERT_TRUE(r.has_value()) << tag;
        EXPECT_EQ(r->tag(), tag);
    }
}

TEST(SemiringTags, RejectsUnknown) {
    for (const char *tag : {"", "real", "modp:", "modp:1", "modp:x", "mod:5", "INT"})
        EXPECT_FALSE(semiring::parse_tag(tag).has_value()) << tag;
}

TEST(SemiringTags, ModulusBelowTwoThrows) {
    EXPECT_THROW(semiring::mod(0), validation_error);
    EXPECT_THROW(semiring::mod(1), validation_error);
}

TEST(Values, IntegerArithmetic) {
    semiring r = semiring::integers();
    value a = value::from_integer(r, 7);
    value b = value::from_integer(r, -3);
    EXPECT_EQ(a + b, value::from_integer(r, 4));
    EXPECT_EQ(a * b, value::from_integer(r, -21));
    EXPECT_EQ(a.negated(), value::from_integer(r, -7));
    EXPECT_EQ(a + a.negated(), value::zero(r));
    EXPECT_TRUE(value::zero(r).is_zero());
    EXPECT_FALSE(a.is_zero());
}

TEST(Values, RationalsNormalize) {
    semiring r = semiring::rationals();
    EXPECT_EQ(value::from_rational(r, 2, 4), value::from_rational(r, 1, 2));
    EXPECT_EQ(value::from_rational(r, -1, 3) + value::from_rational(r, 1, 3),
              value::zero(r));
    EXPECT_EQ(value::from_rational(r, 1, 2) * value::from_rational(r, 2, 3),
              value::from_rational(r, 1, 3));
    EXPECT_EQ(value::from_rational(r, 1, 2).str(), "1/2");
    EXPECT_THROW(value::from_rational(r, 1, 0), validation_error);
}

TEST(Values, ModularReduction) {
    semiring r = semiring::mod(5);
    value a = value::from_integer(r, 3);
    value b = value::from_integer(r, 4);
    EXPECT_EQ(a + b, value::from_integer(r, 2));
    EXPECT_EQ(a * b, value::from_integer(r, 2));
    EXPECT_EQ(a.negated(), value::from_integer(r, 2));
    EXPECT_EQ(value::from_integer(r, -1), value::from_integer(r, 4));
    EXPECT_EQ(value::from_integer(r, 10), value::zero(r));
}

TEST(Values, CharacteristicTwo) {
    semiring r = semiring::mod(2);
    value one = value::one(r);
    EXPECT_EQ(one + one, value::zero(r));
    EXPECT_EQ(one.negated(), one);
}

TEST(Values, NaturalsHaveNoNegation) {
    semiring r = semiring::naturals();
    EXPECT_FALSE(r.has_negation());
    EXPECT_TRUE(semiring::integers().has_negation());
    EXPECT_TRUE(semiring::mod(3).has_negation());
    EXPECT_THROW(value::from_integer(r, -1), validation_error);
    EXPECT_THROW(value::one(r).negated(), validation_error);
}

TEST(Values, MixedInstancesAreHardErrors) {
    value a = value::one(semiring::integers());
    value b = value::one(semiring::mod(7));
    EXPECT_THROW(a + b, validation_error);
    EXPECT_THROW(a * b, validation_error);
}

TEST(Values, Finiteness) {
    EXPECT_TRUE(semiring::mod(2).is_finite());
    EXPECT_FALSE(semiring::integers().is_finite());
    EXPECT_FALSE(semiring::rationals().is_finite());
}

TEST(Values, IntegerStrings) {
    semiring r = semiring::integers();
    EXPECT_EQ(value::from_integer(r, 42).str(), "42");
    EXPECT_EQ(value::from_integer(r, -5).str(), "-5");
    EXPECT_EQ(value::zero(r).str(), "0");
}

} // namespace
