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

#include "cartdiff/cartdiff.hpp"

namespace {

using namespace cartdiff;

const semiring kInt = semiring::integers();

poly_map from_text(const std::string &s) { return parse_poly_map(s, kInt); }

TEST(Pairs, ConstructionChecksLinearity) {
    poly_map any = from_text("1 -> 1 : [x0^2 + 3]");
    poly_map lin = from_text("1 -> 1 : [2*x0]");
    poly_map affine = from_text("1 -> 1 : [x0 + 1]");
    EXPECT_NO_THROW(delta_map(any, lin));
    EXPECT_THROW(delta_map(any, any), validation_error);
    EXPECT_THROW(delta_map(any, affine), validation_error);
    EXPECT_THROW(delta_map(any, from_text("2 -> 1 : [x0]")), validation_error);
}

TEST(Pairs, RelaxedModeAcceptsAdditiveMaps) {
    // Squaring is additive in characteristic 2 but not derivative-linear.
    semiring r2 = semiring::mod(2);
    poly_map sq = parse_poly_map("1 -> 1 : [x0^2]", r2);
    poly_map one = parse_poly_map("1 -> 1 : [x0]", r2);
    EXPECT_THROW(delta_map(one, sq), validation_error);
    EXPECT_NO_THROW(delta_map(one, sq, delta_linearity::k_linear));
}

TEST(Pairs, ComposeAndAddComponentwise) {
    delta_map f{from_text("1 -> 1 : [x0^2]"), from_text("1 -> 1 : [2*x0]")};
    delta_map g{from_text("1 -> 1 : [x0 + 1]"), from_text("1 -> 1 : [3*x0]")};
    delta_map gf = delta_compose(g, f);
    EXPECT_EQ(gf.first(), from_text("1 -> 1 : [x0^2 + 1]"));
    EXPECT_EQ(gf.second(), from_text("1 -> 1 : [6*x0]"));
    delta_map s = delta_add(f, g);
    EXPECT_EQ(s.first(), from_text("1 -> 1 : [x0^2 + x0 + 1]"));
    EXPECT_EQ(s.second(), from_text("1 -> 1 : [5*x0]"));
}

TEST(Pairs, DerivativeForgetsTheFirstComponent) {
    delta_map f{from_text("1 -> 1 : [x0^3 + 7]"), from_text("1 -> 1 : [4*x0]")};
    delta_map d = delta_diff(f);
    EXPECT_EQ(d.first(), from_text("2 -> 1 : [4*x1]"));
    EXPECT_EQ(d.second(), from_text("2 -> 1 : [4*x1]"));
    // Two pairs differing only in the first component have equal derivatives.
    delta_map g{from_text("1 -> 1 : [x0^2]"), from_text("1 -> 1 : [4*x0]")};
    EXPECT_EQ(delta_diff(g), d);
}

TEST(Pairs, ConstantsHaveZeroSecondComponent) {
    delta_map c{from_text("1 -> 1 : [x0^5]"), from_text("1 -> 1 : [0]")};
    EXPECT_TRUE(is_d_constant_delta(c));
    EXPECT_TRUE(delta_diff(c).first().is_zero());
    delta_map f{from_text("1 -> 1 : [0]"), from_text("1 -> 1 : [x0]")};
    EXPECT_FALSE(is_d_constant_delta(f));
}

TEST(Pairs, LinearityModeJoins) {
    semiring r2 = semiring::mod(2);
    poly_map id1 = identity(r2, 1);
    poly_map sq = parse_poly_map("1 -> 1 : [x0^2]", r2);
    delta_map strict{id1, id1};
    delta_map relaxed{id1, sq, delta_linearity::k_linear};
    EXPECT_EQ(delta_compose(strict, relaxed).mode(), delta_linearity::k_linear);
    EXPECT_EQ(delta_compose(strict, strict).mode(), delta_linearity::d_linear);
    EXPECT_EQ(delta_add(relaxed, strict).mode(), delta_linearity::k_linear);
}

TEST(Pairs, CategoryStructure) {
    delta_map f{from_text("2 -> 1 : [x0*x1]"), from_text("2 -> 1 : [x0 + x1]")};
    EXPECT_EQ(delta_compose(delta_identity(kInt, 1), f), f);
    EXPECT_EQ(delta_compose(f, delta_identity(kInt, 2)), f);
    delta_map p = delta_pairing({f, f});
    EXPECT_EQ(p.cod(), 2u);
    EXPECT_EQ(delta_compose(delta_projection(kInt, {1, 1}, 0), p), f);
    EXPECT_EQ(delta_scale(value::from_integer(kInt, 2), f).second(),
              from_text("2 -> 1 : [2*x0 + 2*x1]"));
    EXPECT_TRUE(is_d_constant_delta(delta_zero(kInt, 2, 3)));
    EXPECT_EQ(delta_lift(from_text("1 -> 1 : [x0]")).first(), identity(kInt, 1));
}

} // namespace
