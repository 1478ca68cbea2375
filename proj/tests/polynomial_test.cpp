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

poly_map from_text(const std::string &s) {
    return parse_poly_map(s, semiring::integers());
}

TEST(Poly, AccumulateCancels) {
    semiring r = semiring::integers();
    poly x = poly::variable(r, 1, 0);
    poly p = x + x.scaled(value::from_integer(r, -1));
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.degree(), 0u);
}

TEST(Poly, ProductAndDegree) {
    semiring r = semiring::integers();
    poly x = poly::variable(r, 2, 0);
    poly y = poly::variable(r, 2, 1);
    poly p = (x + y) * (x + y);
    EXPECT_EQ(p.degree(), 2u);
    EXPECT_EQ(p, x * x + x * y.scaled(value::from_integer(r, 2)) + y * y);
}

TEST(Poly, PartialDerivative) {
    poly_map f = from_text("2 -> 1 : [x0^3*x1 + 5*x1^2]");
    poly p = f.component(0);
    poly expect_d0 = from_text("2 -> 1 : [3*x0^2*x1]").component(0);
    poly expect_d1 = from_text("2 -> 1 : [x0^3 + 10*x1]").component(0);
    EXPECT_EQ(p.partial(0), expect_d0);
    EXPECT_EQ(p.partial(1), expect_d1);
}

TEST(Poly, RenameRoundTrip) {
    poly p = from_text("3 -> 1 : [x0^2*x1 + x2]").component(0);
    poly q = p.renamed({2, 0, 1});
    EXPECT_EQ(q, from_text("3 -> 1 : [x2^2*x0 + x1]").component(0));
    EXPECT_EQ(q.renamed({1, 2, 0}), p);
}

TEST(PolyMap, IdentityLaws) {
    poly_map f = from_text("2 -> 3 : [x0 + x1, x0*x1, 4]");
    EXPECT_EQ(compose(f, identity(f.ring(), 2)), f);
    EXPECT_EQ(compose(identity(f.ring(), 3), f), f);
}

TEST(PolyMap, ComposeAssociates) {
    poly_map f = from_text("1 -> 2 : [x0, x0^2]");
    poly_map g = from_text("2 -> 2 : [x0 + x1, x0*x1]");
    poly_map h = from_text("2 -> 1 : [x0^2 + 3*x1]");
    EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
}

TEST(PolyMap, SubstitutionIsComposition) {
    poly_map f = from_text("2 -> 1 : [x0 + x1]");
    poly_map sq = from_text("1 -> 1 : [x0^2]");
    EXPECT_EQ(compose(sq, f), from_text("2 -> 1 : [x0^2 + 2*x0*x1 + x1^2]"));
}

TEST(PolyMap, ProjectionsSplitPairing) {
    semiring r = semiring::integers();
    poly_map f = from_text("2 -> 1 : [x0*x1]");
    poly_map g = from_text("2 -> 2 : [x0, x0 + x1]");
    poly_map p = pairing({f, g});
    EXPECT_EQ(p.cod(), 3u);
    shape s{1, 2};
    EXPECT_EQ(compose(projection(r, s, 0), p), f);
    EXPECT_EQ(compose(projection(r, s, 1), p), g);
}

TEST(PolyMap, SelectFactorsReorders) {
    semiring r = semiring::integers();
    shape s{1, 2};
    poly_map swap = select_factors(r, s, {1, 0});
    poly_map v = from_text("1 -> 3 : [x0, 2*x0, 3*x0]");
    EXPECT_EQ(compose(swap, v), from_text("1 -> 3 : [2*x0, 3*x0, x0]"));
}

TEST(PolyMap, ProductMapActsComponentwise) {
    poly_map f = from_text("1 -> 1 : [x0^2]");
    poly_map g = from_text("2 -> 1 : [x0 + x1]");
    poly_map prod = product_map(f, g);
    EXPECT_EQ(prod, from_text("3 -> 2 : [x0^2, x1 + x2]"));
}

TEST(PolyMap, AdditionAndScaling) {
    semiring r = semiring::integers();
    poly_map f = from_text("1 -> 1 : [x0^2 + x0]");
    poly_map g = from_text("1 -> 1 : [x0^2 - x0]");
    EXPECT_EQ(add(f, g), from_text("1 -> 1 : [2*x0^2]"));
    EXPECT_EQ(scale(value::from_integer(r, -1), add(f, g)),
              from_text("1 -> 1 : [-2*x0^2]"));
}

TEST(PolyMap, DiffIsTangentLinear) {
    poly_map f = from_text("2 -> 1 : [x0^2*x1 + 3*x0]");
    EXPECT_EQ(diff(f), from_text("4 -> 1 : [2*x0*x1*x2 + x0^2*x3 + 3*x2]"));
}

TEST(PolyMap, LinearityPredicates) {
    EXPECT_TRUE(is_d_linear(from_text("2 -> 2 : [x0 + 2*x1, x1]")));
    EXPECT_FALSE(is_d_linear(from_text("1 -> 1 : [x0 + 1]")));
    EXPECT_FALSE(is_d_linear(from_text("1 -> 1 : [x0^2]")));
    EXPECT_TRUE(is_d_constant(from_text("1 -> 1 : [7]")));
    EXPECT_FALSE(is_d_constant(from_text("1 -> 1 : [x0]")));
}

TEST(PolyMap, FrobeniusIsAdditiveInCharacteristicTwo) {
    semiring r2 = semiring::mod(2);
    poly_map sq = parse_poly_map("1 -> 1 : [x0^2]", r2);
    EXPECT_TRUE(is_k_linear(sq));
    EXPECT_FALSE(is_d_linear(sq));
    EXPECT_TRUE(is_d_constant(sq));
}

TEST(PolyMap, ShapeMismatchesThrow) {
    semiring r = semiring::integers();
    poly x = poly::variable(r, 2, 0);
    EXPECT_THROW((poly_map{r, 1, 1, {x}}), validation_error);
    poly_map f = from_text("2 -> 1 : [x0]");
    poly_map g = from_text("1 -> 1 : [x0]");
    EXPECT_THROW(compose(f, g), validation_error);
    EXPECT_THROW(add(f, g), validation_error);
}

TEST(PolyMap, MixedRingsThrow) {
    poly_map f = from_text("1 -> 1 : [x0]");
    poly_map g = parse_poly_map("1 -> 1 : [x0]", semiring::mod(3));
    EXPECT_THROW(compose(g, f), validation_error);
}

} // namespace
