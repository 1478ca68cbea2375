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

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "cartdiff/cartdiff.hpp"

namespace {

using namespace cartdiff;

const semiring kInt = semiring::integers();

poly_map from_text(const std::string &s) { return parse_poly_map(s, kInt); }

TEST(Distance, FirstDisagreementWins) {
    faa_seq f = lift(from_text("1 -> 1 : [x0^2]"), 4);
    faa_seq g = lift(from_text("1 -> 1 : [x0^2 + x0]"), 4);
    EXPECT_EQ(distance_seq(f, g), distance::exact(0));
    faa_seq h = faa_add(f, lift(from_text("1 -> 1 : [5]"), 4));
    EXPECT_EQ(distance_seq(f, h), distance::exact(0));
    // Same leading term, different derivative.
    faa_seq k = lift(from_text("1 -> 1 : [x0^2]"), 4);
    EXPECT_EQ(distance_seq(f, k), distance::agree_up_to(4));
}

TEST(Distance, DisagreementAtHigherOrder) {
    faa_seq f = lift(from_text("1 -> 1 : [x0^2]"), 4);
    poly_map bump = from_text("4 -> 1 : [x1*x2*x3]");
    faa_seq g = faa_add(f, homogeneous_embed(bump, 3, 4));
    EXPECT_EQ(distance_seq(f, g), distance::exact(3));
}

TEST(Distance, OrderingReflectsMagnitudes) {
    distance e0 = distance::exact(0);
    distance e2 = distance::exact(2);
    distance a3 = distance::agree_up_to(3);
    distance a5 = distance::agree_up_to(5);
    EXPECT_LT(e2, e0);
    EXPECT_LT(a3, e2);
    EXPECT_LT(a5, a3);
    EXPECT_LE(e2, e2);
    EXPECT_GT(e0, a5);
    EXPECT_NE(e2, a3);
}

TEST(Distance, Rendering) {
    EXPECT_EQ(distance::exact(3).str(), "2^-3");
    EXPECT_EQ(distance::agree_up_to(4).str(), "< 2^-4");
}

TEST(Distance, StrongTriangleConcrete) {
    faa_seq f = lift(from_text("1 -> 1 : [x0^2]"), 4);
    faa_seq g = faa_add(f, homogeneous_embed(from_text("3 -> 1 : [x1*x2]"), 2, 4));
    faa_seq h = faa_add(g, homogeneous_embed(from_text("4 -> 1 : [x1*x2*x3]"), 3, 4));
    distance fg = distance_seq(f, g);
    distance gh = distance_seq(g, h);
    distance fh = distance_seq(f, h);
    EXPECT_EQ(fg, distance::exact(2));
    EXPECT_EQ(gh, distance::exact(3));
    EXPECT_EQ(fh, distance::exact(2));
    EXPECT_LE(fh, std::max(fg, gh));
}

TEST(Distance, MismatchedShapesThrow) {
    faa_seq f = lift(from_text("1 -> 1 : [x0]"), 2);
    faa_seq g = lift(from_text("2 -> 1 : [x0]"), 2);
    EXPECT_THROW(distance_seq(f, g), validation_error);
}

TEST(Distance, ComparedOutToTheShorterOrder) {
    faa_seq f = lift(from_text("1 -> 1 : [x0^3]"), 4);
    faa_seq g = lift(from_text("1 -> 1 : [x0^3]"), 2);
    EXPECT_EQ(distance_seq(f, g), distance::agree_up_to(2));
}

TEST(Stabilization, PartialSumsStabilizeLayerByLayer) {
    faa_seq f = lift(from_text("1 -> 1 : [x0^3 + x0^2]"), 3);
    auto layers = decompose(f);
    std::vector<faa_seq> chain;
    faa_seq acc = layers[0];
    chain.push_back(acc);
    for (std::size_t i = 1; i < layers.size(); ++i) {
        acc = faa_add(acc, layers[i]);
        chain.push_back(acc);
    }
    auto profile = cauchy_stabilization(chain);
    ASSERT_EQ(profile.size(), 4u);
    for (unsigned m = 0; m <= 3; ++m) {
        std::size_t expected = f.term(m).is_zero() ? 0 : m;
        EXPECT_EQ(profile[m], expected) << "term " << m;
    }
}

TEST(Stabilization, RejectsEmptyAndMismatchedChains) {
    EXPECT_THROW(cauchy_stabilization(std::vector<faa_seq>{}), validation_error);
    faa_seq f = lift(from_text("1 -> 1 : [x0]"), 2);
    faa_seq g = lift(from_text("2 -> 1 : [x0]"), 2);
    EXPECT_THROW(cauchy_stabilization(std::vector<faa_seq>{f, g}), validation_error);
}

} // namespace
