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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cartdiff/partitions.hpp"

namespace {

using namespace cartdiff;

TEST(SetPartitions, CanonicalFormEnforced) {
    EXPECT_NO_THROW(set_partition({{1, 2}, {3}}));
    EXPECT_THROW(set_partition({{2, 1}}), validation_error);
    EXPECT_THROW(set_partition({{3}, {1, 2}}), validation_error);
    EXPECT_THROW(set_partition({{1}, {}}), validation_error);
}

TEST(SetPartitions, EnumerationOrderIsPinned) {
    auto p0 = enumerate_partitions(0);
    ASSERT_EQ(p0.size(), 1u);
    EXPECT_EQ(p0[0].str(), "{}");

    auto p3 = enumerate_partitions(3);
    std::vector<std::string> expect{"{{1,2,3}}", "{{1,2}, {3}}", "{{1,3}, {2}}",
                                    "{{1}, {2,3}}", "{{1}, {2}, {3}}"};
    ASSERT_EQ(p3.size(), expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(p3[i].str(), expect[i]);
}

TEST(SetPartitions, GroundSizeAndBlockCount) {
    set_partition p({{1, 3}, {2}});
    EXPECT_EQ(p.ground_size(), 3u);
    EXPECT_EQ(p.block_count(), 2u);
    EXPECT_EQ(set_partition{}.ground_size(), 0u);
}

TEST(SetPartitions, CapGuardsEnumeration) {
    EXPECT_THROW(enumerate_partitions(9), validation_error);
    EXPECT_EQ(enumerate_partitions(9, 9).size(), 21147u);
}

TEST(BellNumbers, TriangleValues) {
    EXPECT_EQ(bell(0), bigint(1));
    EXPECT_EQ(bell(5), bigint(52));
    EXPECT_EQ(bell(15), bigint("1382958545"));
    EXPECT_EQ(bell(25), bigint("4638590332229999353"));
}

TEST(BlockProjections, SelectBaseAndBlockFactors) {
    semiring r = semiring::integers();
    // Domain: base (arity 2) then 2 linear factors of arity 2, 6 variables.
    poly_map m = block_projection(r, 2, 2, {2});
    EXPECT_EQ(m.dom(), 6u);
    EXPECT_EQ(m.cod(), 4u);
    EXPECT_EQ(m.component(0), poly::variable(r, 6, 0));
    EXPECT_EQ(m.component(1), poly::variable(r, 6, 1));
    EXPECT_EQ(m.component(2), poly::variable(r, 6, 4));
    EXPECT_EQ(m.component(3), poly::variable(r, 6, 5));
}

TEST(BlockProjections, RejectBadBlocks) {
    semiring r = semiring::integers();
    EXPECT_THROW(block_projection(r, 1, 2, {0}), validation_error);
    EXPECT_THROW(block_projection(r, 1, 2, {3}), validation_error);
    EXPECT_THROW(block_projection(r, 1, 3, {2, 1}), validation_error);
}

} // namespace
