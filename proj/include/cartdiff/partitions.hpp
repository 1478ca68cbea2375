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

// Set partitions of {1, ..., n} in canonical form, their enumeration, Bell
// numbers, and the projection maps that select the factors a block names.
// Partition sums over these drive higher-order chain rules, so enumeration
// order and canonical form are pinned down here once.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "semiring.hpp"

namespace cartdiff {

// A partition of {1, ..., n}. Canonical form: every block lists its
// elements ascending, and blocks are ordered by least element. The empty
// partition (no blocks) is the unique partition of the empty set.
class set_partition {
public:
    set_partition() = default;

    explicit set_partition(std::vector<std::vector<unsigned>> blocks)
        : blocks_(std::move(blocks)) {
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (blocks_[b].empty())
                throw validation_error("partition block is empty");
            for (std::size_t i = 1; i < blocks_[b].size(); ++i)
                if (blocks_[b][i - 1] >= blocks_[b][i])
                    throw validation_error("partition block not ascending");
            if (b > 0 && blocks_[b - 1][0] >= blocks_[b][0])
                throw validation_error("partition blocks not ordered by least element");
        }
    }

    const std::vector<std::vector<unsigned>> &blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }

    unsigned ground_size() const noexcept {
        unsigned n = 0;
        for (const auto &b : blocks_)
            for (unsigned e : b) n = std::max(n, e);
        return n;
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (b) s += ", ";
            s += "{";
            for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
                if (i) s += ",";
                s += std::to_string(blocks_[b][i]);
            }
            s += "}";
        }
        s += "}";
        return s;
    }

    friend bool operator==(const set_partition &a, const set_partition &b) {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const set_partition &a, const set_partition &b) {
        return !(a == b);
    }

private:
    std::vector<std::vector<unsigned>> blocks_;
};

// All partitions of {1, ..., n} in canonical form, built by inserting each
// element into every block of every partition of the previous stage and
// then as a fresh singleton. Appending a new maximum keeps blocks ascending
// and the fresh singleton has the largest least element, so canonical form
// is preserved stage by stage and no duplicates arise. The guard keeps
// accidental huge enumerations from running away; raise cap deliberately.
inline std::vector<set_partition> enumerate_partitions(unsigned n, unsigned cap = 8) {
    if (n > cap)
        throw validation_error("partition enumeration size " + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
    std::vector<std::vector<std::vector<unsigned>>> acc{{}};
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<std::vector<std::vector<unsigned>>> next;
        next.reserve(acc.size() * (k + 1));
        for (const auto &p : acc) {
            for (std::size_t b = 0; b < p.size(); ++b) {
                auto q = p;
                q[b].push_back(k);
                next.push_back(std::move(q));
            }
            auto q = p;
            q.push_back({k});
            next.push_back(std::move(q));
        }
        acc = std::move(next);
    }
    std::vector<set_partition> out;
    out.reserve(acc.size());
    for (auto &p : acc) out.emplace_back(std::move(p));
    return out;
}

// Bell number B(n), computed through the Bell triangle:
// a(n, 0) = a(n-1, n-1), a(n, k) = a(n, k-1) + a(n-1, k-1), B(n) = a(n, 0).
inline bigint bell(unsigned n) {
    std::vector<bigint> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<bigint> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (std::size_t k = 0; k < row.size(); ++k)
            next.push_back(next.back() + row[k]);
        row = std::move(next);
    }
    return row.front();
}

// For a domain of 1 + slots equal factors of the given arity (one base
// factor, then linear factors 1..slots), the selection map
// <pi_0, pi_{i_1}, ..., pi_{i_r}> for a block {i_1 < ... < i_r} of linear
// factor indices (1-based).
inline poly_map block_projection(const semiring &r, unsigned factor_arity,
                                 unsigned slots, const std::vector<unsigned> &block) {
    std::vector<std::size_t> factors{0};
    unsigned prev = 0;
    for (unsigned e : block) {
        if (e < 1 || e > slots)
            throw validation_error("block element out of range");
        if (e <= prev)
            throw validation_error("partition block not ascending");
        prev = e;
        factors.push_back(e);
    }
    return select_factors(r, shape(1 + slots, factor_arity), factors);
}

} // namespace cartdiff
