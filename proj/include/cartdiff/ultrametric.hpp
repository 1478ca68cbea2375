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

// The ultrametric on parallel towers: distance 2^-n where n is the first
// term index at which two sequences disagree. Truncated data can certify a
// disagreement exactly, but never equality of the untruncated towers, so a
// distance is either Exact(n), first disagreement at term n, or
// AgreeUpTo(N), no disagreement among the compared terms 0..N. There is
// deliberately no "zero" outcome.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "faa.hpp"

namespace cartdiff {

class distance {
public:
    static distance exact(unsigned index) { return distance{true, index}; }
    static distance agree_up_to(unsigned index) { return distance{false, index}; }

    bool is_exact() const noexcept { return exact_; }
    unsigned index() const noexcept { return index_; }

    // Orders by the distances denoted: Exact(n) stands for 2^-n, and any
    // AgreeUpTo is below every Exact since the first disagreement, if one
    // exists at all, lies beyond the compared range. Deeper agreement
    // compares smaller.
    friend bool operator<(const distance &a, const distance &b) {
        if (a.exact_ != b.exact_) return !a.exact_;
        return a.index_ > b.index_;
    }
    friend bool operator>(const distance &a, const distance &b) { return b < a; }
    friend bool operator<=(const distance &a, const distance &b) { return !(b < a); }
    friend bool operator>=(const distance &a, const distance &b) { return !(a < b); }
    friend bool operator==(const distance &a, const distance &b) {
        return a.exact_ == b.exact_ && a.index_ == b.index_;
    }
    friend bool operator!=(const distance &a, const distance &b) { return !(a == b); }

    std::string str() const {
        if (exact_) return "2^-" + std::to_string(index_);
        return "< 2^-" + std::to_string(index_);
    }

private:
    distance(bool exact, unsigned index) : exact_(exact), index_(index) {}

    bool exact_;
    unsigned index_;
};

// Distance between parallel towers, compared out to the shorter order.
template <class M>
distance distance_seq(const basic_faa_seq<M> &f, const basic_faa_seq<M> &g) {
    using ops = map_ops<M>;
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw validation_error("distance requires parallel sequences");
    unsigned n = std::min(f.order(), g.order());
    for (unsigned k = 0; k <= n; ++k)
        if (!ops::equal(f.term(k), g.term(k))) return distance::exact(k);
    return distance::agree_up_to(n);
}

// Stabilization profile of a chain: entry m is the first chain position
// from which term m never changes again. A chain whose later entries keep
// every already-stabilized term fixed is exactly a Cauchy sequence in the
// ultrametric, one term index at a time.
template <class M>
std::vector<std::size_t> cauchy_stabilization(const std::vector<basic_faa_seq<M>> &chain) {
    using ops = map_ops<M>;
    if (chain.empty())
        throw validation_error("stabilization needs a non-empty chain");
    unsigned order = chain.front().order();
    for (const auto &s : chain) {
        if (s.dom() != chain.front().dom() || s.cod() != chain.front().cod())
            throw validation_error("stabilization requires parallel sequences");
        order = std::min(order, s.order());
    }
    std::vector<std::size_t> out;
    out.reserve(order + 1);
    for (unsigned m = 0; m <= order; ++m) {
        std::size_t stable = chain.size() - 1;
        while (stable > 0 &&
               ops::equal(chain[stable - 1].term(m), chain.back().term(m)))
            --stable;
        out.push_back(stable);
    }
    return out;
}

} // namespace cartdiff
