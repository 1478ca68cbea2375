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

// Truncated derivative towers: sequences (f0, f1, ..., fN) where term n is
// a map X x X^n -> B that is multilinear and symmetric in the n trailing
// arguments. Composition runs the partition sum over set partitions of the
// linear slots, differentiation shuffles one tangent copy into the tower,
// and the whole construction is parameterized by the underlying map type
// through map_ops, so sequences of sequences work with the same code. That
// nesting is what the comonad-style and monad-style operators at the end of
// this header are exercised on.
//
// Truncation discipline: composition and the pointwise operations preserve
// the order, differentiation consumes one. The faa_* entry points insist on
// equal orders; the map_ops instance used internally truncates to the
// shorter operand instead, which is what makes towers of towers with
// naturally ragged orders composable.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "derivative.hpp"
#include "errors.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
#include "semiring.hpp"

namespace cartdiff {

// Operations a map type must provide to live inside a sequence. Objects at
// every level are plain arities, so dom/cod are unsigned everywhere. The
// context carries whatever a factory needs to build a map from nothing
// (the semiring for polynomial maps, plus a truncation order per sequence
// level).
template <class M>
struct map_ops;

// Degree-profile callback: per base-level monomial, the total degree inside
// each window of one domain copy, plus a human-readable location.
using degree_callback =
    std::function<void(const std::vector<unsigned> &, const std::string &)>;

template <>
struct map_ops<poly_map> {
    using map_type = poly_map;
    using context = semiring;

    static context ctx(const poly_map &f) { return f.ring(); }
    static unsigned dom(const poly_map &f) { return f.dom(); }
    static unsigned cod(const poly_map &f) { return f.cod(); }

    static poly_map compose(const poly_map &g, const poly_map &f) {
        return cartdiff::compose(g, f);
    }
    static poly_map add(const poly_map &f, const poly_map &g) {
        return cartdiff::add(f, g);
    }
    static poly_map scale(const value &c, const poly_map &f) {
        return cartdiff::scale(c, f);
    }
    static poly_map zero(const context &c, unsigned dom_arity, unsigned cod_arity) {
        return zero_map(c, dom_arity, cod_arity);
    }
    static poly_map identity(const context &c, unsigned n) {
        return cartdiff::identity(c, n);
    }
    static poly_map select(const context &c, const shape &s,
                           const std::vector<std::size_t> &factors) {
        return select_factors(c, s, factors);
    }
    static poly_map pair(const std::vector<poly_map> &maps) { return pairing(maps); }
    static poly_map diff(const poly_map &f) { return cartdiff::diff(f); }
    static poly_map truncate(const poly_map &f, unsigned) { return f; }
    static unsigned depth(const poly_map &) {
        return std::numeric_limits<unsigned>::max();
    }
    static bool equal(const poly_map &a, const poly_map &b) { return a == b; }
    static bool is_zero(const poly_map &f) { return f.is_zero(); }

    // Degrees are taken directly: one domain copy is the whole domain.
    static void fold_degrees(const poly_map &f, const std::vector<unsigned> &widths,
                             const degree_callback &cb) {
        if (std::accumulate(widths.begin(), widths.end(), 0u) != f.dom())
            throw validation_error("window widths do not cover the domain");
        for (unsigned j = 0; j < f.cod(); ++j) {
            for (const auto &[e, c] : f.component(j).terms()) {
                std::vector<unsigned> degs(widths.size(), 0);
                unsigned v = 0;
                for (std::size_t w = 0; w < widths.size(); ++w)
                    for (unsigned i = 0; i < widths[w]; ++i, ++v) degs[w] += e[v];
                cb(degs, "component " + std::to_string(j) + ", monomial " +
                             monomial_text(e, c));
            }
        }
    }

    // Applies a variable substitution given on one domain copy.
    static poly_map rename_residues(const poly_map &f,
                                    const std::vector<unsigned> &perm) {
        std::vector<poly> comps;
        comps.reserve(f.cod());
        for (const auto &p : f.components()) comps.push_back(p.renamed(perm));
        return poly_map{f.ring(), f.dom(), f.cod(), std::move(comps)};
    }
};

template <class M>
struct seq_context {
    typename map_ops<M>::context base;
    unsigned order;
};

// A derivative tower truncated at some order: terms 0..N, term n a map of
// the underlying type with domain arity dom * (1 + n) and codomain arity
// cod. The constructor checks those shapes; the semantic invariants
// (multilinearity and symmetry in the trailing arguments) are checked by
// validate_seq below, which construction by the operations here preserves.
template <class M>
class basic_faa_seq {
public:
    using ops = map_ops<M>;

    basic_faa_seq(unsigned dom, unsigned cod, std::vector<M> terms)
        : dom_(dom), cod_(cod), terms_(std::move(terms)) {
        if (terms_.empty())
            throw validation_error("sequence needs at least the order-zero term");
        for (std::size_t n = 0; n < terms_.size(); ++n) {
            if (ops::dom(terms_[n]) != dom_ * (1 + static_cast<unsigned>(n)))
                throw validation_error(
                    "term " + std::to_string(n) + " domain arity " +
                    std::to_string(ops::dom(terms_[n])) + " differs from " +
                    std::to_string(dom_ * (1 + static_cast<unsigned>(n))));
            if (ops::cod(terms_[n]) != cod_)
                throw validation_error("term " + std::to_string(n) +
                                       " codomain arity differs from " +
                                       std::to_string(cod_));
        }
    }

    unsigned dom() const noexcept { return dom_; }
    unsigned cod() const noexcept { return cod_; }
    unsigned order() const noexcept { return static_cast<unsigned>(terms_.size()) - 1; }
    const M &term(unsigned n) const { return terms_.at(n); }
    const std::vector<M> &terms() const noexcept { return terms_; }

    friend bool operator==(const basic_faa_seq &a, const basic_faa_seq &b) {
        if (a.dom_ != b.dom_ || a.cod_ != b.cod_ ||
            a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t n = 0; n < a.terms_.size(); ++n)
            if (!ops::equal(a.terms_[n], b.terms_[n])) return false;
        return true;
    }
    friend bool operator!=(const basic_faa_seq &a, const basic_faa_seq &b) {
        return !(a == b);
    }

private:
    unsigned dom_;
    unsigned cod_;
    std::vector<M> terms_;
};

using faa_seq = basic_faa_seq<poly_map>;

namespace detail {

// The tower image of a (possibly partial) selection map: term 0 selects the
// factors, term 1 selects the same factors out of the second domain copy,
// and everything above vanishes. This is the lift of a derivative-linear
// map and is how identities, projections and zero-padded injections enter
// a sequence level.
template <class M>
basic_faa_seq<M> select_lift(const typename map_ops<M>::context &c, const shape &s,
                             const std::vector<std::size_t> &factors,
                             unsigned order) {
    using ops = map_ops<M>;
    unsigned total = shape_total(s);
    std::vector<M> terms;
    terms.reserve(order + 1);
    terms.push_back(ops::select(c, s, factors));
    unsigned cod = ops::cod(terms.front());
    if (order >= 1) {
        shape doubled = s;
        doubled.insert(doubled.end(), s.begin(), s.end());
        std::vector<std::size_t> shifted;
        shifted.reserve(factors.size());
        for (std::size_t j : factors) shifted.push_back(j + s.size());
        terms.push_back(ops::select(c, doubled, shifted));
    }
    for (unsigned n = 2; n <= order; ++n)
        terms.push_back(ops::zero(c, total * (1 + n), cod));
    return basic_faa_seq<M>{total, cod, std::move(terms)};
}

} // namespace detail

template <class M = poly_map>
basic_faa_seq<M> faa_zero(const typename map_ops<M>::context &c, unsigned dom,
                          unsigned cod, unsigned order) {
    using ops = map_ops<M>;
    std::vector<M> terms;
    terms.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n)
        terms.push_back(ops::zero(c, dom * (1 + n), cod));
    return basic_faa_seq<M>{dom, cod, std::move(terms)};
}

// The tower of the identity: (1, second copy, 0, ...).
template <class M = poly_map>
basic_faa_seq<M> faa_identity(const typename map_ops<M>::context &c, unsigned n,
                              unsigned order) {
    return detail::select_lift<M>(c, shape{n}, {0}, order);
}

// The tower of the projection onto factor j of a product with shape s.
template <class M = poly_map>
basic_faa_seq<M> faa_projection(const typename map_ops<M>::context &c,
                                const shape &s, std::size_t j, unsigned order) {
    if (j >= s.size())
        throw validation_error("projection factor index out of range");
    return detail::select_lift<M>(c, s, {j}, order);
}

template <class M>
basic_faa_seq<M> truncate(const basic_faa_seq<M> &f, unsigned order) {
    if (order > f.order())
        throw validation_error("cannot truncate order " + std::to_string(f.order()) +
                               " sequence to larger order " + std::to_string(order));
    std::vector<M> terms(f.terms().begin(), f.terms().begin() + order + 1);
    return basic_faa_seq<M>{f.dom(), f.cod(), std::move(terms)};
}

template <class M>
basic_faa_seq<M> faa_add(const basic_faa_seq<M> &f, const basic_faa_seq<M> &g) {
    using ops = map_ops<M>;
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw validation_error("sequence addition requires equal shapes");
    if (f.order() != g.order())
        throw validation_error("sequence addition requires equal orders");
    std::vector<M> terms;
    terms.reserve(f.order() + 1);
    for (unsigned n = 0; n <= f.order(); ++n)
        terms.push_back(ops::add(f.term(n), g.term(n)));
    return basic_faa_seq<M>{f.dom(), f.cod(), std::move(terms)};
}

template <class M>
basic_faa_seq<M> faa_scale(const value &c, const basic_faa_seq<M> &f) {
    using ops = map_ops<M>;
    std::vector<M> terms;
    terms.reserve(f.order() + 1);
    for (unsigned n = 0; n <= f.order(); ++n) terms.push_back(ops::scale(c, f.term(n)));
    return basic_faa_seq<M>{f.dom(), f.cod(), std::move(terms)};
}

// Pointwise pairing: shared domain, concatenated codomains, term by term.
template <class M>
basic_faa_seq<M> faa_pair(const std::vector<basic_faa_seq<M>> &seqs) {
    using ops = map_ops<M>;
    if (seqs.empty())
        throw validation_error("pairing requires at least one sequence");
    unsigned dom = seqs.front().dom();
    unsigned order = seqs.front().order();
    unsigned cod = 0;
    for (const auto &s : seqs) {
        if (s.dom() != dom)
            throw validation_error("sequence pairing requires a shared domain");
        if (s.order() != order)
            throw validation_error("sequence pairing requires equal orders");
        cod += s.cod();
    }
    std::vector<M> terms;
    terms.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        std::vector<M> parts;
        parts.reserve(seqs.size());
        for (const auto &s : seqs) parts.push_back(s.term(n));
        terms.push_back(ops::pair(parts));
    }
    return basic_faa_seq<M>{dom, cod, std::move(terms)};
}

namespace detail {

// Composition by the partition sum: term n of g o f collects, over every
// set partition P of the n linear slots, the |P|-th term of g applied to
// the base image together with one f-term per block, with each block
// selecting its slots in ascending order. Term 0 degenerates to g0 o f0
// through the empty partition.
template <class M>
basic_faa_seq<M> compose_seq(const basic_faa_seq<M> &g, const basic_faa_seq<M> &f,
                             unsigned order) {
    using ops = map_ops<M>;
    if (f.cod() != g.dom())
        throw validation_error("sequence composition arity mismatch: inner codomain " +
                               std::to_string(f.cod()) + " vs outer domain " +
                               std::to_string(g.dom()));
    auto c = ops::ctx(f.term(0));
    unsigned a = f.dom();
    std::vector<M> terms;
    terms.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        shape s(1 + n, a);
        M acc = ops::zero(c, a * (1 + n), g.cod());
        for (const auto &p : enumerate_partitions(n, std::max(8u, n))) {
            std::vector<M> parts;
            parts.reserve(1 + p.block_count());
            parts.push_back(ops::compose(f.term(0), ops::select(c, s, {0})));
            for (const auto &block : p.blocks()) {
                std::vector<std::size_t> sel{0};
                for (unsigned e : block) sel.push_back(e);
                parts.push_back(ops::compose(f.term(static_cast<unsigned>(block.size())),
                                             ops::select(c, s, sel)));
            }
            acc = ops::add(acc, ops::compose(g.term(static_cast<unsigned>(p.block_count())),
                                             ops::pair(parts)));
        }
        terms.push_back(std::move(acc));
    }
    return basic_faa_seq<M>{a, g.cod(), std::move(terms)};
}

} // namespace detail

// Strict composition: operands must carry the same order, which the result
// keeps. Use truncate first when orders differ on purpose.
template <class M>
basic_faa_seq<M> faa_compose(const basic_faa_seq<M> &g, const basic_faa_seq<M> &f) {
    if (f.order() != g.order())
        throw validation_error("sequence composition requires equal orders, got " +
                               std::to_string(g.order()) + " and " +
                               std::to_string(f.order()));
    return detail::compose_seq(g, f, f.order());
}

// Derivative of a tower: the result maps out of the doubled object, so term
// n sees 1 + n physical blocks of doubled arity. Writing pi_i for the base
// part of block i and pi_{n+1+i} for its tangent part, term n is
//   f^{n+1} o <pi_0, pi_1, ..., pi_n, pi_{n+1}>
//   + sum_{j=1}^{n} f^n o <pi_0, ..., pi_{j-1}, pi_{n+1+j}, pi_{j+1}, ..., pi_n>,
// the fresh tangent entering once as a new linear slot and once through
// each existing slot. Consumes one order of truncation.
template <class M>
basic_faa_seq<M> faa_diff(const basic_faa_seq<M> &f) {
    using ops = map_ops<M>;
    if (f.order() < 1)
        throw validation_error("sequence derivative needs order at least 1");
    auto c = ops::ctx(f.term(0));
    unsigned a = f.dom();
    unsigned order = f.order() - 1;
    std::vector<M> terms;
    terms.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        // Physical factor 2i is the base part of block i, 2i+1 its tangent.
        shape s(2 * (1 + n), a);
        std::vector<std::size_t> main;
        main.reserve(n + 2);
        for (unsigned i = 0; i <= n; ++i) main.push_back(2 * i);
        main.push_back(1);
        M acc = ops::compose(f.term(n + 1), ops::select(c, s, main));
        for (unsigned j = 1; j <= n; ++j) {
            std::vector<std::size_t> sel;
            sel.reserve(n + 1);
            for (unsigned i = 0; i <= n; ++i) sel.push_back(i == j ? 2 * i + 1 : 2 * i);
            acc = ops::add(acc, ops::compose(f.term(n), ops::select(c, s, sel)));
        }
        terms.push_back(std::move(acc));
    }
    return basic_faa_seq<M>{2 * a, f.cod(), std::move(terms)};
}

// Sequences compose the same trait interface, so towers nest. Composition,
// addition and pairing truncate to the shortest operand here; the strict
// entry points above refuse mismatched orders instead.
template <class M>
struct map_ops<basic_faa_seq<M>> {
    using map_type = basic_faa_seq<M>;
    using inner = map_ops<M>;
    using context = seq_context<M>;

    static context ctx(const map_type &f) {
        return {inner::ctx(f.term(0)), f.order()};
    }
    static unsigned dom(const map_type &f) { return f.dom(); }
    static unsigned cod(const map_type &f) { return f.cod(); }

    static map_type compose(const map_type &g, const map_type &f) {
        return detail::compose_seq(g, f, std::min(g.order(), f.order()));
    }
    static map_type add(const map_type &f, const map_type &g) {
        unsigned n = std::min(f.order(), g.order());
        return faa_add(cartdiff::truncate(f, n), cartdiff::truncate(g, n));
    }
    static map_type scale(const value &c, const map_type &f) {
        return faa_scale(c, f);
    }
    static map_type zero(const context &c, unsigned dom_arity, unsigned cod_arity) {
        return faa_zero<M>(c.base, dom_arity, cod_arity, c.order);
    }
    static map_type identity(const context &c, unsigned n) {
        return faa_identity<M>(c.base, n, c.order);
    }
    static map_type select(const context &c, const shape &s,
                           const std::vector<std::size_t> &factors) {
        return detail::select_lift<M>(c.base, s, factors, c.order);
    }
    static map_type pair(const std::vector<map_type> &seqs) {
        unsigned n = seqs.empty() ? 0u : seqs.front().order();
        for (const auto &s : seqs) n = std::min(n, s.order());
        std::vector<map_type> cut;
        cut.reserve(seqs.size());
        for (const auto &s : seqs) cut.push_back(cartdiff::truncate(s, n));
        return faa_pair(cut);
    }
    static map_type diff(const map_type &f) { return faa_diff(f); }
    static map_type truncate(const map_type &f, unsigned order) {
        return cartdiff::truncate(f, std::min(order, f.order()));
    }
    static unsigned depth(const map_type &f) { return f.order(); }
    static bool equal(const map_type &a, const map_type &b) { return a == b; }
    static bool is_zero(const map_type &f) {
        return std::all_of(f.terms().begin(), f.terms().end(),
                           [](const M &t) { return inner::is_zero(t); });
    }

    // Every term folds its domain copies back onto one copy of this level's
    // domain, so window degrees accumulate across copies and levels.
    static void fold_degrees(const map_type &f, const std::vector<unsigned> &widths,
                             const degree_callback &cb) {
        if (std::accumulate(widths.begin(), widths.end(), 0u) != f.dom())
            throw validation_error("window widths do not cover the domain");
        std::size_t w = widths.size();
        for (unsigned n = 0; n <= f.order(); ++n) {
            std::vector<unsigned> rep;
            rep.reserve(w * (1 + n));
            for (unsigned copy = 0; copy <= n; ++copy)
                rep.insert(rep.end(), widths.begin(), widths.end());
            inner::fold_degrees(
                f.term(n), rep,
                [&](const std::vector<unsigned> &degs, const std::string &where) {
                    std::vector<unsigned> out(w, 0);
                    for (std::size_t i = 0; i < degs.size(); ++i)
                        out[i % w] += degs[i];
                    cb(out, "term " + std::to_string(n) + ", " + where);
                });
        }
    }

    // A substitution on one copy of this level's domain applies to every
    // copy in every term, at every level below.
    static map_type rename_residues(const map_type &f,
                                    const std::vector<unsigned> &perm) {
        if (perm.size() != f.dom())
            throw validation_error("renaming length differs from domain arity");
        unsigned d = f.dom();
        std::vector<M> terms;
        terms.reserve(f.order() + 1);
        for (unsigned n = 0; n <= f.order(); ++n) {
            std::vector<unsigned> full(static_cast<std::size_t>(d) * (1 + n));
            for (unsigned copy = 0; copy <= n; ++copy)
                for (unsigned v = 0; v < d; ++v)
                    full[static_cast<std::size_t>(copy) * d + v] = copy * d + perm[v];
            terms.push_back(inner::rename_residues(f.term(n), full));
        }
        return map_type{f.dom(), f.cod(), std::move(terms)};
    }
};

// Partial derivative in factor j of a product domain, at any tower level:
// compose the derivative with the injection that keeps the base copy and
// feeds the appended fresh factor into tangent slot j, zero elsewhere. At
// sequence level the injection enters as a lifted selection, and the
// partition sum collapses around it because lifts vanish above order one.
template <class M>
M partial_in_slot(const M &f, const shape &s, std::size_t j) {
    using ops = map_ops<M>;
    if (shape_total(s) != ops::dom(f))
        throw validation_error("shape total differs from domain arity");
    if (j >= s.size())
        throw validation_error("partial derivative factor index out of range");
    M df = ops::diff(f);
    auto c = ops::ctx(df);
    unsigned total = shape_total(s);
    shape in = s;
    in.push_back(s[j]);
    std::vector<std::size_t> keep(s.size());
    std::iota(keep.begin(), keep.end(), std::size_t{0});
    std::vector<M> parts{ops::select(c, in, keep)};
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == j)
            parts.push_back(ops::select(c, in, {s.size()}));
        else
            parts.push_back(ops::zero(c, total + s[j], s[i]));
    }
    return ops::compose(df, ops::pair(parts));
}

// Iterated partial derivative in the base factor, at any tower level. Each
// stage appends a fresh linear factor of the base arity at the end.
template <class M>
M partial_n(const M &f, unsigned n) {
    using ops = map_ops<M>;
    M r = f;
    unsigned a = ops::dom(f);
    for (unsigned k = 0; k < n; ++k)
        r = cartdiff::partial_in_slot<M>(r, shape(1 + k, a), 0);
    return r;
}

// Inclusion of a map into the tower construction: term n is its n-th
// iterated partial derivative. At sequence level each stage consumes one
// inner order, so the source must carry at least the requested order.
template <class M>
basic_faa_seq<M> lift(const M &f, unsigned order) {
    using ops = map_ops<M>;
    unsigned a = ops::dom(f);
    std::vector<M> terms;
    terms.reserve(order + 1);
    terms.push_back(f);
    M cur = f;
    for (unsigned k = 0; k < order; ++k) {
        cur = cartdiff::partial_in_slot<M>(cur, shape(1 + k, a), 0);
        terms.push_back(cur);
    }
    return basic_faa_seq<M>{a, ops::cod(f), std::move(terms)};
}

// Evaluation at order zero; on towers this is the functor collapsing a
// sequence to its leading term.
template <class M>
M functor_E(const basic_faa_seq<M> &f) {
    return f.term(0);
}

// The tower (1, 0, 0, ...): the unit among differential constants, an
// idempotent whose pre-composition projects any parallel tower onto its
// leading term.
template <class M = poly_map>
basic_faa_seq<M> constant_unit(const typename map_ops<M>::context &c, unsigned n,
                               unsigned order) {
    using ops = map_ops<M>;
    std::vector<M> terms;
    terms.reserve(order + 1);
    terms.push_back(ops::identity(c, n));
    for (unsigned k = 1; k <= order; ++k)
        terms.push_back(ops::zero(c, n * (1 + k), n));
    return basic_faa_seq<M>{n, n, std::move(terms)};
}

// A tower is a differential constant exactly when everything above the
// leading term vanishes; its derivative is then zero at every truncation.
template <class M>
bool is_d_constant_seq(const basic_faa_seq<M> &f) {
    using ops = map_ops<M>;
    for (unsigned n = 1; n <= f.order(); ++n)
        if (!ops::is_zero(f.term(n))) return false;
    return true;
}

namespace detail {

template <class M>
void check_term_shape(const M &h, unsigned base, unsigned n, unsigned cod) {
    using ops = map_ops<M>;
    if (ops::dom(h) != base * (1 + n))
        throw validation_error("term domain arity " + std::to_string(ops::dom(h)) +
                               " is not " + std::to_string(base) + " * (1 + " +
                               std::to_string(n) + ")");
    if (ops::cod(h) != cod)
        throw validation_error("term codomain arity differs");
}

// Multilinearity of one term: in every base-level monomial each linear
// window carries total degree exactly one. Returns the first offense.
template <class M>
std::optional<std::string> multilinearity_violation(const M &t, unsigned base,
                                                    unsigned n) {
    using ops = map_ops<M>;
    std::optional<std::string> bad;
    ops::fold_degrees(t, std::vector<unsigned>(1 + n, base),
                      [&](const std::vector<unsigned> &degs, const std::string &where) {
                          if (bad) return;
                          for (unsigned j = 1; j <= n; ++j) {
                              if (degs[j] != 1) {
                                  bad = "linear argument " + std::to_string(j) +
                                        " has degree " + std::to_string(degs[j]) +
                                        " in " + where;
                                  return;
                              }
                          }
                      });
    return bad;
}

inline std::vector<unsigned> block_permutation(unsigned base, unsigned n,
                                               const std::vector<unsigned> &sigma) {
    std::vector<unsigned> perm(static_cast<std::size_t>(base) * (1 + n));
    for (unsigned v = 0; v < base; ++v) perm[v] = v;
    for (unsigned b = 1; b <= n; ++b)
        for (unsigned v = 0; v < base; ++v)
            perm[static_cast<std::size_t>(b) * base + v] = sigma[b - 1] * base + v;
    return perm;
}

// Symmetry of one term under permuting its linear arguments. Small counts
// are checked against the whole symmetric group, larger ones against the
// adjacent transpositions, which generate it.
template <class M>
std::optional<std::string> symmetry_violation(const M &t, unsigned base, unsigned n) {
    using ops = map_ops<M>;
    auto invariant_under = [&](const std::vector<unsigned> &sigma) {
        return ops::equal(ops::rename_residues(t, block_permutation(base, n, sigma)), t);
    };
    if (n <= 4) {
        std::vector<unsigned> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 1u);
        while (std::next_permutation(sigma.begin(), sigma.end())) {
            if (!invariant_under(sigma)) {
                std::string s;
                for (unsigned b : sigma) s += (s.empty() ? "" : ",") + std::to_string(b);
                return "not symmetric under linear argument permutation (" + s + ")";
            }
        }
        return std::nullopt;
    }
    for (unsigned j = 1; j < n; ++j) {
        std::vector<unsigned> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 1u);
        std::swap(sigma[j - 1], sigma[j]);
        if (!invariant_under(sigma))
            return "not symmetric under swap of linear arguments " +
                   std::to_string(j) + " and " + std::to_string(j + 1);
    }
    return std::nullopt;
}

} // namespace detail

// First violated sequence invariant, if any: term shapes are enforced at
// construction, so this checks multilinearity and symmetry term by term and
// names the offending monomial or permutation.
template <class M>
std::optional<std::string> seq_violation(const basic_faa_seq<M> &f) {
    for (unsigned n = 1; n <= f.order(); ++n) {
        if (auto bad = detail::multilinearity_violation(f.term(n), f.dom(), n))
            return "term " + std::to_string(n) + " is not multilinear: " + *bad;
        if (auto bad = detail::symmetry_violation(f.term(n), f.dom(), n))
            return "term " + std::to_string(n) + " is " + *bad;
    }
    return std::nullopt;
}

template <class M>
void validate_seq(const basic_faa_seq<M> &f) {
    if (auto bad = seq_violation(f)) throw validation_error(*bad);
}

// The tower concentrated in a single degree: term n is the given
// multilinear symmetric map, all other terms vanish.
template <class M>
basic_faa_seq<M> homogeneous_embed(const M &h, unsigned n, unsigned order) {
    using ops = map_ops<M>;
    if (n > order)
        throw validation_error("homogeneous degree exceeds the order");
    if (n > 0 && ops::dom(h) % (1 + n) != 0)
        throw validation_error("term domain arity is not divisible by 1 + degree");
    unsigned base = ops::dom(h) / (1 + n);
    detail::check_term_shape(h, base, n, ops::cod(h));
    if (auto bad = detail::multilinearity_violation(h, base, n))
        throw validation_error("embedded term is not multilinear: " + *bad);
    if (auto bad = detail::symmetry_violation(h, base, n))
        throw validation_error("embedded term is " + *bad);
    auto c = ops::ctx(h);
    std::vector<M> terms;
    terms.reserve(order + 1);
    for (unsigned k = 0; k <= order; ++k) {
        if (k == n)
            terms.push_back(h);
        else
            terms.push_back(ops::zero(c, base * (1 + k), ops::cod(h)));
    }
    return basic_faa_seq<M>{base, ops::cod(h), std::move(terms)};
}

// Splits a tower into its homogeneous layers; adding them back recovers it.
template <class M>
std::vector<basic_faa_seq<M>> decompose(const basic_faa_seq<M> &f) {
    using ops = map_ops<M>;
    auto c = ops::ctx(f.term(0));
    std::vector<basic_faa_seq<M>> out;
    out.reserve(f.order() + 1);
    for (unsigned n = 0; n <= f.order(); ++n) {
        std::vector<M> terms;
        terms.reserve(f.order() + 1);
        for (unsigned k = 0; k <= f.order(); ++k) {
            if (k == n)
                terms.push_back(f.term(n));
            else
                terms.push_back(ops::zero(c, f.dom() * (1 + k), f.cod()));
        }
        out.push_back(basic_faa_seq<M>{f.dom(), f.cod(), std::move(terms)});
    }
    return out;
}

// Collapse of a tower of towers: term n of the result is the leading term
// of term n. This is the multiplication of the tower monad, equivalently
// the functor image of order-zero evaluation.
template <class M>
basic_faa_seq<M> monad_mult(const basic_faa_seq<basic_faa_seq<M>> &t) {
    std::vector<M> terms;
    terms.reserve(t.order() + 1);
    for (unsigned n = 0; n <= t.order(); ++n) terms.push_back(t.term(n).term(0));
    return basic_faa_seq<M>{t.dom(), t.cod(), std::move(terms)};
}

// Functor action on towers: applies a term transformer that preserves
// object arities, such as order-zero evaluation or the monad collapse.
template <class M, class Fn>
auto apply_termwise(const basic_faa_seq<M> &t, Fn &&fn)
    -> basic_faa_seq<decltype(fn(t.term(0)))> {
    using out_t = decltype(fn(t.term(0)));
    std::vector<out_t> terms;
    terms.reserve(t.order() + 1);
    for (unsigned n = 0; n <= t.order(); ++n) terms.push_back(fn(t.term(n)));
    return basic_faa_seq<out_t>{t.dom(), t.cod(), std::move(terms)};
}

} // namespace cartdiff
