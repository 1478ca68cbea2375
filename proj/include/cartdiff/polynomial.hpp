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

// Exact sparse multivariate polynomials over a commutative semiring, and
// polynomial maps n -> m (m-tuples of polynomials in n variables). The maps
// form a category with finite products: objects are arities, composition is
// substitution. The total-derivative operator doubles the domain arity and
// is the single differentiation primitive everything else builds on.
//
// Canonical form is maintained by construction: no stored coefficient is
// zero and monomials are kept in lexicographic order, so equality is
// structural equality. All values are immutable after construction and all
// operations are pure.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "semiring.hpp"

namespace cartdiff {

// Exponent vector of a monomial; index = variable, entry = exponent.
// Invariant: length equals the arity of the enclosing polynomial.
using exponents = std::vector<unsigned>;

inline unsigned total_degree(const exponents &e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

// A monomial paired with its coefficient, as exposed in serialized forms.
struct monomial {
    exponents exps;
    value coef;

    unsigned degree() const { return total_degree(exps); }
};

// Renders one monomial as "3*x0^2*x1"; a constant monomial is just its
// coefficient and a unit coefficient is suppressed next to variables.
inline std::string monomial_text(const exponents &e, const value &c) {
    std::string s;
    if (!c.is_one() || total_degree(e) == 0) s = c.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

class poly {
public:
    poly(semiring ring, unsigned arity) : ring_(std::move(ring)), arity_(arity) {}

    static poly constant(const semiring &r, unsigned arity, const value &c) {
        poly p{r, arity};
        p.accumulate(exponents(arity, 0), c);
        return p;
    }

    static poly variable(const semiring &r, unsigned arity, unsigned i) {
        if (i >= arity)
            throw validation_error("variable index out of range");
        poly p{r, arity};
        exponents e(arity, 0);
        e[i] = 1;
        p.accumulate(e, one(r));
        return p;
    }

    const semiring &ring() const noexcept { return ring_; }
    unsigned arity() const noexcept { return arity_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Terms in lexicographic monomial order; coefficients all nonzero.
    const std::map<exponents, value> &terms() const noexcept { return terms_; }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto &[e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    // Adds c * x^e, dropping the term if the result cancels to zero.
    void accumulate(const exponents &e, const value &c) {
        if (e.size() != arity_)
            throw validation_error("monomial length differs from arity");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend poly operator+(const poly &a, const poly &b) {
        require_compatible(a, b);
        poly r = a;
        for (const auto &[e, c] : b.terms_) r.accumulate(e, c);
        return r;
    }

    friend poly operator*(const poly &a, const poly &b) {
        require_compatible(a, b);
        poly r{a.ring_, a.arity_};
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                exponents e(a.arity_);
                for (unsigned i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                r.accumulate(e, ca * cb);
            }
        }
        return r;
    }

    poly scaled(const value &c) const {
        poly r{ring_, arity_};
        for (const auto &[e, k] : terms_) r.accumulate(e, c * k);
        return r;
    }

    // Formal partial derivative with respect to variable i. The exponent
    // drops into the coefficient through the canonical image of the
    // naturals, so characteristic effects (for example mod 2) fall out.
    poly partial(unsigned i) const {
        if (i >= arity_)
            throw validation_error("variable index out of range");
        poly r{ring_, arity_};
        for (const auto &[e, c] : terms_) {
            if (e[i] == 0) continue;
            exponents d = e;
            d[i] -= 1;
            r.accumulate(d, c * value::from_integer(ring_, static_cast<long long>(e[i])));
        }
        return r;
    }

    // Reinterprets the polynomial in a wider variable context, placing the
    // original variables at [offset, offset + arity).
    poly embedded(unsigned new_arity, unsigned offset) const {
        if (offset + arity_ > new_arity)
            throw validation_error("embedding window exceeds target arity");
        poly r{ring_, new_arity};
        for (const auto &[e, c] : terms_) {
            exponents w(new_arity, 0);
            std::copy(e.begin(), e.end(), w.begin() + offset);
            r.accumulate(w, c);
        }
        return r;
    }

    // Substitutes args[i] for variable i. All arguments share one arity,
    // which becomes the arity of the result.
    poly substituted(std::span<const poly> args) const {
        if (args.size() != arity_)
            throw validation_error("substitution argument count differs from arity");
        unsigned target = arity_ == 0 ? 0 : args[0].arity();
        for (const auto &a : args) {
            if (a.ring() != ring_)
                throw validation_error("mixed semiring instances in substitution");
            if (a.arity() != target)
                throw validation_error("substitution arguments have unequal arities");
        }
        // Powers of each argument are shared across monomials.
        std::vector<std::vector<poly>> pows(arity_);
        for (unsigned i = 0; i < arity_; ++i) {
            unsigned emax = 0;
            for (const auto &[e, c] : terms_) emax = std::max(emax, e[i]);
            pows[i].push_back(poly::constant(ring_, target, one(ring_)));
            for (unsigned k = 1; k <= emax; ++k)
                pows[i].push_back(pows[i][k - 1] * args[i]);
        }
        poly r{ring_, target};
        for (const auto &[e, c] : terms_) {
            poly term = poly::constant(ring_, target, c);
            for (unsigned i = 0; i < arity_; ++i)
                if (e[i] > 0) term = term * pows[i][e[i]];
            r = r + term;
        }
        return r;
    }

    // Substitutes variable perm[i] for variable i, keeping the arity. The
    // assignment need not be injective; collisions merge exponents.
    poly renamed(const std::vector<unsigned> &perm) const {
        if (perm.size() != arity_)
            throw validation_error("renaming length differs from arity");
        poly r{ring_, arity_};
        for (const auto &[e, c] : terms_) {
            exponents w(arity_, 0);
            for (unsigned i = 0; i < arity_; ++i) {
                if (perm[i] >= arity_)
                    throw validation_error("renaming target out of range");
                w[perm[i]] += e[i];
            }
            r.accumulate(w, c);
        }
        return r;
    }

    friend bool operator==(const poly &a, const poly &b) {
        if (a.ring_ != b.ring_)
            throw validation_error("mixed semiring instances in comparison");
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    friend bool operator!=(const poly &a, const poly &b) { return !(a == b); }

private:
    static void require_compatible(const poly &a, const poly &b) {
        if (a.ring_ != b.ring_)
            throw validation_error("mixed semiring instances");
        if (a.arity_ != b.arity_)
            throw validation_error("polynomial arities differ");
    }

    semiring ring_;
    unsigned arity_;
    std::map<exponents, value> terms_;
};

// A morphism n -> m: m polynomials in n variables. Composition is exact
// substitution; the identities and projections are variable tuples.
class poly_map {
public:
    poly_map(semiring ring, unsigned dom, unsigned cod, std::vector<poly> comps)
        : ring_(std::move(ring)), dom_(dom), cod_(cod), comps_(std::move(comps)) {
        if (comps_.size() != cod_)
            throw validation_error("component count differs from codomain arity");
        for (const auto &p : comps_) {
            if (p.ring() != ring_)
                throw validation_error("mixed semiring instances in map components");
            if (p.arity() != dom_)
                throw validation_error("component arity differs from domain arity");
        }
    }

    const semiring &ring() const noexcept { return ring_; }
    unsigned dom() const noexcept { return dom_; }
    unsigned cod() const noexcept { return cod_; }
    const std::vector<poly> &components() const noexcept { return comps_; }
    const poly &component(unsigned j) const { return comps_.at(j); }

    bool is_zero() const {
        return std::all_of(comps_.begin(), comps_.end(),
                           [](const poly &p) { return p.is_zero(); });
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto &p : comps_) d = std::max(d, p.degree());
        return d;
    }

    friend bool operator==(const poly_map &a, const poly_map &b) {
        if (a.ring_ != b.ring_)
            throw validation_error("mixed semiring instances in comparison");
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.comps_ == b.comps_;
    }

    friend bool operator!=(const poly_map &a, const poly_map &b) { return !(a == b); }

private:
    semiring ring_;
    unsigned dom_;
    unsigned cod_;
    std::vector<poly> comps_;
};

inline poly_map zero_map(const semiring &r, unsigned dom, unsigned cod) {
    return poly_map{r, dom, cod, std::vector<poly>(cod, poly{r, dom})};
}

inline poly_map identity(const semiring &r, unsigned n) {
    std::vector<poly> comps;
    comps.reserve(n);
    for (unsigned i = 0; i < n; ++i) comps.push_back(poly::variable(r, n, i));
    return poly_map{r, n, n, std::move(comps)};
}

// Shape of a product object: the arities of its factors, flattened by
// concatenation. The product of arities is their sum.
using shape = std::vector<unsigned>;

inline unsigned shape_total(const shape &s) {
    return std::accumulate(s.begin(), s.end(), 0u);
}

inline unsigned shape_offset(const shape &s, std::size_t j) {
    return std::accumulate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j), 0u);
}

// Projection onto factor j of a product with the given shape.
inline poly_map projection(const semiring &r, const shape &s, std::size_t j) {
    if (j >= s.size())
        throw validation_error("projection factor index out of range");
    unsigned total = shape_total(s);
    unsigned off = shape_offset(s, j);
    std::vector<poly> comps;
    comps.reserve(s[j]);
    for (unsigned i = 0; i < s[j]; ++i)
        comps.push_back(poly::variable(r, total, off + i));
    return poly_map{r, total, s[j], std::move(comps)};
}

// Pairing of projections selecting the listed factors in the given order.
inline poly_map select_factors(const semiring &r, const shape &s,
                               const std::vector<std::size_t> &factors) {
    unsigned total = shape_total(s);
    std::vector<poly> comps;
    for (std::size_t j : factors) {
        if (j >= s.size())
            throw validation_error("selected factor index out of range");
        unsigned off = shape_offset(s, j);
        for (unsigned i = 0; i < s[j]; ++i)
            comps.push_back(poly::variable(r, total, off + i));
    }
    unsigned cod = static_cast<unsigned>(comps.size());
    return poly_map{r, total, cod, std::move(comps)};
}

// Categorical pairing <f_0, ..., f_k>: shared domain, concatenated
// codomains.
inline poly_map pairing(const std::vector<poly_map> &maps) {
    if (maps.empty())
        throw validation_error("pairing requires at least one map");
    const auto &first = maps.front();
    std::vector<poly> comps;
    unsigned cod = 0;
    for (const auto &m : maps) {
        if (m.ring() != first.ring())
            throw validation_error("mixed semiring instances in pairing");
        if (m.dom() != first.dom())
            throw validation_error("pairing requires a shared domain");
        cod += m.cod();
        comps.insert(comps.end(), m.components().begin(), m.components().end());
    }
    return poly_map{first.ring(), first.dom(), cod, std::move(comps)};
}

inline poly_map compose(const poly_map &g, const poly_map &f) {
    if (g.ring() != f.ring())
        throw validation_error("mixed semiring instances in composition");
    if (g.dom() != f.cod())
        throw validation_error("composition arity mismatch: inner codomain " +
                               std::to_string(f.cod()) + " vs outer domain " +
                               std::to_string(g.dom()));
    std::vector<poly> comps;
    comps.reserve(g.cod());
    std::span<const poly> args{f.components()};
    for (const auto &p : g.components()) {
        poly q = p.substituted(args);
        // Substituting into a closed polynomial still lands in f's context.
        comps.push_back(g.dom() == 0 ? q.embedded(f.dom(), 0) : q);
    }
    return poly_map{g.ring(), f.dom(), g.cod(), std::move(comps)};
}

inline poly_map add(const poly_map &f, const poly_map &g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw validation_error("addition requires equal shapes");
    std::vector<poly> comps;
    comps.reserve(f.cod());
    for (unsigned j = 0; j < f.cod(); ++j)
        comps.push_back(f.component(j) + g.component(j));
    return poly_map{f.ring(), f.dom(), f.cod(), std::move(comps)};
}

inline poly_map scale(const value &c, const poly_map &f) {
    std::vector<poly> comps;
    comps.reserve(f.cod());
    for (const auto &p : f.components()) comps.push_back(p.scaled(c));
    return poly_map{f.ring(), f.dom(), f.cod(), std::move(comps)};
}

// f x g on the product of domains and codomains.
inline poly_map product_map(const poly_map &f, const poly_map &g) {
    if (f.ring() != g.ring())
        throw validation_error("mixed semiring instances in product");
    unsigned dom = f.dom() + g.dom();
    std::vector<poly> comps;
    comps.reserve(f.cod() + g.cod());
    for (const auto &p : f.components()) comps.push_back(p.embedded(dom, 0));
    for (const auto &p : g.components()) comps.push_back(p.embedded(dom, f.dom()));
    return poly_map{f.ring(), dom, f.cod() + g.cod(), std::move(comps)};
}

// Total derivative: (x, y) |-> sum_i d f / d x_i (x) * y_i, with variables
// 0..n-1 the base point x and n..2n-1 the tangent y.
inline poly_map diff(const poly_map &f) {
    unsigned n = f.dom();
    std::vector<poly> comps;
    comps.reserve(f.cod());
    for (const auto &p : f.components()) {
        poly d{f.ring(), 2 * n};
        for (unsigned i = 0; i < n; ++i) {
            poly pi = p.partial(i);
            if (pi.is_zero()) continue;
            d = d + pi.embedded(2 * n, 0) * poly::variable(f.ring(), 2 * n, n + i);
        }
        comps.push_back(std::move(d));
    }
    return poly_map{f.ring(), 2 * n, f.cod(), std::move(comps)};
}

// A map is derivative-linear when its total derivative is projection onto
// the tangent block. For polynomial maps this holds exactly for tuples of
// homogeneous degree-1 polynomials.
inline bool is_d_linear(const poly_map &f) {
    return diff(f) == compose(f, projection(f.ring(), {f.dom(), f.dom()}, 1));
}

// A map is a differential constant when its total derivative vanishes.
inline bool is_d_constant(const poly_map &f) { return diff(f).is_zero(); }

// Scalar-linearity test. Additivity is checked as the formal identity
// f(x + y) = f(x) + f(y) in doubled variables; homogeneity f(c x) = c f(x)
// is checked per scalar: exhaustively for small finite instances, else for
// the supplied sample scalars (default images of 0..3). Over infinite
// instances this is a sufficient formal criterion, not a semantic
// quantification over all of k.
inline bool is_k_linear(const poly_map &f,
                        const std::vector<value> *scalars = nullptr) {
    const semiring &r = f.ring();
    unsigned n = f.dom();
    // f(x + y) = f(x) + f(y), formally in 2n variables.
    std::vector<poly> sum_comps;
    sum_comps.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        sum_comps.push_back(poly::variable(r, 2 * n, i) +
                            poly::variable(r, 2 * n, n + i));
    poly_map arg_sum{r, 2 * n, n, std::move(sum_comps)};
    poly_map lhs = compose(f, arg_sum);
    poly_map rhs = add(compose(f, projection(r, {n, n}, 0)),
                       compose(f, projection(r, {n, n}, 1)));
    if (lhs != rhs) return false;
    // f(c x) = c f(x) per scalar.
    std::vector<value> pool;
    if (scalars) {
        pool = *scalars;
    } else if (r.is_finite() && r.modulus() <= 4096) {
        for (std::uint64_t c = 0; c < r.modulus(); ++c)
            pool.push_back(value::from_integer(r, static_cast<long long>(c)));
    } else {
        for (long long c = 0; c <= 3; ++c) pool.push_back(value::from_integer(r, c));
    }
    poly_map id = identity(r, n);
    for (const auto &c : pool) {
        if (compose(f, scale(c, id)) != scale(c, f)) return false;
    }
    return true;
}

} // namespace cartdiff
