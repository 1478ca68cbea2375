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

// Derived differentiation operators on polynomial maps: partial derivatives
// in one factor of a product domain, the two iterated towers (partial and
// total), the zero-injection maps relating them, and linearization at zero.

#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "semiring.hpp"

namespace cartdiff {

// Partial derivative of f in factor j of a product domain with the given
// shape. A fresh copy of factor j is appended at the end of the domain and
// fed into the tangent slot for that factor, all other tangents zero:
// partial = D[f] o <identity, 0, ..., fresh, ..., 0>.
inline poly_map partial_in_slot(const poly_map &f, const shape &s, std::size_t j) {
    if (shape_total(s) != f.dom())
        throw validation_error("shape total differs from domain arity");
    if (j >= s.size())
        throw validation_error("partial derivative factor index out of range");
    const semiring &r = f.ring();
    unsigned n = f.dom();
    unsigned a = s[j];
    unsigned off = shape_offset(s, j);
    unsigned dom = n + a;
    std::vector<poly> comps;
    comps.reserve(2 * n);
    for (unsigned i = 0; i < n; ++i) comps.push_back(poly::variable(r, dom, i));
    for (unsigned i = 0; i < n; ++i) {
        if (i >= off && i < off + a)
            comps.push_back(poly::variable(r, dom, n + (i - off)));
        else
            comps.push_back(poly{r, dom});
    }
    poly_map inject{r, dom, 2 * n, std::move(comps)};
    return compose(diff(f), inject);
}

// n-th partial derivative tower: the domain of the k-th stage is viewed as
// base x linear^k with every factor of f's arity, and each stage takes the
// partial derivative in the base factor, appending its fresh copy at the
// end. Stage n has domain arity a * (1 + n).
inline poly_map partial_n(const poly_map &f, unsigned n) {
    poly_map r = f;
    unsigned a = f.dom();
    for (unsigned k = 0; k < n; ++k)
        r = partial_in_slot(r, shape(1 + k, a), 0);
    return r;
}

// n-th total derivative tower: diff iterated n times, domain arity a * 2^n.
inline poly_map total_n(const poly_map &f, unsigned n) {
    poly_map r = f;
    for (unsigned k = 0; k < n; ++k) r = diff(r);
    return r;
}

// The zero-injection square root of the tower relation
// partial_n(f, n) = total_n(f, n) o zero_injection(r, a, n).
// Recursively z_0 = identity and z_{n+1} = (z_n x z_n) o iota_n, where
// iota_n keeps the base and first n linear factors in the first copy and
// sends the last linear factor to the base of the second copy, zero
// elsewhere.
inline poly_map zero_injection(const semiring &r, unsigned a, unsigned n) {
    poly_map z = identity(r, a);
    for (unsigned k = 0; k < n; ++k) {
        shape s(2 + k, a);
        std::vector<std::size_t> first(1 + k);
        std::iota(first.begin(), first.end(), std::size_t{0});
        std::vector<poly_map> parts{select_factors(r, s, first),
                                    select_factors(r, s, {1 + k})};
        if (k > 0) parts.push_back(zero_map(r, a * (2 + k), a * k));
        poly_map iota = pairing(parts);
        z = compose(product_map(z, z), iota);
    }
    return z;
}

// Linearization at zero: L[f] = D[f] o <0, identity>. A map equals its own
// linearization exactly when it is derivative-linear.
inline poly_map linearize(const poly_map &f) {
    unsigned a = f.dom();
    const semiring &r = f.ring();
    return compose(diff(f), pairing({zero_map(r, a, a), identity(r, a)}));
}

} // namespace cartdiff
