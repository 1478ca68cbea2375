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

// The pair construction: maps are pairs (f, g) of parallel polynomial maps
// whose second component is linear, composed and added componentwise, with
// the derivative taking both components to the second one precomposed with
// the tangent projection. The derivative here ignores the first component
// entirely, which makes this a differential structure genuinely different
// from the polynomial one while sharing its objects.

#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "faa.hpp"
#include "polynomial.hpp"
#include "semiring.hpp"

namespace cartdiff {

// Which linearity the second component must satisfy. The default insists on
// derivative-linearity; the relaxed flag accepts any scalar-linear map.
enum class delta_linearity { d_linear, k_linear };

class delta_map {
public:
    delta_map(poly_map first, poly_map second,
              delta_linearity mode = delta_linearity::d_linear)
        : first_(std::move(first)), second_(std::move(second)), mode_(mode) {
        if (first_.ring() != second_.ring())
            throw validation_error("mixed semiring instances in pair components");
        if (first_.dom() != second_.dom() || first_.cod() != second_.cod())
            throw validation_error("pair components must be parallel maps");
        if (mode_ == delta_linearity::d_linear) {
            if (!is_d_linear(second_))
                throw validation_error("second component is not derivative-linear");
        } else if (!is_k_linear(second_)) {
            throw validation_error("second component is not scalar-linear");
        }
    }

    const poly_map &first() const noexcept { return first_; }
    const poly_map &second() const noexcept { return second_; }
    delta_linearity mode() const noexcept { return mode_; }
    const semiring &ring() const noexcept { return first_.ring(); }
    unsigned dom() const noexcept { return first_.dom(); }
    unsigned cod() const noexcept { return first_.cod(); }

    friend bool operator==(const delta_map &a, const delta_map &b) {
        return a.first_ == b.first_ && a.second_ == b.second_;
    }
    friend bool operator!=(const delta_map &a, const delta_map &b) {
        return !(a == b);
    }

private:
    poly_map first_;
    poly_map second_;
    delta_linearity mode_;
};

namespace detail {

inline delta_linearity join(delta_linearity a, delta_linearity b) {
    return (a == delta_linearity::k_linear || b == delta_linearity::k_linear)
               ? delta_linearity::k_linear
               : delta_linearity::d_linear;
}

} // namespace detail

inline delta_map delta_compose(const delta_map &g, const delta_map &f) {
    return delta_map{compose(g.first(), f.first()), compose(g.second(), f.second()),
                     detail::join(g.mode(), f.mode())};
}

inline delta_map delta_identity(const semiring &r, unsigned n) {
    return delta_map{identity(r, n), identity(r, n)};
}

inline delta_map delta_projection(const semiring &r, const shape &s, std::size_t j) {
    return delta_map{projection(r, s, j), projection(r, s, j)};
}

inline delta_map delta_zero(const semiring &r, unsigned dom, unsigned cod) {
    return delta_map{zero_map(r, dom, cod), zero_map(r, dom, cod)};
}

inline delta_map delta_add(const delta_map &f, const delta_map &g) {
    return delta_map{add(f.first(), g.first()), add(f.second(), g.second()),
                     detail::join(f.mode(), g.mode())};
}

inline delta_map delta_scale(const value &c, const delta_map &f) {
    return delta_map{scale(c, f.first()), scale(c, f.second()), f.mode()};
}

inline delta_map delta_pairing(const std::vector<delta_map> &maps) {
    if (maps.empty())
        throw validation_error("pairing requires at least one map");
    std::vector<poly_map> firsts, seconds;
    firsts.reserve(maps.size());
    seconds.reserve(maps.size());
    delta_linearity mode = delta_linearity::d_linear;
    for (const auto &m : maps) {
        firsts.push_back(m.first());
        seconds.push_back(m.second());
        mode = detail::join(mode, m.mode());
    }
    return delta_map{pairing(firsts), pairing(seconds), mode};
}

// Derivative of a pair: both components become the second component
// composed with the tangent projection, so the first component leaves no
// trace in any derivative.
inline delta_map delta_diff(const delta_map &f) {
    poly_map tangent =
        compose(f.second(), projection(f.ring(), {f.dom(), f.dom()}, 1));
    return delta_map{tangent, tangent, f.mode()};
}

// Inclusion of a linear map as a pair with itself.
inline delta_map delta_lift(const poly_map &f,
                            delta_linearity mode = delta_linearity::d_linear) {
    return delta_map{f, f, mode};
}

// A pair is a differential constant exactly when its second component
// vanishes; the first component is then arbitrary.
inline bool is_d_constant_delta(const delta_map &f) { return f.second().is_zero(); }

// Pairs plug into the generic law machinery; they never appear inside
// sequences, so the degree-folding hooks are deliberately absent.
template <>
struct map_ops<delta_map> {
    using map_type = delta_map;
    using context = semiring;

    static context ctx(const delta_map &f) { return f.ring(); }
    static unsigned dom(const delta_map &f) { return f.dom(); }
    static unsigned cod(const delta_map &f) { return f.cod(); }

    static delta_map compose(const delta_map &g, const delta_map &f) {
        return delta_compose(g, f);
    }
    static delta_map add(const delta_map &f, const delta_map &g) {
        return delta_add(f, g);
    }
    static delta_map scale(const value &c, const delta_map &f) {
        return delta_scale(c, f);
    }
    static delta_map zero(const context &c, unsigned dom_arity, unsigned cod_arity) {
        return delta_zero(c, dom_arity, cod_arity);
    }
    static delta_map identity(const context &c, unsigned n) {
        return delta_identity(c, n);
    }
    static delta_map select(const context &c, const shape &s,
                            const std::vector<std::size_t> &factors) {
        return delta_map{select_factors(c, s, factors), select_factors(c, s, factors)};
    }
    static delta_map pair(const std::vector<delta_map> &maps) {
        return delta_pairing(maps);
    }
    static delta_map diff(const delta_map &f) { return delta_diff(f); }
    static delta_map truncate(const delta_map &f, unsigned) { return f; }
    static unsigned depth(const delta_map &) {
        return std::numeric_limits<unsigned>::max();
    }
    static bool equal(const delta_map &a, const delta_map &b) { return a == b; }
    static bool is_zero(const delta_map &f) {
        return f.first().is_zero() && f.second().is_zero();
    }
};

} // namespace cartdiff
