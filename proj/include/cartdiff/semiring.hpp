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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace cartdiff {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Which commutative semiring the coefficients live in. The instance is a
// runtime configuration carried by every value and polynomial; operations
// across distinct instances are a hard error, never a coercion.
enum class ring_kind : std::uint8_t { naturals, integers, rationals, mod };

class semiring {
public:
    static semiring naturals() { return semiring{ring_kind::naturals, 0}; }
    static semiring integers() { return semiring{ring_kind::integers, 0}; }
    static semiring rationals() { return semiring{ring_kind::rationals, 0}; }

    // Integers modulo m, m >= 2. Values are kept reduced to [0, m).
    static semiring mod(std::uint64_t modulus) {
        if (modulus < 2)
            throw validation_error("modulus must be at least 2");
        return semiring{ring_kind::mod, modulus};
    }

    // Tags: "nat", "int", "rat", "modp:<p>".
    static std::optional<semiring> parse_tag(std::string_view tag) {
        if (tag == "nat") return naturals();
        if (tag == "int") return integers();
        if (tag == "rat") return rationals();
        constexpr std::string_view prefix = "modp:";
        if (tag.substr(0, prefix.size()) == prefix) {
            std::uint64_t p = 0;
            auto digits = tag.substr(prefix.size());
            if (digits.empty()) return std::nullopt;
            for (char c : digits) {
                if (c < '0' || c > '9') return std::nullopt;
                p = p * 10 + static_cast<std::uint64_t>(c - '0');
                if (p > (std::uint64_t{1} << 62)) return std::nullopt;
            }
            if (p < 2) return std::nullopt;
            return mod(p);
        }
        return std::nullopt;
    }

    std::string tag() const {
        switch (kind_) {
        case ring_kind::naturals: return "nat";
        case ring_kind::integers: return "int";
        case ring_kind::rationals: return "rat";
        case ring_kind::mod: return "modp:" + std::to_string(modulus_);
        }
        return {};
    }

    ring_kind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    // Every supported instance except the naturals has additive inverses.
    bool has_negation() const noexcept { return kind_ != ring_kind::naturals; }

    // Finite instances admit exhaustive quantification over scalars.
    bool is_finite() const noexcept { return kind_ == ring_kind::mod; }

    bool operator==(const semiring &) const = default;

private:
    semiring(ring_kind k, std::uint64_t m) : kind_(k), modulus_(m) {}

    ring_kind kind_;
    std::uint64_t modulus_;
};

// An exact element of a chosen semiring instance. Representation:
// naturals / integers / rationals use an exact rational (denominator 1 for
// the first two), mod-m uses an integer reduced to [0, m). No floating
// point anywhere.
class value {
public:
    value() : ring_(semiring::integers()), v_(0) {}

    static value zero(const semiring &r) { return value{r, bigrat{0}}; }
    static value one(const semiring &r) { return value{r, bigrat{1}}; }

    // Canonical image of an integer under the unique map from the integers
    // (from the naturals, for the naturals instance).
    static value from_integer(const semiring &r, const bigint &n) {
        switch (r.kind()) {
        case ring_kind::naturals:
            if (n < 0)
                throw validation_error("the naturals contain no negative values");
            return value{r, bigrat{n}};
        case ring_kind::integers:
        case ring_kind::rationals:
            return value{r, bigrat{n}};
        case ring_kind::mod: {
            bigint m{r.modulus()};
            bigint red = n % m;
            if (red < 0) red += m;
            return value{r, bigrat{red}};
        }
        }
        throw validation_error("unknown semiring instance");
    }

    static value from_integer(const semiring &r, long long n) {
        return from_integer(r, bigint{n});
    }

    // Exact rational p/q; only the rationals instance accepts q != 1.
    static value from_rational(const semiring &r, const bigint &num, const bigint &den) {
        if (den == 0)
            throw validation_error("zero denominator");
        if (r.kind() == ring_kind::rationals)
            return value{r, bigrat{num, den}};
        if (den == 1 || num % den == 0)
            return from_integer(r, num / den);
        throw validation_error("non-integer literal in a non-rational semiring");
    }

    const semiring &ring() const noexcept { return ring_; }
    const bigrat &raw() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    friend value operator+(const value &a, const value &b) {
        require_same(a, b);
        return value{a.ring_, a.reduce(a.v_ + b.v_)};
    }

    friend value operator*(const value &a, const value &b) {
        require_same(a, b);
        return value{a.ring_, a.reduce(a.v_ * b.v_)};
    }

    // Additive inverse; rejected by the naturals.
    value negated() const {
        if (!ring_.has_negation())
            throw validation_error("the naturals have no additive inverses");
        return value{ring_, reduce(-v_)};
    }

    friend bool operator==(const value &a, const value &b) {
        require_same(a, b);
        return a.v_ == b.v_;
    }

    friend bool operator!=(const value &a, const value &b) { return !(a == b); }

    // Total order on the underlying representation; used only for
    // deterministic serialization, not part of the semiring structure.
    friend bool operator<(const value &a, const value &b) {
        require_same(a, b);
        return a.v_ < b.v_;
    }

    std::string str() const {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        if (denominator(v_) == 1) return numerator(v_).str();
        return numerator(v_).str() + "/" + denominator(v_).str();
    }

private:
    value(semiring r, bigrat v) : ring_(std::move(r)), v_(std::move(v)) {}

    bigrat reduce(bigrat x) const {
        if (ring_.kind() != ring_kind::mod) return x;
        bigint m{ring_.modulus()};
        bigint n = boost::multiprecision::numerator(x);
        bigint red = n % m;
        if (red < 0) red += m;
        return bigrat{red};
    }

    static void require_same(const value &a, const value &b) {
        if (a.ring_ != b.ring_)
            throw validation_error("mixed semiring instances: " + a.ring_.tag() +
                                   " vs " + b.ring_.tag());
    }

    semiring ring_;
    bigrat v_;
};

inline value add(const value &a, const value &b) { return a + b; }
inline value mul(const value &a, const value &b) { return a * b; }
inline value zero(const semiring &r) { return value::zero(r); }
inline value one(const semiring &r) { return value::one(r); }
inline bool eq(const value &a, const value &b) { return a == b; }

} // namespace cartdiff
