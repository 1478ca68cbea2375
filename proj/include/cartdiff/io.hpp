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

// Reading and writing maps. The text form of a polynomial map is
//   dom -> cod : [expr, expr, ...]
// with expressions built from integer or fraction coefficients, variables
// x0, x1, ..., products, powers, and sums. Sequences, pairs and distances
// travel as JSON. Files never carry the semiring; the caller supplies it,
// and mixing instances fails loudly downstream. All JSON emitted here has
// alphabetically ordered keys, so equal data serializes byte-identically.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "delta.hpp"
#include "errors.hpp"
#include "faa.hpp"
#include "polynomial.hpp"
#include "semiring.hpp"
#include "ultrametric.hpp"

namespace cartdiff {

inline std::string poly_text(const poly &p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto &[e, c] : p.terms()) {
        std::string t = monomial_text(e, c);
        if (s.empty()) {
            s = t;
        } else if (t.front() == '-') {
            s += " - " + t.substr(1);
        } else {
            s += " + " + t;
        }
    }
    return s;
}

inline std::string poly_map_text(const poly_map &f) {
    std::string s = std::to_string(f.dom()) + " -> " + std::to_string(f.cod()) + " : [";
    for (unsigned j = 0; j < f.cod(); ++j) {
        if (j) s += ", ";
        s += poly_text(f.component(j));
    }
    s += "]";
    return s;
}

template <class M>
std::string faa_text(const basic_faa_seq<M> &f);

inline std::string faa_term_text(const poly_map &t) { return poly_map_text(t); }

template <class M>
std::string faa_term_text(const basic_faa_seq<M> &t) {
    return faa_text(t);
}

template <class M>
std::string faa_text(const basic_faa_seq<M> &f) {
    std::string s = "sequence " + std::to_string(f.dom()) + " -> " +
                    std::to_string(f.cod()) + ", order " + std::to_string(f.order());
    for (unsigned n = 0; n <= f.order(); ++n)
        s += "\n  term " + std::to_string(n) + ": " + faa_term_text(f.term(n));
    return s;
}

inline std::string delta_text(const delta_map &f) {
    return "pair first  " + poly_map_text(f.first()) + "\n     second " +
           poly_map_text(f.second());
}

namespace detail {

// Integer or fraction literal, optionally negative, e.g. "7", "-3", "1/2".
inline value parse_value(const semiring &r, const std::string &text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](const char *what) {
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start)
            throw parse_error(std::string("expected ") + what + " in coefficient '" +
                                  text + "'",
                              start, text);
        return bigint{text.substr(start, i - start)};
    };
    bigint num = digits("digits");
    value v = one(r);
    if (i < text.size() && text[i] == '/') {
        ++i;
        bigint den = digits("denominator digits");
        if (i != text.size())
            throw parse_error("trailing characters in coefficient '" + text + "'", i,
                              text);
        v = value::from_rational(r, num, den);
    } else {
        if (i != text.size())
            throw parse_error("trailing characters in coefficient '" + text + "'", i,
                              text);
        v = value::from_integer(r, num);
    }
    return neg ? v.negated() : v;
}

struct token {
    enum class kind {
        number,
        variable,
        arrow,
        lbracket,
        rbracket,
        comma,
        colon,
        plus,
        minus,
        star,
        caret,
        slash,
        end
    };
    kind k;
    std::string text;
    std::size_t pos;
};

class lexer {
public:
    explicit lexer(const std::string &s) : s_(s) { advance(); }

    const token &peek() const noexcept { return cur_; }

    token take() {
        token t = cur_;
        advance();
        return t;
    }

    token expect(token::kind k, const char *what) {
        if (cur_.k != k)
            throw parse_error(std::string("expected ") + what, cur_.pos,
                              cur_.text.empty() ? "end of input" : cur_.text);
        return take();
    }

private:
    void advance() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' ||
                                  s_[i_] == '\r'))
            ++i_;
        std::size_t pos = i_;
        if (i_ >= s_.size()) {
            cur_ = {token::kind::end, "", pos};
            return;
        }
        char c = s_[i_];
        if (c >= '0' && c <= '9') {
            std::size_t start = i_;
            while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') ++i_;
            cur_ = {token::kind::number, s_.substr(start, i_ - start), pos};
            return;
        }
        if (c == 'x') {
            std::size_t start = i_++;
            while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') ++i_;
            if (i_ == start + 1)
                throw parse_error("expected variable index after 'x'", pos, "x");
            cur_ = {token::kind::variable, s_.substr(start, i_ - start), pos};
            return;
        }
        if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
            i_ += 2;
            cur_ = {token::kind::arrow, "->", pos};
            return;
        }
        auto single = [&](token::kind k) {
            ++i_;
            cur_ = {k, std::string(1, c), pos};
        };
        switch (c) {
        case '[': single(token::kind::lbracket); return;
        case ']': single(token::kind::rbracket); return;
        case ',': single(token::kind::comma); return;
        case ':': single(token::kind::colon); return;
        case '+': single(token::kind::plus); return;
        case '-': single(token::kind::minus); return;
        case '*': single(token::kind::star); return;
        case '^': single(token::kind::caret); return;
        case '/': single(token::kind::slash); return;
        default:
            throw parse_error("unexpected character", pos, std::string(1, c));
        }
    }

    const std::string &s_;
    std::size_t i_ = 0;
    token cur_{token::kind::end, "", 0};
};

constexpr unsigned max_parsed_arity = 65535;
constexpr unsigned max_parsed_exponent = 4096;

inline unsigned parse_unsigned(lexer &lx, const char *what, unsigned cap) {
    token t = lx.expect(token::kind::number, what);
    unsigned long long v = 0;
    for (char c : t.text) {
        v = v * 10 + static_cast<unsigned long long>(c - '0');
        if (v > cap)
            throw parse_error(std::string(what) + " exceeds limit " +
                                  std::to_string(cap),
                              t.pos, t.text);
    }
    return static_cast<unsigned>(v);
}

// term := factor ('*' factor)*, factor := coefficient | variable ['^' n]
inline std::pair<exponents, value> parse_term(lexer &lx, const semiring &r,
                                              unsigned arity) {
    exponents e(arity, 0);
    value c = one(r);
    while (true) {
        const token &t = lx.peek();
        if (t.k == token::kind::number) {
            token num = lx.take();
            bigint n{num.text};
            if (lx.peek().k == token::kind::slash) {
                lx.take();
                token den = lx.expect(token::kind::number, "denominator");
                c = c * value::from_rational(r, n, bigint{den.text});
            } else {
                c = c * value::from_integer(r, n);
            }
        } else if (t.k == token::kind::variable) {
            token var = lx.take();
            unsigned long long idx = 0;
            for (std::size_t i = 1; i < var.text.size(); ++i) {
                idx = idx * 10 + static_cast<unsigned long long>(var.text[i] - '0');
                if (idx > max_parsed_arity)
                    throw parse_error("variable index exceeds limit", var.pos,
                                      var.text);
            }
            if (idx >= arity)
                throw validation_error("variable " + var.text +
                                       " is out of range for domain arity " +
                                       std::to_string(arity));
            unsigned exp = 1;
            if (lx.peek().k == token::kind::caret) {
                lx.take();
                exp = parse_unsigned(lx, "exponent", max_parsed_exponent);
            }
            e[static_cast<std::size_t>(idx)] += exp;
        } else {
            throw parse_error("expected coefficient or variable", t.pos,
                              t.text.empty() ? "end of input" : t.text);
        }
        if (lx.peek().k != token::kind::star) break;
        lx.take();
    }
    return {std::move(e), std::move(c)};
}

inline poly parse_poly(lexer &lx, const semiring &r, unsigned arity) {
    poly acc{r, arity};
    bool negate = false;
    if (lx.peek().k == token::kind::minus) {
        lx.take();
        negate = true;
    }
    while (true) {
        auto [e, c] = parse_term(lx, r, arity);
        acc.accumulate(e, negate ? c.negated() : c);
        if (lx.peek().k == token::kind::plus) {
            lx.take();
            negate = false;
        } else if (lx.peek().k == token::kind::minus) {
            lx.take();
            negate = true;
        } else {
            break;
        }
    }
    return acc;
}

} // namespace detail

// Parses "dom -> cod : [expr, ...]"; the expression count must match cod.
inline poly_map parse_poly_map(const std::string &text, const semiring &r) {
    detail::lexer lx{text};
    unsigned dom = detail::parse_unsigned(lx, "domain arity", detail::max_parsed_arity);
    lx.expect(detail::token::kind::arrow, "'->'");
    unsigned cod =
        detail::parse_unsigned(lx, "codomain arity", detail::max_parsed_arity);
    lx.expect(detail::token::kind::colon, "':'");
    lx.expect(detail::token::kind::lbracket, "'['");
    std::vector<poly> comps;
    comps.reserve(cod);
    if (lx.peek().k != detail::token::kind::rbracket) {
        comps.push_back(detail::parse_poly(lx, r, dom));
        while (lx.peek().k == detail::token::kind::comma) {
            lx.take();
            comps.push_back(detail::parse_poly(lx, r, dom));
        }
    }
    lx.expect(detail::token::kind::rbracket, "']'");
    detail::token tail = lx.take();
    if (tail.k != detail::token::kind::end)
        throw parse_error("trailing input after ']'", tail.pos, tail.text);
    if (comps.size() != cod)
        throw validation_error("component count " + std::to_string(comps.size()) +
                               " differs from declared codomain arity " +
                               std::to_string(cod));
    return poly_map{r, dom, cod, std::move(comps)};
}

namespace detail {

inline const nlohmann::json &field(const nlohmann::json &j, const char *key) {
    if (!j.is_object())
        throw parse_error("expected a JSON object", 0, key);
    auto it = j.find(key);
    if (it == j.end())
        throw parse_error(std::string("missing field '") + key + "'", 0, key);
    return *it;
}

inline unsigned field_unsigned(const nlohmann::json &j, const char *key,
                               unsigned cap) {
    const auto &v = field(j, key);
    if (!v.is_number_unsigned() || v.get<unsigned long long>() > cap)
        throw parse_error(std::string("field '") + key +
                              "' must be an integer in [0, " + std::to_string(cap) +
                              "]",
                          0, key);
    return v.get<unsigned>();
}

} // namespace detail

inline nlohmann::json poly_map_json(const poly_map &f) {
    nlohmann::json comps = nlohmann::json::array();
    for (unsigned j = 0; j < f.cod(); ++j) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &[e, c] : f.component(j).terms())
            terms.push_back({{"coef", c.str()}, {"exps", e}});
        comps.push_back(std::move(terms));
    }
    return {{"cod", f.cod()}, {"components", std::move(comps)}, {"dom", f.dom()}};
}

inline poly_map poly_map_from_json(const nlohmann::json &j, const semiring &r) {
    unsigned dom = detail::field_unsigned(j, "dom", detail::max_parsed_arity);
    unsigned cod = detail::field_unsigned(j, "cod", detail::max_parsed_arity);
    const auto &comps = detail::field(j, "components");
    if (!comps.is_array() || comps.size() != cod)
        throw parse_error("'components' must be an array of length cod", 0,
                          "components");
    std::vector<poly> out;
    out.reserve(cod);
    for (const auto &comp : comps) {
        if (!comp.is_array())
            throw parse_error("component must be an array of monomials", 0,
                              "components");
        poly p{r, dom};
        for (const auto &m : comp) {
            const auto &exps = detail::field(m, "exps");
            if (!exps.is_array() || exps.size() != dom)
                throw parse_error("'exps' must be an array of length dom", 0, "exps");
            exponents e;
            e.reserve(dom);
            for (const auto &x : exps) {
                if (!x.is_number_unsigned() ||
                    x.get<unsigned long long>() > detail::max_parsed_exponent)
                    throw parse_error("exponent must be an integer in [0, " +
                                          std::to_string(detail::max_parsed_exponent) +
                                          "]",
                                      0, "exps");
                e.push_back(x.get<unsigned>());
            }
            const auto &coef = detail::field(m, "coef");
            if (!coef.is_string())
                throw parse_error("'coef' must be a string literal", 0, "coef");
            p.accumulate(e, detail::parse_value(r, coef.get<std::string>()));
        }
        out.push_back(std::move(p));
    }
    return poly_map{r, dom, cod, std::move(out)};
}

inline nlohmann::json faa_json(const faa_seq &f) {
    nlohmann::json terms = nlohmann::json::array();
    for (unsigned n = 0; n <= f.order(); ++n) terms.push_back(poly_map_json(f.term(n)));
    return {{"cod", f.cod()},
            {"dom", f.dom()},
            {"order", f.order()},
            {"terms", std::move(terms)}};
}

inline faa_seq faa_from_json(const nlohmann::json &j, const semiring &r,
                             bool validate = true) {
    unsigned dom = detail::field_unsigned(j, "dom", detail::max_parsed_arity);
    unsigned cod = detail::field_unsigned(j, "cod", detail::max_parsed_arity);
    unsigned order = detail::field_unsigned(j, "order", 64);
    const auto &terms = detail::field(j, "terms");
    if (!terms.is_array() || terms.size() != static_cast<std::size_t>(order) + 1)
        throw parse_error("'terms' must be an array of length order + 1", 0, "terms");
    std::vector<poly_map> out;
    out.reserve(order + 1);
    for (const auto &t : terms) out.push_back(poly_map_from_json(t, r));
    faa_seq seq{dom, cod, std::move(out)};
    if (validate) validate_seq(seq);
    return seq;
}

inline nlohmann::json delta_json(const delta_map &f) {
    return {{"first", poly_map_json(f.first())},
            {"second", poly_map_json(f.second())}};
}

inline delta_map delta_from_json(const nlohmann::json &j, const semiring &r,
                                 delta_linearity mode = delta_linearity::d_linear) {
    return delta_map{poly_map_from_json(detail::field(j, "first"), r),
                     poly_map_from_json(detail::field(j, "second"), r), mode};
}

inline nlohmann::json distance_json(const distance &d) {
    if (d.is_exact()) return {{"exact", d.index()}};
    return {{"agree_up_to", d.index()}};
}

} // namespace cartdiff
