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

// Law harness: random inputs, exact verdicts. Every check below samples
// maps from a seeded generator and then decides a law by symbolic equality,
// so a pass is a proof for the sampled instances and a failure comes with a
// replayable counterexample. Reports are replayable from (law id, seed,
// config) alone: each (instance, law) pair derives its own generator, so
// verdicts do not depend on which other laws ran.
//
// Seven canned mutations of the differential combinator are provided as a
// sensitivity meta-check: each must be caught by at least one law.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "delta.hpp"
#include "derivative.hpp"
#include "errors.hpp"
#include "faa.hpp"
#include "io.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
#include "semiring.hpp"
#include "ultrametric.hpp"

namespace cartdiff {

struct sample_config {
    std::uint64_t seed = 0;
    unsigned max_degree = 3;
    unsigned max_arity = 2;
    std::vector<long long> pool{0, 1, 2, 3};
    unsigned samples_per_law = 100;
    unsigned truncation = 4;
};

inline void validate_config(const sample_config &cfg, const semiring &r) {
    if (cfg.samples_per_law < 1)
        throw validation_error("samples-per-law must be at least 1");
    if (cfg.truncation < 2)
        throw validation_error("truncation must be at least 2 for laws that "
                               "differentiate twice");
    if (cfg.max_arity < 1) throw validation_error("max-arity must be at least 1");
    if (cfg.pool.empty()) throw validation_error("coefficient pool must be nonempty");
    if (!r.has_negation())
        for (long long c : cfg.pool)
            if (c < 0)
                throw validation_error(
                    "coefficient pool contains a negative entry for a semiring "
                    "without negation");
}

struct law_report {
    std::string law_id;
    std::string instance;
    bool passed = true;
    unsigned samples_run = 0;
    std::optional<std::string> counterexample;
};

inline nlohmann::json law_report_json(const law_report &rep) {
    nlohmann::json j{{"instance", rep.instance},
                     {"law", rep.law_id},
                     {"samples", rep.samples_run},
                     {"verdict", rep.passed ? "pass" : "fail"}};
    if (rep.counterexample)
        j["counterexample"] = *rep.counterexample;
    else
        j["counterexample"] = nullptr;
    return j;
}

inline nlohmann::json law_reports_json(const std::vector<law_report> &reps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : reps) arr.push_back(law_report_json(r));
    return arr;
}

inline std::string report_table(const std::vector<law_report> &reps) {
    std::size_t law_w = 3, inst_w = 8;
    for (const auto &r : reps) {
        law_w = std::max(law_w, r.law_id.size());
        inst_w = std::max(inst_w, r.instance.size());
    }
    std::string out;
    for (const auto &r : reps) {
        std::string line = r.law_id;
        line.append(law_w - r.law_id.size() + 2, ' ');
        line += r.instance;
        line.append(inst_w - r.instance.size() + 2, ' ');
        line += r.passed ? "pass" : "FAIL";
        line += "  samples=" + std::to_string(r.samples_run);
        out += line + "\n";
        if (r.counterexample) {
            std::string cex = *r.counterexample;
            std::size_t start = 0;
            while (start <= cex.size()) {
                std::size_t nl = cex.find('\n', start);
                std::string part = nl == std::string::npos
                                       ? cex.substr(start)
                                       : cex.substr(start, nl - start);
                out += "      | " + part + "\n";
                if (nl == std::string::npos) break;
                start = nl + 1;
            }
        }
    }
    return out;
}

inline bool all_passed(const std::vector<law_report> &reps) {
    return std::all_of(reps.begin(), reps.end(),
                       [](const law_report &r) { return r.passed; });
}

inline void sort_reports(std::vector<law_report> &reps) {
    std::stable_sort(reps.begin(), reps.end(),
                     [](const law_report &a, const law_report &b) {
                         if (a.law_id != b.law_id) return a.law_id < b.law_id;
                         return a.instance < b.instance;
                     });
}

inline std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Deterministic generator. Draws use plain modulo so the stream depends
// only on the engine, never on the standard library's distribution
// implementation; the slight modulo bias is irrelevant here.
class sampler {
public:
    sampler(std::uint64_t seed, const std::string &scope)
        : rng_(seed ^ fnv1a(scope)) {}

    std::uint64_t next() { return rng_(); }

    unsigned below(unsigned n) {
        return n == 0 ? 0u : static_cast<unsigned>(rng_() % n);
    }

    unsigned between(unsigned lo, unsigned hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 rng_;
};

inline value sample_value(sampler &s, const semiring &r, const sample_config &cfg) {
    value v = value::from_integer(
        r, cfg.pool[s.below(static_cast<unsigned>(cfg.pool.size()))]);
    if (r.has_negation() && s.below(4) == 0) v = v.negated();
    return v;
}

inline poly sample_poly(sampler &s, const semiring &r, unsigned arity,
                        const sample_config &cfg) {
    poly p{r, arity};
    unsigned nterms = s.between(1, 3);
    for (unsigned t = 0; t < nterms; ++t) {
        exponents e(arity, 0);
        unsigned d = arity == 0 ? 0u : s.below(cfg.max_degree + 1);
        for (unsigned k = 0; k < d; ++k) e[s.below(arity)] += 1;
        p.accumulate(e, sample_value(s, r, cfg));
    }
    return p;
}

inline poly_map sample_polymap(sampler &s, const semiring &r, unsigned dom,
                               unsigned cod, const sample_config &cfg) {
    std::vector<poly> comps;
    comps.reserve(cod);
    for (unsigned j = 0; j < cod; ++j) comps.push_back(sample_poly(s, r, dom, cfg));
    return poly_map{r, dom, cod, std::move(comps)};
}

// Tuples of degree-1 monomials; always passes is_d_linear.
inline poly_map sample_d_linear(sampler &s, const semiring &r, unsigned dom,
                                unsigned cod, const sample_config &cfg) {
    std::vector<poly> comps;
    comps.reserve(cod);
    for (unsigned j = 0; j < cod; ++j) {
        poly p{r, dom};
        if (dom > 0) {
            unsigned nterms = s.between(1, dom);
            for (unsigned t = 0; t < nterms; ++t) {
                exponents e(dom, 0);
                e[s.below(dom)] = 1;
                p.accumulate(e, sample_value(s, r, cfg));
            }
        }
        comps.push_back(std::move(p));
    }
    return poly_map{r, dom, cod, std::move(comps)};
}

namespace detail {

// One symmetrized generator: a random base-block monomial times one
// variable per linear block, summed over all assignments of the chosen
// variables to blocks. Multilinear and symmetric by construction; repeated
// choices merge coefficients and may cancel in finite characteristic.
inline poly symmetrized_generator(sampler &s, const semiring &r, unsigned a,
                                  unsigned n, const sample_config &cfg) {
    unsigned width = a * (1 + n);
    exponents base(width, 0);
    unsigned d = a == 0 ? 0u : s.below(cfg.max_degree + 1);
    for (unsigned k = 0; k < d; ++k) base[s.below(a)] += 1;
    value c = sample_value(s, r, cfg);
    std::vector<unsigned> slot(n);
    for (auto &v : slot) v = a == 0 ? 0u : s.below(a);
    poly acc{r, width};
    std::vector<unsigned> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    do {
        exponents e = base;
        for (unsigned b = 0; b < n; ++b) e[a * (1 + b) + slot[idx[b]]] += 1;
        acc.accumulate(e, c);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return acc;
}

} // namespace detail

// Sampled sequences are built term by term from symmetrized multilinear
// generators, so they pass the structural validator by construction and
// range over more of the hom-set than lifted base maps do. The base block
// of every monomial respects max-degree; each linear block contributes
// exactly one more degree. Symmetrization costs n! per term, so terms
// beyond order six are left zero.
inline faa_seq sample_faaseq(sampler &s, const semiring &r, unsigned dom,
                             unsigned cod, unsigned order,
                             const sample_config &cfg) {
    std::vector<poly_map> terms;
    terms.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        std::vector<poly> comps;
        comps.reserve(cod);
        for (unsigned j = 0; j < cod; ++j) {
            poly p{r, dom * (1 + n)};
            if (n <= 6) {
                unsigned gens = s.between(1, 2);
                for (unsigned g = 0; g < gens; ++g)
                    p = p + detail::symmetrized_generator(s, r, dom, n, cfg);
            }
            comps.push_back(std::move(p));
        }
        terms.push_back(poly_map{r, dom * (1 + n), cod, std::move(comps)});
    }
    return faa_seq{dom, cod, std::move(terms)};
}

inline delta_map sample_deltamap(sampler &s, const semiring &r, unsigned dom,
                                 unsigned cod, const sample_config &cfg) {
    return delta_map{sample_polymap(s, r, dom, cod, cfg),
                     sample_d_linear(s, r, dom, cod, cfg)};
}

// A category instance the generic battery can run against: how to sample a
// map, how to differentiate one (mutations override this), and how to
// render one into a counterexample.
template <class M>
struct law_instance {
    std::string name;
    typename map_ops<M>::context context;
    std::function<M(sampler &, unsigned, unsigned)> make;
    std::function<M(const M &)> differentiate;
    std::function<std::string(const M &)> show;

    law_instance(std::string id, typename map_ops<M>::context ctx)
        : name(std::move(id)), context(std::move(ctx)) {}
};

inline law_instance<poly_map> polycat_instance(const semiring &r,
                                               const sample_config &cfg) {
    law_instance<poly_map> inst{"polycat/" + r.tag(), r};
    inst.make = [r, cfg](sampler &s, unsigned dom, unsigned cod) {
        return sample_polymap(s, r, dom, cod, cfg);
    };
    inst.differentiate = [](const poly_map &f) { return diff(f); };
    inst.show = [](const poly_map &f) { return poly_map_text(f); };
    return inst;
}

inline law_instance<faa_seq> faa_instance(const semiring &r,
                                          const sample_config &cfg) {
    law_instance<faa_seq> inst{
        "faa-over-polycat/" + r.tag() + "/order" + std::to_string(cfg.truncation),
        seq_context<poly_map>{r, cfg.truncation}};
    unsigned order = cfg.truncation;
    inst.make = [r, cfg, order](sampler &s, unsigned dom, unsigned cod) {
        return sample_faaseq(s, r, dom, cod, order, cfg);
    };
    inst.differentiate = [](const faa_seq &f) { return faa_diff(f); };
    inst.show = [](const faa_seq &f) { return faa_text(f); };
    return inst;
}

inline law_instance<delta_map> delta_instance(const semiring &r,
                                              const sample_config &cfg) {
    law_instance<delta_map> inst{"delta/" + r.tag(), r};
    inst.make = [r, cfg](sampler &s, unsigned dom, unsigned cod) {
        return sample_deltamap(s, r, dom, cod, cfg);
    };
    inst.differentiate = [](const delta_map &f) { return delta_diff(f); };
    inst.show = [](const delta_map &f) { return delta_text(f); };
    return inst;
}

// Equality after truncating both sides to the shorter depth. Sequences lose
// one order per differentiation, so the two sides of an axiom often carry
// different truncations; everything they both still represent must agree.
template <class M>
bool law_equal(const M &a, const M &b) {
    using ops = map_ops<M>;
    unsigned k = std::min(ops::depth(a), ops::depth(b));
    return ops::equal(ops::truncate(a, k), ops::truncate(b, k));
}

namespace detail {

inline const semiring &scalar_ring(const semiring &c) { return c; }

template <class M>
const semiring &scalar_ring(const seq_context<M> &c) {
    return scalar_ring(c.base);
}

template <class M, class Body>
law_report run_law(const law_instance<M> &inst, const std::string &law_id,
                   const sample_config &cfg, Body &&body) {
    sampler s{cfg.seed, inst.name + "/" + law_id};
    law_report rep;
    rep.law_id = law_id;
    rep.instance = inst.name;
    for (unsigned i = 0; i < cfg.samples_per_law; ++i) {
        rep.samples_run = i + 1;
        if (auto cex = body(s)) {
            rep.passed = false;
            rep.counterexample = std::move(cex);
            break;
        }
    }
    return rep;
}

template <class M>
std::string two_sides(const law_instance<M> &inst, const M &lhs, const M &rhs) {
    return "lhs = " + inst.show(lhs) + "\nrhs = " + inst.show(rhs);
}

} // namespace detail

// The seven axioms of the differential combinator, checked on any instance
// exposing the trait operations. All projections, zero maps and pairings
// are built inside the instance itself, so the same code drives base maps,
// sequences and pairs.
template <class M>
std::vector<law_report> run_cd(const law_instance<M> &inst,
                               const sample_config &cfg) {
    using ops = map_ops<M>;
    const auto &ctx = inst.context;
    const semiring &k = detail::scalar_ring(ctx);
    const auto &D = inst.differentiate;

    std::vector<law_report> out;

    out.push_back(detail::run_law(inst, "CD.1", cfg, [&](sampler &s) {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        M f = inst.make(s, n, m), g = inst.make(s, n, m);
        value rv = sample_value(s, k, cfg), sv = sample_value(s, k, cfg);
        M lhs = D(ops::add(ops::scale(rv, f), ops::scale(sv, g)));
        M rhs = ops::add(ops::scale(rv, D(f)), ops::scale(sv, D(g)));
        if (law_equal(lhs, rhs)) return std::optional<std::string>{};
        return std::optional<std::string>{
            "f = " + inst.show(f) + "\ng = " + inst.show(g) + "\nr = " + rv.str() +
            ", s = " + sv.str() + "\n" + detail::two_sides(inst, lhs, rhs)};
    }));

    out.push_back(detail::run_law(inst, "CD.2", cfg, [&](sampler &s) {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        M f = inst.make(s, n, m);
        value rv = sample_value(s, k, cfg), sv = sample_value(s, k, cfg);
        shape s3{n, n, n};
        M p0 = ops::select(ctx, s3, {0});
        M p1 = ops::select(ctx, s3, {1});
        M p2 = ops::select(ctx, s3, {2});
        M df = D(f);
        M mix = ops::add(ops::scale(rv, p1), ops::scale(sv, p2));
        M lhs = ops::compose(df, ops::pair({p0, mix}));
        M rhs = ops::add(ops::scale(rv, ops::compose(df, ops::pair({p0, p1}))),
                         ops::scale(sv, ops::compose(df, ops::pair({p0, p2}))));
        if (!law_equal(lhs, rhs))
            return std::optional<std::string>{
                "f = " + inst.show(f) + "\nr = " + rv.str() + ", s = " + sv.str() +
                "\n" + detail::two_sides(inst, lhs, rhs)};
        M zl = ops::compose(df, ops::pair({ops::identity(ctx, n), ops::zero(ctx, n, n)}));
        M zr = ops::zero(ctx, n, m);
        if (!law_equal(zl, zr))
            return std::optional<std::string>{
                "f = " + inst.show(f) +
                "\nderivative at zero tangent: " + detail::two_sides(inst, zl, zr)};
        return std::optional<std::string>{};
    }));

    out.push_back(detail::run_law(inst, "CD.3", cfg, [&](sampler &s) {
        unsigned n = s.between(1, cfg.max_arity);
        M lhs = D(ops::identity(ctx, n));
        M rhs = ops::select(ctx, shape{n, n}, {1});
        if (!law_equal(lhs, rhs))
            return std::optional<std::string>{"identity at arity " +
                                              std::to_string(n) + "\n" +
                                              detail::two_sides(inst, lhs, rhs)};
        unsigned n0 = s.between(1, cfg.max_arity), n1 = s.between(1, cfg.max_arity);
        shape pr{n0, n1};
        for (std::size_t j = 0; j < 2; ++j) {
            M pj = ops::select(ctx, pr, {j});
            M lp = D(pj);
            M rp = ops::select(ctx, shape{n0, n1, n0, n1}, {2 + j});
            if (!law_equal(lp, rp))
                return std::optional<std::string>{
                    "projection " + std::to_string(j) + " of (" +
                    std::to_string(n0) + ", " + std::to_string(n1) + ")\n" +
                    detail::two_sides(inst, lp, rp)};
        }
        return std::optional<std::string>{};
    }));

    out.push_back(detail::run_law(inst, "CD.4", cfg, [&](sampler &s) {
        unsigned n = s.between(1, cfg.max_arity);
        unsigned m0 = s.between(1, cfg.max_arity), m1 = s.between(1, cfg.max_arity);
        M f0 = inst.make(s, n, m0), f1 = inst.make(s, n, m1);
        M lhs = D(ops::pair({f0, f1}));
        M rhs = ops::pair({D(f0), D(f1)});
        if (law_equal(lhs, rhs)) return std::optional<std::string>{};
        return std::optional<std::string>{"f0 = " + inst.show(f0) +
                                          "\nf1 = " + inst.show(f1) + "\n" +
                                          detail::two_sides(inst, lhs, rhs)};
    }));

    out.push_back(detail::run_law(inst, "CD.5", cfg, [&](sampler &s) {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        unsigned c = s.between(1, cfg.max_arity);
        M f = inst.make(s, n, m), g = inst.make(s, m, c);
        M lhs = D(ops::compose(g, f));
        M fbase = ops::compose(f, ops::select(ctx, shape{n, n}, {0}));
        M rhs = ops::compose(D(g), ops::pair({fbase, D(f)}));
        if (law_equal(lhs, rhs)) return std::optional<std::string>{};
        return std::optional<std::string>{"f = " + inst.show(f) +
                                          "\ng = " + inst.show(g) + "\n" +
                                          detail::two_sides(inst, lhs, rhs)};
    }));

    out.push_back(detail::run_law(inst, "CD.6", cfg, [&](sampler &s) {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        M f = inst.make(s, n, m);
        shape s3{n, n, n};
        M p0 = ops::select(ctx, s3, {0});
        M p1 = ops::select(ctx, s3, {1});
        M p2 = ops::select(ctx, s3, {2});
        M z = ops::zero(ctx, 3 * n, n);
        M lhs = ops::compose(D(D(f)), ops::pair({p0, p1, z, p2}));
        M rhs = ops::compose(D(f), ops::pair({p0, p2}));
        if (law_equal(lhs, rhs)) return std::optional<std::string>{};
        return std::optional<std::string>{"f = " + inst.show(f) + "\n" +
                                          detail::two_sides(inst, lhs, rhs)};
    }));

    out.push_back(detail::run_law(inst, "CD.7", cfg, [&](sampler &s) {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        M f = inst.make(s, n, m);
        shape s3{n, n, n};
        M p0 = ops::select(ctx, s3, {0});
        M p1 = ops::select(ctx, s3, {1});
        M p2 = ops::select(ctx, s3, {2});
        M z = ops::zero(ctx, 3 * n, n);
        M dd = D(D(f));
        M lhs = ops::compose(dd, ops::pair({p0, p1, p2, z}));
        M rhs = ops::compose(dd, ops::pair({p0, p2, p1, z}));
        if (law_equal(lhs, rhs)) return std::optional<std::string>{};
        return std::optional<std::string>{"f = " + inst.show(f) + "\n" +
                                          detail::two_sides(inst, lhs, rhs)};
    }));

    return out;
}

inline std::vector<law_report> check_cd(const std::string &instance_id,
                                        const semiring &r,
                                        const sample_config &cfg) {
    validate_config(cfg, r);
    if (instance_id == "polycat") return run_cd(polycat_instance(r, cfg), cfg);
    if (instance_id == "faa-over-polycat") return run_cd(faa_instance(r, cfg), cfg);
    if (instance_id == "delta") return run_cd(delta_instance(r, cfg), cfg);
    throw validation_error("unknown category instance '" + instance_id +
                           "'; expected polycat, faa-over-polycat or delta");
}

// Higher-order identities of the iterated derivative on polynomial maps.
// HD.5 compares the partition-sum expansion against a directly computed
// derivative of the composite; HD.7 is exhaustive over permutations up to
// order four.
inline std::vector<law_report> check_hd(const semiring &r, const sample_config &cfg,
                                        unsigned max_order = 3) {
    validate_config(cfg, r);
    if (max_order > 8) throw validation_error("max-order exceeds the partition cap");
    law_instance<poly_map> inst = polycat_instance(r, cfg);
    auto show = [](const poly_map &f) { return poly_map_text(f); };
    std::vector<law_report> out;

    out.push_back(detail::run_law(inst, "HD.1", cfg, [&](sampler &s) -> std::optional<std::string> {
        unsigned a = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        poly_map f = inst.make(s, a, m), g = inst.make(s, a, m);
        value rv = sample_value(s, r, cfg), sv = sample_value(s, r, cfg);
        poly_map mix = add(scale(rv, f), scale(sv, g));
        for (unsigned n = 0; n <= max_order; ++n) {
            poly_map lhs = partial_n(mix, n);
            poly_map rhs = add(scale(rv, partial_n(f, n)), scale(sv, partial_n(g, n)));
            if (!(lhs == rhs))
                return "order " + std::to_string(n) + "\nf = " + show(f) +
                       "\ng = " + show(g) + "\nlhs = " + show(lhs) +
                       "\nrhs = " + show(rhs);
        }
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "HD.2", cfg, [&](sampler &s) -> std::optional<std::string> {
        unsigned a = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        poly_map f = inst.make(s, a, m);
        value rv = sample_value(s, r, cfg), sv = sample_value(s, r, cfg);
        for (unsigned n = 1; n <= max_order; ++n) {
            poly_map pnf = partial_n(f, n);
            shape ps(n + 2, a);
            auto sel = [&](std::size_t i) { return select_factors(r, ps, {i}); };
            for (unsigned j = 1; j <= n; ++j) {
                std::vector<poly_map> mixed, fresh;
                std::vector<std::size_t> plain;
                for (unsigned i = 0; i <= n; ++i) {
                    plain.push_back(i);
                    mixed.push_back(i == j ? add(scale(rv, sel(j)), scale(sv, sel(n + 1)))
                                           : sel(i));
                    fresh.push_back(i == j ? sel(n + 1) : sel(i));
                }
                poly_map lhs = compose(pnf, pairing(mixed));
                poly_map rhs = add(scale(rv, compose(pnf, select_factors(r, ps, plain))),
                                   scale(sv, compose(pnf, pairing(fresh))));
                if (!(lhs == rhs))
                    return "order " + std::to_string(n) + ", slot " +
                           std::to_string(j) + "\nf = " + show(f) +
                           "\nlhs = " + show(lhs) + "\nrhs = " + show(rhs);
            }
        }
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "HD.3", cfg, [&](sampler &s) -> std::optional<std::string> {
        unsigned a = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        poly_map f = sample_d_linear(s, r, a, m, cfg);
        if (!(partial_n(f, 0) == f))
            return "order 0 on linear map\nf = " + show(f);
        poly_map expected = compose(f, projection(r, shape{a, a}, 1));
        if (!(partial_n(f, 1) == expected))
            return "order 1 on linear map\nf = " + show(f) +
                   "\nlhs = " + show(partial_n(f, 1)) + "\nrhs = " + show(expected);
        for (unsigned n = 2; n <= max_order; ++n)
            if (!partial_n(f, n).is_zero())
                return "order " + std::to_string(n) +
                       " on linear map should vanish\nf = " + show(f);
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "HD.4", cfg, [&](sampler &s) -> std::optional<std::string> {
        unsigned a = s.between(1, cfg.max_arity);
        unsigned m0 = s.between(1, cfg.max_arity), m1 = s.between(1, cfg.max_arity);
        poly_map f0 = inst.make(s, a, m0), f1 = inst.make(s, a, m1);
        for (unsigned n = 0; n <= max_order; ++n) {
            poly_map lhs = partial_n(pairing({f0, f1}), n);
            poly_map rhs = pairing({partial_n(f0, n), partial_n(f1, n)});
            if (!(lhs == rhs))
                return "order " + std::to_string(n) + "\nf0 = " + show(f0) +
                       "\nf1 = " + show(f1) + "\nlhs = " + show(lhs) +
                       "\nrhs = " + show(rhs);
        }
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "HD.5", cfg, [&](sampler &s) -> std::optional<std::string> {
        unsigned a = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        unsigned c = s.between(1, cfg.max_arity);
        poly_map f = inst.make(s, a, m), g = inst.make(s, m, c);
        for (unsigned n = 0; n <= max_order; ++n) {
            poly_map lhs = partial_n(compose(g, f), n);
            poly_map rhs = zero_map(r, a * (1 + n), c);
            for (const auto &p : enumerate_partitions(n)) {
                std::vector<poly_map> parts;
                parts.push_back(compose(f, select_factors(r, shape(1 + n, a), {0})));
                for (const auto &block : p.blocks())
                    parts.push_back(
                        compose(partial_n(f, static_cast<unsigned>(block.size())),
                                block_projection(r, a, n, block)));
                rhs = add(rhs, compose(partial_n(g, static_cast<unsigned>(p.block_count())),
                                       pairing(parts)));
            }
            if (!(lhs == rhs))
                return "order " + std::to_string(n) + "\nf = " + show(f) +
                       "\ng = " + show(g) + "\nlhs = " + show(lhs) +
                       "\nrhs = " + show(rhs);
        }
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "HD.6", cfg, [&](sampler &s) -> std::optional<std::string> {
        unsigned a = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        poly_map f = inst.make(s, a, m);
        for (unsigned n = 1; n <= max_order; ++n) {
            poly_map pnf = partial_n(f, n);
            for (unsigned j = 1; j <= n; ++j) {
                poly_map lhs = partial_in_slot(pnf, shape(1 + n, a), j);
                std::vector<std::size_t> keep;
                for (unsigned i = 0; i <= n; ++i)
                    keep.push_back(i == j ? n + 1 : i);
                poly_map rhs = compose(pnf, select_factors(r, shape(n + 2, a), keep));
                if (!(lhs == rhs))
                    return "order " + std::to_string(n) + ", slot " +
                           std::to_string(j) + "\nf = " + show(f) +
                           "\nlhs = " + show(lhs) + "\nrhs = " + show(rhs);
            }
        }
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "HD.7", cfg, [&](sampler &s) -> std::optional<std::string> {
        unsigned a = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        poly_map f = inst.make(s, a, m);
        for (unsigned n = 2; n <= std::min(max_order, 4u); ++n) {
            poly_map pnf = partial_n(f, n);
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{1});
            do {
                std::vector<std::size_t> factors{0};
                factors.insert(factors.end(), perm.begin(), perm.end());
                poly_map lhs = compose(pnf, select_factors(r, shape(1 + n, a), factors));
                if (!(lhs == pnf)) {
                    std::string ptxt;
                    for (std::size_t q : perm) ptxt += " " + std::to_string(q);
                    return "order " + std::to_string(n) + ", permutation" + ptxt +
                           "\nf = " + show(f) + "\nlhs = " + show(lhs) +
                           "\nrhs = " + show(pnf);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "HD.8", cfg, [&](sampler &s) -> std::optional<std::string> {
        unsigned a = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        poly_map f = inst.make(s, a, m);
        poly_map df = diff(f);
        for (unsigned n = 0; n <= max_order; ++n) {
            poly_map pnf = partial_n(f, n);
            poly_map lhs = diff(pnf);
            shape doubled(2 * (1 + n), a);
            std::vector<std::size_t> weave;
            for (unsigned i = 0; i <= n; ++i) {
                weave.push_back(i);
                weave.push_back(n + 1 + i);
            }
            poly_map interchanged =
                compose(partial_n(df, n), select_factors(r, doubled, weave));
            if (!(lhs == interchanged))
                return "order " + std::to_string(n) +
                       ", derivative-of-derivative form\nf = " + show(f) +
                       "\nlhs = " + show(lhs) + "\nrhs = " + show(interchanged);
            std::vector<std::size_t> lead;
            for (unsigned i = 0; i <= n + 1; ++i) lead.push_back(i);
            poly_map expanded =
                compose(partial_n(f, n + 1), select_factors(r, doubled, lead));
            for (unsigned j = 1; j <= n; ++j) {
                std::vector<std::size_t> keep;
                for (unsigned i = 0; i <= n; ++i)
                    keep.push_back(i == j ? n + 1 + j : i);
                expanded = add(expanded, compose(pnf, select_factors(r, doubled, keep)));
            }
            if (!(lhs == expanded))
                return "order " + std::to_string(n) + ", expansion form\nf = " +
                       show(f) + "\nlhs = " + show(lhs) + "\nrhs = " + show(expanded);
        }
        return std::nullopt;
    }));

    return out;
}

namespace detail {

// Sequence with the given base term and zero higher terms.
inline faa_seq constant_seq(const poly_map &p, unsigned order) {
    std::vector<poly_map> terms;
    terms.reserve(order + 1);
    terms.push_back(p);
    for (unsigned n = 1; n <= order; ++n)
        terms.push_back(zero_map(p.ring(), p.dom() * (1 + n), p.cod()));
    return faa_seq{p.dom(), p.cod(), std::move(terms)};
}

// Nonzero multilinear symmetric witness: the product of the first variable
// of every linear block, which block permutations fix pointwise. Its unit
// coefficient survives every semiring.
inline poly_map multilinear_witness(const semiring &r, unsigned a, unsigned n) {
    exponents e(a * (1 + n), 0);
    for (unsigned b = 1; b <= n; ++b) e[a * b] += 1;
    poly p{r, a * (1 + n)};
    p.accumulate(e, one(r));
    return poly_map{r, a * (1 + n), 1, {std::move(p)}};
}

inline distance dist_max(const distance &x, const distance &y) {
    return x < y ? y : x;
}

} // namespace detail

// Cofreeness battery over sequences: the constant unit behaves as the
// identity of the constant subcategory, homogeneous embeddings extract
// correctly through iterated derivatives, decomposition into homogeneous
// layers is a section of summation, and the term-agreement distance is a
// genuine ultrametric with the expected interaction with differentiation.
inline std::vector<law_report> check_cofree(const semiring &r,
                                            const sample_config &cfg) {
    validate_config(cfg, r);
    unsigned T = cfg.truncation;
    law_instance<faa_seq> inst = faa_instance(r, cfg);
    auto unit_at = [&](unsigned n) { return constant_unit<poly_map>(r, n, T); };
    std::vector<law_report> out;

    out.push_back(detail::run_law(inst, "COF.unit-constant", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity);
        faa_seq sig = unit_at(n);
        if (!is_d_constant_seq(sig))
            return "constant unit at arity " + std::to_string(n) +
                   " is not a derivative constant";
        if (!(faa_compose(sig, sig) == sig))
            return "constant unit at arity " + std::to_string(n) +
                   " is not idempotent";
        if (!(functor_E(sig) == identity(r, n)))
            return "constant unit at arity " + std::to_string(n) +
                   " does not project to the identity";
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "COF.vanishes", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq u = detail::constant_seq(sample_polymap(s, r, n, m, cfg), T);
        if (!(faa_compose(unit_at(m), u) == u))
            return "unit after a constant changed it\nu = " + faa_text(u);
        if (!(faa_compose(u, unit_at(n)) == u))
            return "constant after the unit changed it\nu = " + faa_text(u);
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "COF.unit-unique", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq u = detail::constant_seq(sample_polymap(s, r, n, m, cfg), T);
        faa_seq v = detail::constant_seq(sample_polymap(s, r, n, m, cfg), T);
        bool images = functor_E(u) == functor_E(v);
        if (images != (u == v))
            return "parallel constants with matching projections differ\nu = " +
                   faa_text(u) + "\nv = " + faa_text(v);
        faa_seq w = detail::constant_seq(identity(r, n), T);
        if (!(w == unit_at(n)))
            return "a constant projecting to the identity is not the unit";
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "COF.point", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq v = inst.make(s, n, m);
        faa_seq lhs = faa_compose(unit_at(m), v);
        faa_seq rhs = detail::constant_seq(v.term(0), T);
        if (lhs == rhs) return std::nullopt;
        return "unit composed with a sequence kept higher terms\nv = " + faa_text(v) +
               "\nlhs = " + faa_text(lhs);
    }));

    out.push_back(detail::run_law(inst, "COF.homogeneous", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned a = s.between(1, cfg.max_arity);
        unsigned nh = s.below(std::min(T, 3u) + 1);
        poly_map h = detail::multilinear_witness(r, a, nh);
        faa_seq u = homogeneous_embed(h, nh, T);
        if (!(u.term(nh) == h))
            return "embedding does not carry the generator at layer " +
                   std::to_string(nh);
        for (unsigned m = 0; m <= T; ++m) {
            poly_map got = functor_E(cartdiff::partial_n<faa_seq>(u, m));
            poly_map want = m == nh ? h : zero_map(r, a * (1 + m), h.cod());
            if (!(got == want))
                return "extraction at order " + std::to_string(m) +
                       " from a layer-" + std::to_string(nh) +
                       " embedding\nlhs = " + poly_map_text(got) +
                       "\nrhs = " + poly_map_text(want);
        }
        std::vector<poly_map> terms;
        for (unsigned n = 0; n <= T; ++n)
            terms.push_back(n == nh ? h : zero_map(r, a * (1 + n), h.cod()));
        if (!(faa_seq{a, h.cod(), std::move(terms)} == u))
            return "two homogeneous sequences with the same layer differ";
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "COF.decompose", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq v = inst.make(s, n, m);
        std::vector<faa_seq> layers = decompose(v);
        faa_seq sum = layers.front();
        for (std::size_t i = 1; i < layers.size(); ++i)
            sum = faa_add(sum, layers[i]);
        if (sum == v) return std::nullopt;
        return "layer sum does not rebuild the sequence\nv = " + faa_text(v);
    }));

    out.push_back(detail::run_law(inst, "UM.symmetry", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq f = inst.make(s, n, m), g = inst.make(s, n, m);
        if (distance_seq(f, g) == distance_seq(g, f)) return std::nullopt;
        return "d(f, g) = " + distance_seq(f, g).str() +
               " but d(g, f) = " + distance_seq(g, f).str();
    }));

    out.push_back(detail::run_law(inst, "UM.strong-triangle", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq f = inst.make(s, n, m), g = inst.make(s, n, m), h = inst.make(s, n, m);
        distance fh = distance_seq(f, h);
        distance bound = detail::dist_max(distance_seq(f, g), distance_seq(g, h));
        if (fh <= bound) return std::nullopt;
        return "d(f, h) = " + fh.str() + " exceeds max(d(f, g), d(g, h)) = " +
               bound.str();
    }));

    out.push_back(detail::run_law(inst, "UM.nonexpansive-compose", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        unsigned k = s.between(1, cfg.max_arity), p = s.between(1, cfg.max_arity);
        faa_seq f = inst.make(s, n, m), g = inst.make(s, n, m);
        faa_seq u = inst.make(s, m, k), w = inst.make(s, p, n);
        distance base = distance_seq(f, g);
        distance left = distance_seq(faa_compose(u, f), faa_compose(u, g));
        if (!(left <= base))
            return "post-composition expanded the distance: " + left.str() +
                   " > " + base.str();
        distance right = distance_seq(faa_compose(f, w), faa_compose(g, w));
        if (!(right <= base))
            return "pre-composition expanded the distance: " + right.str() +
                   " > " + base.str();
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "UM.pairing-isometry", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity);
        unsigned m0 = s.between(1, cfg.max_arity), m1 = s.between(1, cfg.max_arity);
        faa_seq f0 = inst.make(s, n, m0), g0 = inst.make(s, n, m0);
        faa_seq f1 = inst.make(s, n, m1), g1 = inst.make(s, n, m1);
        distance lhs = distance_seq(faa_pair<poly_map>({f0, f1}),
                                    faa_pair<poly_map>({g0, g1}));
        distance rhs = detail::dist_max(distance_seq(f0, g0), distance_seq(f1, g1));
        if (lhs == rhs) return std::nullopt;
        return "d on the pairing is " + lhs.str() +
               " but the componentwise maximum is " + rhs.str();
    }));

    out.push_back(detail::run_law(inst, "UM.derivative-shift", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq f = inst.make(s, n, m);
        unsigned nh = s.below(T);
        poly_map h = detail::multilinear_witness(r, n, nh + 1);
        faa_seq bump = homogeneous_embed(h, nh + 1, T);
        if (m != 1) {
            std::vector<faa_seq> cols(m, bump);
            bump = faa_pair(cols);
        }
        faa_seq g = faa_add(f, bump);
        distance before = distance_seq(f, g);
        if (!(before == distance::exact(nh + 1)))
            return "perturbation at layer " + std::to_string(nh + 1) +
                   " produced distance " + before.str();
        distance after = distance_seq(faa_diff(f), faa_diff(g));
        if (!(after == distance::exact(nh)))
            return "derivative moved a layer-" + std::to_string(nh + 1) +
                   " disagreement to " + after.str();
        faa_seq f2 = inst.make(s, n, m), g2 = inst.make(s, n, m);
        distance base = distance_seq(f2, g2);
        if (base.is_exact() && base.index() >= 1) {
            distance shifted = distance_seq(faa_diff(f2), faa_diff(g2));
            if (!(shifted <= distance::exact(base.index() - 1)))
                return "derivative shifted " + base.str() + " past " + shifted.str();
        }
        return std::nullopt;
    }));

    out.push_back(detail::run_law(inst, "UM.cauchy", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq v = inst.make(s, n, m);
        std::vector<faa_seq> layers = decompose(v);
        std::vector<faa_seq> chain;
        chain.push_back(layers.front());
        for (std::size_t i = 1; i < layers.size(); ++i)
            chain.push_back(faa_add(chain.back(), layers[i]));
        std::vector<std::size_t> got = cauchy_stabilization(chain);
        for (unsigned k = 0; k <= v.order(); ++k) {
            std::size_t want = v.term(k).is_zero() ? 0u : k;
            if (got[k] != want)
                return "term " + std::to_string(k) + " stabilizes at " +
                       std::to_string(got[k]) + ", expected " +
                       std::to_string(want) + "\nv = " + faa_text(v);
        }
        return std::nullopt;
    }));

    return out;
}

// Monad-style laws of the nesting operators: flattening after lifting is
// the identity (in both the outer and the termwise direction), the two ways
// of flattening a triply nested tower agree, and first-term extraction
// commutes with flattening. Nested towers are costly to build, so the
// square caps its sample count.
inline std::vector<law_report> check_algebra(const semiring &r,
                                             const sample_config &cfg) {
    validate_config(cfg, r);
    unsigned T = cfg.truncation;
    law_instance<faa_seq> inst = faa_instance(r, cfg);
    std::vector<law_report> out;

    out.push_back(detail::run_law(inst, "ALG.unit", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq u = inst.make(s, n, m);
        faa_seq flat = monad_mult(lift<faa_seq>(u, u.order()));
        if (flat == u) return std::nullopt;
        return "flattening the derivative tower of a sequence changed it\nu = " +
               faa_text(u) + "\ngot = " + faa_text(flat);
    }));

    out.push_back(detail::run_law(inst, "ALG.unit-termwise", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq u = inst.make(s, n, m);
        auto nested = apply_termwise(
            u, [T](const poly_map &p) { return lift(p, T); });
        faa_seq flat = monad_mult(nested);
        if (flat == u) return std::nullopt;
        return "flattening termwise lifts changed the sequence\nu = " + faa_text(u) +
               "\ngot = " + faa_text(flat);
    }));

    {
        sample_config square_cfg = cfg;
        square_cfg.samples_per_law = std::min(cfg.samples_per_law, 20u);
        square_cfg.max_degree = std::min(cfg.max_degree, 2u);
        unsigned K = std::min(T, 3u);
        out.push_back(detail::run_law(inst, "ALG.square", square_cfg,
                                      [&, K](sampler &s) -> std::optional<std::string> {
            unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
            faa_seq u = sample_faaseq(s, r, n, m, K, square_cfg);
            auto level2 = lift<faa_seq>(u, K);
            if (s.below(2) == 0)
                level2 = map_ops<basic_faa_seq<faa_seq>>::add(
                    level2, lift<faa_seq>(faa_scale(sample_value(s, r, square_cfg), u), K));
            auto level3 = lift<basic_faa_seq<faa_seq>>(level2, K);
            faa_seq path1 = monad_mult(monad_mult(level3));
            faa_seq path2 = monad_mult(apply_termwise(
                level3,
                [](const basic_faa_seq<faa_seq> &x) { return monad_mult(x); }));
            if (path1 == path2) return std::nullopt;
            return "the two flattenings of a triple tower differ\nu = " + faa_text(u);
        }));
    }

    out.push_back(detail::run_law(inst, "ALG.extract", cfg,
                                  [&](sampler &s) -> std::optional<std::string> {
        unsigned n = s.between(1, cfg.max_arity), m = s.between(1, cfg.max_arity);
        faa_seq u = inst.make(s, n, m);
        auto nested = lift<faa_seq>(u, u.order());
        poly_map via_mult = functor_E(monad_mult(nested));
        poly_map via_outer = functor_E(functor_E(nested));
        if (via_mult == via_outer) return std::nullopt;
        return "first-term extraction does not commute with flattening\nu = " +
               faa_text(u);
    }));

    return out;
}

inline std::vector<law_report> check_all(const semiring &r,
                                         const sample_config &cfg) {
    std::vector<law_report> out;
    for (const char *id : {"polycat", "faa-over-polycat", "delta"})
        for (auto &rep : check_cd(id, r, cfg)) out.push_back(std::move(rep));
    for (auto &rep : check_hd(r, cfg)) out.push_back(std::move(rep));
    for (auto &rep : check_cofree(r, cfg)) out.push_back(std::move(rep));
    for (auto &rep : check_algebra(r, cfg)) out.push_back(std::move(rep));
    sort_reports(out);
    return out;
}

// --- mutation sensitivity -------------------------------------------------

struct mutation_outcome {
    std::string mutation;
    bool caught = false;
    std::string caught_by;
    std::optional<std::string> counterexample;
};

namespace detail {

// Derivative keeping only the first column of the Jacobian.
inline poly_map mutant_partial_first_only(const poly_map &f) {
    const semiring &r = f.ring();
    unsigned n = f.dom();
    std::vector<poly> comps;
    comps.reserve(f.cod());
    for (unsigned j = 0; j < f.cod(); ++j) {
        poly q{r, 2 * n};
        if (n > 0)
            q = f.component(j).partial(0).embedded(2 * n, 0) *
                poly::variable(r, 2 * n, n);
        comps.push_back(std::move(q));
    }
    return poly_map{r, 2 * n, f.cod(), std::move(comps)};
}

// Derivative with the base and tangent halves of the domain exchanged.
inline poly_map mutant_swap_halves(const poly_map &f) {
    poly_map d = diff(f);
    unsigned n = f.dom();
    std::vector<unsigned> perm(2 * n);
    for (unsigned i = 0; i < n; ++i) {
        perm[i] = n + i;
        perm[n + i] = i;
    }
    std::vector<poly> comps;
    comps.reserve(d.cod());
    for (unsigned j = 0; j < d.cod(); ++j) comps.push_back(d.component(j).renamed(perm));
    return poly_map{f.ring(), 2 * n, f.cod(), std::move(comps)};
}

// Derivative that forgets the exponent factor: x^k differentiates to
// x^(k-1) with an unchanged coefficient.
inline poly_map mutant_unit_exponent(const poly_map &f) {
    const semiring &r = f.ring();
    unsigned n = f.dom();
    std::vector<poly> comps;
    comps.reserve(f.cod());
    for (unsigned j = 0; j < f.cod(); ++j) {
        poly q{r, 2 * n};
        for (const auto &[e, c] : f.component(j).terms()) {
            for (unsigned i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                exponents e2(2 * n, 0);
                for (unsigned v = 0; v < n; ++v) e2[v] = e[v];
                e2[i] -= 1;
                e2[n + i] += 1;
                q.accumulate(e2, c);
            }
        }
        comps.push_back(std::move(q));
    }
    return poly_map{r, 2 * n, f.cod(), std::move(comps)};
}

// Derivative evaluated with the base point forced to zero.
inline poly_map mutant_base_zero(const poly_map &f) {
    const semiring &r = f.ring();
    unsigned n = f.dom();
    return compose(diff(f), pairing({zero_map(r, 2 * n, n),
                                     select_factors(r, shape{n, n}, {1})}));
}

// Sequence derivative with a corrupted term recursion: drop_lead omits the
// leading higher-term part, shift_slot feeds the tangent of the previous
// block into the linear sum.
inline faa_seq mutant_tower_diff(const faa_seq &f, bool drop_lead,
                                 bool shift_slot) {
    if (f.order() < 1)
        throw validation_error("sequence derivative needs order at least 1");
    const semiring &r = f.term(0).ring();
    unsigned a = f.dom();
    unsigned order = f.order() - 1;
    std::vector<poly_map> terms;
    terms.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        shape s(2 * (1 + n), a);
        poly_map acc = zero_map(r, 2 * (1 + n) * a, f.cod());
        if (!drop_lead) {
            std::vector<std::size_t> main;
            for (unsigned i = 0; i <= n; ++i) main.push_back(2 * i);
            main.push_back(1);
            acc = add(acc, compose(f.term(n + 1), select_factors(r, s, main)));
        }
        for (unsigned j = 1; j <= n; ++j) {
            std::vector<std::size_t> sel;
            for (unsigned i = 0; i <= n; ++i)
                sel.push_back(i == j ? (shift_slot ? 2 * i - 1 : 2 * i + 1) : 2 * i);
            acc = add(acc, compose(f.term(n), select_factors(r, s, sel)));
        }
        terms.push_back(std::move(acc));
    }
    return faa_seq{2 * a, f.cod(), std::move(terms)};
}

// Pair derivative that reuses the nonlinear component instead of the
// linear one in the first slot.
inline delta_map mutant_pair_first(const delta_map &f) {
    const semiring &r = f.ring();
    poly_map p1 = projection(r, shape{f.dom(), f.dom()}, 1);
    return delta_map{compose(f.first(), p1), compose(f.second(), p1)};
}

} // namespace detail

inline std::vector<std::string> mutation_ids() {
    return {"partial-first-only", "swap-base-tangent", "unit-exponent-coefficient",
            "base-point-zero",    "tower-shift-slot",  "tower-drop-lead",
            "pair-first-component"};
}

// Runs the full seven-law battery against one corrupted combinator and
// reports the first law that notices. A mutation nobody notices is a hole
// in the battery, which the suite-level meta-check treats as a failure.
inline mutation_outcome run_mutation(const std::string &id, const semiring &r,
                                     const sample_config &cfg) {
    validate_config(cfg, r);
    std::vector<law_report> reports;
    if (id == "partial-first-only" || id == "swap-base-tangent" ||
        id == "unit-exponent-coefficient" || id == "base-point-zero") {
        law_instance<poly_map> inst = polycat_instance(r, cfg);
        inst.name += "/mutant:" + id;
        if (id == "partial-first-only")
            inst.differentiate = detail::mutant_partial_first_only;
        else if (id == "swap-base-tangent")
            inst.differentiate = detail::mutant_swap_halves;
        else if (id == "unit-exponent-coefficient")
            inst.differentiate = detail::mutant_unit_exponent;
        else
            inst.differentiate = detail::mutant_base_zero;
        reports = run_cd(inst, cfg);
    } else if (id == "tower-shift-slot" || id == "tower-drop-lead") {
        law_instance<faa_seq> inst = faa_instance(r, cfg);
        inst.name += "/mutant:" + id;
        bool drop = id == "tower-drop-lead";
        inst.differentiate = [drop](const faa_seq &f) {
            return detail::mutant_tower_diff(f, drop, !drop);
        };
        reports = run_cd(inst, cfg);
    } else if (id == "pair-first-component") {
        law_instance<delta_map> inst = delta_instance(r, cfg);
        inst.name += "/mutant:" + id;
        inst.differentiate = detail::mutant_pair_first;
        reports = run_cd(inst, cfg);
    } else {
        throw validation_error("unknown mutation '" + id + "'");
    }
    mutation_outcome out;
    out.mutation = id;
    for (const auto &rep : reports) {
        if (!rep.passed) {
            out.caught = true;
            out.caught_by = rep.law_id;
            out.counterexample = rep.counterexample;
            break;
        }
    }
    return out;
}

inline std::vector<mutation_outcome> check_mutations(const semiring &r,
                                                     const sample_config &cfg) {
    std::vector<mutation_outcome> out;
    for (const auto &id : mutation_ids()) out.push_back(run_mutation(id, r, cfg));
    return out;
}

} // namespace cartdiff
