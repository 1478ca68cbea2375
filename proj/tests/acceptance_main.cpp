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

// The release gate: ten go/no-go checks, one line each. Every check either
// reproduces a value frozen from an independent derivation or runs a law
// battery to completion. Exits nonzero if anything fails or overruns its
// time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cartdiff/cartdiff.hpp"

namespace {

using namespace cartdiff;

struct criterion_result {
    bool ok = true;
    std::ostringstream why;
};

#define REQUIRE(cond)                                                          \
    do {                                                                       \
        if (!(cond)) {                                                         \
            res.ok = false;                                                    \
            res.why << " [" << #cond << "]";                                   \
            return res;                                                        \
        }                                                                      \
    } while (0)

// Bell numbers by the binomial recurrence, independent of the library's
// Bell-triangle and of the enumerator under test.
std::vector<bigint> bell_oracle(unsigned upto) {
    std::vector<std::vector<bigint>> choose(upto + 1);
    for (unsigned n = 0; n <= upto; ++n) {
        choose[n].assign(n + 1, 1);
        for (unsigned k = 1; k < n; ++k)
            choose[n][k] = choose[n - 1][k - 1] + choose[n - 1][k];
    }
    std::vector<bigint> b{1};
    for (unsigned n = 0; n < upto; ++n) {
        bigint next = 0;
        for (unsigned k = 0; k <= n; ++k) next += choose[n][k] * b[k];
        b.push_back(next);
    }
    return b;
}

criterion_result square_table() {
    criterion_result res;
    semiring r = semiring::integers();
    poly_map f = parse_poly_map("1 -> 1 : [x0^2]", r);
    REQUIRE(poly_map_text(total_n(f, 0)) == "1 -> 1 : [x0^2]");
    REQUIRE(poly_map_text(total_n(f, 1)) == "2 -> 1 : [2*x0*x1]");
    REQUIRE(poly_map_text(total_n(f, 2)) == "4 -> 1 : [2*x1*x2 + 2*x0*x3]");
    REQUIRE(poly_map_text(total_n(f, 3)) ==
            "8 -> 1 : [2*x3*x4 + 2*x2*x5 + 2*x1*x6 + 2*x0*x7]");
    REQUIRE(poly_map_text(partial_n(f, 0)) == "1 -> 1 : [x0^2]");
    REQUIRE(poly_map_text(partial_n(f, 1)) == "2 -> 1 : [2*x0*x1]");
    REQUIRE(poly_map_text(partial_n(f, 2)) == "3 -> 1 : [2*x1*x2]");
    REQUIRE(poly_map_text(partial_n(f, 3)) == "4 -> 1 : [0]");
    return res;
}

criterion_result tower_functoriality() {
    criterion_result res;
    semiring r = semiring::integers();
    sample_config cfg;
    sampler s(13, "acceptance/functoriality");
    for (unsigned trial = 0; trial < 50; ++trial) {
        unsigned a = s.between(1, 2);
        unsigned b = s.between(1, 2);
        unsigned c = s.between(1, 2);
        poly_map f = sample_polymap(s, r, a, b, cfg);
        poly_map g = sample_polymap(s, r, b, c, cfg);
        if (faa_compose(lift(g, 4), lift(f, 4)) != lift(compose(g, f), 4)) {
            res.ok = false;
            res.why << " [trial " << trial << ": " << poly_map_text(f) << " ; "
                    << poly_map_text(g) << "]";
            return res;
        }
    }
    return res;
}

criterion_result tower_derivative() {
    criterion_result res;
    semiring r = semiring::integers();
    sample_config cfg;
    sampler s(13, "acceptance/functoriality");
    for (unsigned trial = 0; trial < 50; ++trial) {
        unsigned a = s.between(1, 2);
        unsigned b = s.between(1, 2);
        unsigned c = s.between(1, 2);
        poly_map f = sample_polymap(s, r, a, b, cfg);
        sample_polymap(s, r, b, c, cfg);
        if (faa_diff(lift(f, 4)) != lift(diff(f), 3)) {
            res.ok = false;
            res.why << " [trial " << trial << ": " << poly_map_text(f) << "]";
            return res;
        }
    }
    return res;
}

bool suite_passes(const std::vector<law_report> &reports, criterion_result &res) {
    for (const auto &rep : reports) {
        if (!rep.passed) {
            res.ok = false;
            res.why << " [" << rep.law_id << " on " << rep.instance;
            if (rep.counterexample) res.why << ": " << *rep.counterexample;
            res.why << "]";
            return false;
        }
    }
    return true;
}

criterion_result first_order_suite() {
    criterion_result res;
    sample_config cfg;
    cfg.seed = 7;
    semiring z = semiring::integers();
    if (!suite_passes(check_cd("polycat", z, cfg), res)) return res;
    if (!suite_passes(check_cd("polycat", semiring::mod(2), cfg), res)) return res;
    if (!suite_passes(check_cd("faa-over-polycat", z, cfg), res)) return res;
    if (!suite_passes(check_cd("delta", z, cfg), res)) return res;
    auto first = check_mutations(z, cfg);
    auto second = check_mutations(z, cfg);
    REQUIRE(first.size() == 7);
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (!first[i].caught || !first[i].counterexample) {
            res.ok = false;
            res.why << " [mutation " << first[i].mutation << " not caught]";
            return res;
        }
        if (first[i].caught_by != second[i].caught_by ||
            first[i].counterexample != second[i].counterexample) {
            res.ok = false;
            res.why << " [mutation " << first[i].mutation << " not replayable]";
            return res;
        }
    }
    return res;
}

criterion_result higher_order_suite() {
    criterion_result res;
    sample_config cfg;
    cfg.seed = 7;
    auto reports = check_hd(semiring::integers(), cfg, 3);
    suite_passes(reports, res);
    bool saw_symmetry = false;
    for (const auto &rep : reports) saw_symmetry |= rep.law_id == "HD.7";
    REQUIRE(saw_symmetry);
    return res;
}

criterion_result cofreeness_suite() {
    criterion_result res;
    sample_config cfg;
    cfg.seed = 7;
    auto reports = check_cofree(semiring::integers(), cfg);
    suite_passes(reports, res);
    unsigned metric_laws = 0;
    for (const auto &rep : reports) metric_laws += rep.law_id.rfind("UM.", 0) == 0;
    REQUIRE(metric_laws >= 5);
    return res;
}

criterion_result algebra_suite() {
    criterion_result res;
    sample_config cfg;
    cfg.seed = 7;
    cfg.truncation = 3;
    cfg.samples_per_law = 20;
    cfg.max_degree = 2;
    suite_passes(check_algebra(semiring::integers(), cfg), res);
    return res;
}

criterion_result partition_counts() {
    criterion_result res;
    auto oracle = bell_oracle(8);
    const long long frozen[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (unsigned n = 0; n <= 8; ++n) {
        auto parts = enumerate_partitions(n);
        REQUIRE(bigint(parts.size()) == oracle[n]);
        REQUIRE(parts.size() == static_cast<std::size_t>(frozen[n]));
        std::vector<std::string> seen;
        for (const auto &p : parts) {
            REQUIRE(set_partition{p.blocks()}.str() == p.str());
            seen.push_back(p.str());
        }
        std::sort(seen.begin(), seen.end());
        REQUIRE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
    return res;
}

criterion_result characteristic_two() {
    criterion_result res;
    semiring r2 = semiring::mod(2);
    poly_map sq = parse_poly_map("1 -> 1 : [x0^2]", r2);
    REQUIRE(is_d_constant(sq));
    faa_seq t = lift(sq, 3);
    REQUIRE(is_d_constant_seq(t));
    std::vector<poly_map> expect_terms{sq, zero_map(r2, 2, 1), zero_map(r2, 3, 1),
                                       zero_map(r2, 4, 1)};
    REQUIRE(t == (faa_seq{1, 1, expect_terms}));
    return res;
}

std::string run_cli(const std::string &args, int &status) {
    std::string cmd = std::string(CARTDIFF_BIN_PATH) + " " + args;
    FILE *p = popen(cmd.c_str(), "r");
    std::string out;
    if (!p) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    status = pclose(p);
    return out;
}

criterion_result cli_determinism() {
    criterion_result res;
    int s1 = -1, s2 = -1;
    std::string a = run_cli("check all --seed 7 --format json", s1);
    std::string b = run_cli("check all --seed 7 --format json", s2);
    REQUIRE(s1 == 0);
    REQUIRE(s2 == 0);
    REQUIRE(!a.empty());
    REQUIRE(a == b);
    return res;
}

struct criterion {
    const char *label;
    std::function<criterion_result()> body;
    long budget_ms;
};

} // namespace

int main() {
    std::vector<criterion> criteria{
        {"x^2 derivative table matches the worked example", square_table, 1000},
        {"tower composition agrees with lifting composites, 50 pairs",
         tower_functoriality, 30000},
        {"tower derivative agrees with lifting derivatives, 50 pairs",
         tower_derivative, 10000},
        {"first-order laws on 100 samples per instance, 7 mutations caught",
         first_order_suite, 0},
        {"higher-order laws up to order 3", higher_order_suite, 0},
        {"cofreeness and ultrametric batteries", cofreeness_suite, 0},
        {"monad unit and multiplication square, 20 nested samples",
         algebra_suite, 60000},
        {"partition counts 0..8 match the recursive oracle", partition_counts, 0},
        {"characteristic 2: x^2 is a differential constant", characteristic_two, 0},
        {"check all --seed 7 is byte-identical across runs", cli_determinism, 0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        criterion_result res;
        try {
            res = criteria[i].body();
        } catch (const std::exception &e) {
            res.ok = false;
            res.why << " [exception: " << e.what() << "]";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (criteria[i].budget_ms > 0 && ms > criteria[i].budget_ms) {
            res.ok = false;
            res.why << " [over budget: " << ms << " ms > " << criteria[i].budget_ms
                    << " ms]";
        }
        failures += res.ok ? 0 : 1;
        std::cout << "criterion " << (i + 1) << ": " << (res.ok ? "PASS" : "FAIL")
                  << " (" << ms << " ms) " << criteria[i].label << res.why.str()
                  << "\n";
    }
    if (failures) {
        std::cout << failures << " of " << criteria.size() << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
