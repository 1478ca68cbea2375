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

// Command line front end. Inputs come from --in files first, then inline
// positional expressions; anything whose first nonspace character is '{'
// is treated as JSON, everything else as map text. Exit status: 0 on
// success, 1 when a law check fails, 2 on parse errors, 3 on validation
// errors.

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cartdiff/cartdiff.hpp"

namespace {

using namespace cartdiff;

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string &s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

nlohmann::json parse_json_input(const std::string &src) {
    try {
        return nlohmann::json::parse(src);
    } catch (const nlohmann::json::parse_error &e) {
        throw parse_error(e.what(), e.byte, "json");
    }
}

poly_map read_poly(const std::string &src, const semiring &r) {
    if (looks_like_json(src)) return poly_map_from_json(parse_json_input(src), r);
    return parse_poly_map(src, r);
}

faa_seq read_faa(const std::string &src, const semiring &r, bool validate) {
    if (!looks_like_json(src))
        throw parse_error("sequence inputs must be JSON objects", 0,
                          src.substr(0, std::min<std::size_t>(src.size(), 16)));
    return faa_from_json(parse_json_input(src), r, validate);
}

struct common_args {
    std::string ring_tag = "int";
    std::string format = "text";
    unsigned order = 1;
    unsigned truncation = 4;
    std::uint64_t seed = 0;
    std::vector<std::string> files;
    std::vector<std::string> exprs;

    semiring ring() const {
        auto r = semiring::parse_tag(ring_tag);
        if (!r)
            throw validation_error("unknown semiring tag '" + ring_tag +
                                   "'; expected nat, int, rat or modp:<p>");
        return *r;
    }

    std::vector<std::string> inputs() const {
        std::vector<std::string> all;
        for (const auto &f : files) all.push_back(slurp(f));
        for (const auto &e : exprs) all.push_back(e);
        return all;
    }

    std::string one_input() const {
        auto all = inputs();
        if (all.size() != 1)
            throw validation_error("expected exactly one input, got " +
                                   std::to_string(all.size()));
        return all.front();
    }

    std::pair<std::string, std::string> two_inputs() const {
        auto all = inputs();
        if (all.size() != 2)
            throw validation_error("expected exactly two inputs, got " +
                                   std::to_string(all.size()));
        return {all[0], all[1]};
    }
};

void add_io_options(CLI::App *sub, common_args &a) {
    sub->add_option("--ring", a.ring_tag, "semiring tag: nat, int, rat, modp:<p>");
    sub->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--in", a.files, "read an input from a file (repeatable)");
    sub->add_option("exprs", a.exprs, "inline input expressions");
}

void print_poly(const poly_map &f, const common_args &a) {
    if (a.format == "json")
        std::cout << poly_map_json(f).dump(2) << "\n";
    else
        std::cout << poly_map_text(f) << "\n";
}

void print_faa(const faa_seq &f, const common_args &a) {
    if (a.format == "json")
        std::cout << faa_json(f).dump(2) << "\n";
    else
        std::cout << faa_text(f) << "\n";
}

int print_reports(std::vector<law_report> reports, const common_args &a) {
    sort_reports(reports);
    if (a.format == "json")
        std::cout << law_reports_json(reports).dump(2) << "\n";
    else
        std::cout << report_table(reports);
    return all_passed(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact differential calculus on polynomial maps"};
    app.require_subcommand(1);

    common_args a;
    std::function<int()> action;

    auto *diff_cmd = app.add_subcommand("diff", "derivative of a polynomial map");
    add_io_options(diff_cmd, a);
    diff_cmd->callback([&] {
        action = [&] {
            print_poly(diff(read_poly(a.one_input(), a.ring())), a);
            return 0;
        };
    });

    auto *partial_cmd =
        app.add_subcommand("partial", "iterated derivative, one fresh linear "
                                      "factor per order");
    add_io_options(partial_cmd, a);
    partial_cmd->add_option("--order", a.order, "derivative order");
    partial_cmd->callback([&] {
        action = [&] {
            if (a.order > 8)
                throw validation_error("partial derivative order exceeds 8");
            print_poly(partial_n(read_poly(a.one_input(), a.ring()), a.order), a);
            return 0;
        };
    });

    auto *total_cmd = app.add_subcommand(
        "total", "iterated full derivative; doubles the domain per order");
    add_io_options(total_cmd, a);
    total_cmd->add_option("--order", a.order, "derivative order");
    total_cmd->callback([&] {
        action = [&] {
            if (a.order > 8)
                throw validation_error("total derivative order exceeds 8");
            print_poly(total_n(read_poly(a.one_input(), a.ring()), a.order), a);
            return 0;
        };
    });

    auto *lin_cmd = app.add_subcommand("linearize", "derivative at a zero base point");
    add_io_options(lin_cmd, a);
    lin_cmd->callback([&] {
        action = [&] {
            print_poly(linearize(read_poly(a.one_input(), a.ring())), a);
            return 0;
        };
    });

    auto *lift_cmd = app.add_subcommand(
        "lift", "derivative tower of a polynomial map, up to a truncation order");
    add_io_options(lift_cmd, a);
    lift_cmd->add_option("--truncation", a.truncation, "tower order");
    lift_cmd->callback([&] {
        action = [&] {
            if (a.truncation > 16)
                throw validation_error("truncation exceeds 16");
            print_faa(lift(read_poly(a.one_input(), a.ring()), a.truncation), a);
            return 0;
        };
    });

    auto *fc_cmd = app.add_subcommand("faa-compose",
                                      "compose two towers: outer then inner");
    add_io_options(fc_cmd, a);
    fc_cmd->callback([&] {
        action = [&] {
            auto [gsrc, fsrc] = a.two_inputs();
            semiring r = a.ring();
            print_faa(faa_compose(read_faa(gsrc, r, true), read_faa(fsrc, r, true)), a);
            return 0;
        };
    });

    auto *fd_cmd = app.add_subcommand("faa-diff", "derivative of a tower");
    add_io_options(fd_cmd, a);
    fd_cmd->callback([&] {
        action = [&] {
            print_faa(faa_diff(read_faa(a.one_input(), a.ring(), true)), a);
            return 0;
        };
    });

    auto *dist_cmd = app.add_subcommand("distance",
                                        "term-agreement distance of two towers");
    add_io_options(dist_cmd, a);
    dist_cmd->callback([&] {
        action = [&] {
            auto [fsrc, gsrc] = a.two_inputs();
            semiring r = a.ring();
            distance d = distance_seq(read_faa(fsrc, r, true), read_faa(gsrc, r, true));
            if (a.format == "json")
                std::cout << distance_json(d).dump() << "\n";
            else
                std::cout << d.str() << "\n";
            return 0;
        };
    });

    auto *dec_cmd = app.add_subcommand("decompose",
                                       "split a tower into homogeneous layers");
    add_io_options(dec_cmd, a);
    dec_cmd->callback([&] {
        action = [&] {
            std::vector<faa_seq> layers =
                decompose(read_faa(a.one_input(), a.ring(), true));
            if (a.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto &l : layers) arr.push_back(faa_json(l));
                std::cout << arr.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < layers.size(); ++i)
                    std::cout << "layer " << i << ": " << faa_text(layers[i]) << "\n";
            }
            return 0;
        };
    });

    auto *val_cmd = app.add_subcommand(
        "validate", "check the multilinear-symmetric invariants of a tower");
    add_io_options(val_cmd, a);
    val_cmd->callback([&] {
        action = [&] {
            faa_seq f = read_faa(a.one_input(), a.ring(), false);
            if (auto bad = seq_violation(f)) throw validation_error(*bad);
            if (a.format == "json")
                std::cout << nlohmann::json{{"valid", true}}.dump() << "\n";
            else
                std::cout << "valid\n";
            return 0;
        };
    });

    auto *check_cmd = app.add_subcommand("check", "run a law suite");
    std::string suite;
    check_cmd->add_option("suite", suite, "cd, hd, cofree, algebra or all")
        ->required()
        ->check(CLI::IsMember({"cd", "hd", "cofree", "algebra", "all"}));
    check_cmd->add_option("--ring", a.ring_tag, "semiring tag");
    check_cmd->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    check_cmd->add_option("--seed", a.seed, "sampling seed");
    check_cmd->add_option("--truncation", a.truncation, "tower order for sampled "
                                                        "sequences");
    check_cmd->add_option("--order", a.order, "highest derivative order in the "
                                              "higher-order suite");
    check_cmd->callback([&] {
        action = [&] {
            semiring r = a.ring();
            sample_config cfg;
            cfg.seed = a.seed;
            cfg.truncation = a.truncation;
            unsigned hd_order = check_cmd->count("--order") ? a.order : 3;
            std::vector<law_report> reports;
            auto append = [&](std::vector<law_report> more) {
                for (auto &rep : more) reports.push_back(std::move(rep));
            };
            if (suite == "cd") {
                for (const char *id : {"polycat", "faa-over-polycat", "delta"})
                    append(check_cd(id, r, cfg));
            } else if (suite == "hd") {
                append(check_hd(r, cfg, hd_order));
            } else if (suite == "cofree") {
                append(check_cofree(r, cfg));
            } else if (suite == "algebra") {
                append(check_algebra(r, cfg));
            } else {
                for (const char *id : {"polycat", "faa-over-polycat", "delta"})
                    append(check_cd(id, r, cfg));
                append(check_hd(r, cfg, hd_order));
                append(check_cofree(r, cfg));
                append(check_algebra(r, cfg));
            }
            return print_reports(std::move(reports), a);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }

    try {
        return action();
    } catch (const parse_error &e) {
        std::cerr << "parse error at position " << e.position() << " near '"
                  << e.token() << "': " << e.what() << "\n";
        return 2;
    } catch (const validation_error &e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
