/*
   Copyright 2026 The tchebint authors

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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tchebint/error.hpp"
#include "tchebint/flagindex.hpp"
#include "tchebint/ncpoly.hpp"
#include "tchebint/poset.hpp"
#include "tchebint/simplicial.hpp"
#include "tchebint/transforms.hpp"
#include "tchebint/verify.hpp"

using nlohmann::json;
using namespace tchebint;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::string in, in2, out, kind, kind2, expr, expr2, alphabet = "ab", suite;
    int n = -1, n2 = -1, i = 0, j = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> support;
};

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::ParseError, "cannot open " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

GradedPoset load_graded(const std::string& in, const std::string& kind, int n) {
    if (!in.empty()) return graded_poset_from_json(read_json(in));
    if (kind.empty() || n < 0) throw UsageError("a poset is required: --in FILE or --kind K --n N");
    return generate(family_from_name(kind), n);
}

Poset load_poset(const Options& o) {
    if (!o.in.empty()) return poset_from_json(read_json(o.in));
    return load_graded(o.in, o.kind, o.n).poset();
}

NCPoly load_poly(const std::string& expr, const std::string& alphabet) {
    if (expr.empty()) throw UsageError("--expr is required");
    return NCPoly::parse(alphabet_from_name(alphabet), expr);
}

json poly_json(const NCPoly& p) {
    json j = to_json(p);
    j["text"] = p.to_string();
    return j;
}

json multiset_json(const PosetMultiset& m) {
    json arr = json::array();
    for (const auto& member : m) arr.push_back({{"generator", member.generator}, {"poset", to_json(member.poset)}});
    return arr;
}

json run_poset(const std::string& sub, const Options& o) {
    if (sub == "gen") return to_json(load_graded("", o.kind, o.n));
    if (sub == "intervals") return to_json(interval_poset(load_poset(o)));
    if (sub == "graded-intervals") return to_json(graded_interval_poset(load_graded(o.in, o.kind, o.n)));
    if (sub == "second-kind") return multiset_json(second_kind_transform(load_graded(o.in, o.kind, o.n)));
    if (sub == "dual") return to_json(dual(load_graded(o.in, o.kind, o.n)));
    if (sub == "eulerian") return {{"eulerian", is_eulerian(load_graded(o.in, o.kind, o.n))}};
    if (sub == "chains") {
        if (o.support.empty()) throw UsageError("--support is required");
        return {{"count", count_chains_with_support(load_graded(o.in, o.kind, o.n), o.support)}};
    }
    if (sub == "product" || sub == "diamond") {
        const GradedPoset p = load_graded(o.in, o.kind, o.n);
        const GradedPoset q = load_graded(o.in2, o.kind2, o.n2);
        return to_json(sub == "product" ? direct_product(p, q) : diamond_product(p, q));
    }
    throw UsageError("unknown poset subcommand '" + sub + "'");
}

json run_index(const std::string& sub, const Options& o) {
    const GradedPoset p = load_graded(o.in, o.kind, o.n);
    if (sub == "flag") return to_json(flag_f_vector(p));
    if (sub == "upsilon") return poly_json(upsilon(p));
    if (sub == "ab") return poly_json(ab_index(p));
    if (sub == "cd") return poly_json(cd_index(p));
    if (sub == "ce") return poly_json(ce_index(p));
    throw UsageError("unknown index subcommand '" + sub + "'");
}

json run_transform(const std::string& sub, const Options& o) {
    if (sub == "delannoy") return poly_json(delannoy_M(o.i, o.j));
    if (sub == "M") {
        const NCPoly u = load_poly(o.expr, o.alphabet), v = load_poly(o.expr2, o.alphabet);
        return poly_json(u.alphabet() == Alphabet::CD ? mixing_M_cd(u, v) : mixing_M(u, v));
    }
    const NCPoly p = load_poly(o.expr, o.alphabet);
    if (sub == "iota") return poly_json(iota_linear(p));
    if (sub == "Iab") return poly_json(I_ab(p));
    if (sub == "Icd") return poly_json(I_cd(p));
    if (sub == "IIab") return poly_json(II_ab(p));
    if (sub == "pyr") return poly_json(pyr(p));
    if (sub == "lift") return poly_json(lift(p));
    throw UsageError("unknown transform '" + sub + "'");
}

json run_complex(const std::string& sub, const Options& o) {
    if (o.in.empty()) throw UsageError("--in is required");
    const SimplicialComplex d = complex_from_json(read_json(o.in));
    if (sub == "fvector") return {{"f", f_vector(d)}, {"F", to_json(F_polynomial(d))}, {"h", to_json(h_polynomial(d))}};
    if (sub == "tcheb") {
        const auto t = tchebyshev_triangulation(d, d.edges());
        return {{"complex", to_json(t)},
                {"F", to_json(F_polynomial(t))},
                {"links_F", to_json(summed_F(second_kind_links(t, d.vertices())))}};
    }
    throw UsageError("unknown complex subcommand '" + sub + "'");
}

void emit(const json& j, const std::string& out) {
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(Errc::ParseError, "cannot write " + out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval transforms of graded posets and Tchebyshev triangulations"};
    app.require_subcommand(1);
    Options o;
    std::string sub;

    const auto common = [&](CLI::App* c) {
        c->add_option("--in", o.in, "input JSON file");
        c->add_option("--out", o.out, "output file (default stdout)");
        c->add_option("--kind", o.kind, "poset family: boolean, ladder, chain, cube, crosspolytope");
        c->add_option("--n", o.n, "family parameter");
        c->add_option("--seed", o.seed, "random seed");
    };

    auto* poset = app.add_subcommand("poset", "build and inspect posets");
    poset->add_option("command", sub, "gen | intervals | graded-intervals | second-kind | product | diamond | dual | "
                                      "eulerian | chains")
        ->required();
    common(poset);
    poset->add_option("--in2", o.in2, "second input for product and diamond");
    poset->add_option("--kind2", o.kind2, "second family for product and diamond");
    poset->add_option("--n2", o.n2, "second family parameter");
    poset->add_option("--support", o.support, "comma-separated chain labels")->delimiter(',');

    auto* index = app.add_subcommand("index", "flag f-vector and ab/cd/ce-indices");
    index->add_option("command", sub, "flag | upsilon | ab | cd | ce")->required();
    common(index);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("name,--suite", o.suite, "suite name or all");
    common(verify);

    auto* transform = app.add_subcommand("transform", "apply a linear transform");
    transform->add_option("command", sub, "iota | Iab | Icd | IIab | M | pyr | lift | delannoy")->required();
    common(transform);
    transform->add_option("--expr", o.expr, "polynomial, e.g. \"c^2 + d\"");
    transform->add_option("--expr2", o.expr2, "second argument of M");
    transform->add_option("--alphabet", o.alphabet, "ab, cd or ce");
    transform->add_option("--i", o.i, "Delannoy endpoint i");
    transform->add_option("--j", o.j, "Delannoy endpoint j");

    auto* complex = app.add_subcommand("complex", "simplicial complex invariants");
    complex->add_option("command", sub, "fvector | tcheb")->required();
    common(complex);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            if (o.suite.empty()) throw UsageError("a suite name is required");
            const auto report = run_suite(o.suite, o.seed);
            emit(to_json(report), o.out);
            for (const auto& c : report.cases)
                if (!c.pass && !c.informational)
                    std::cerr << "FAIL " << c.description << "\n  expected: " << c.expected
                              << "\n  actual:   " << c.actual << "\n";
            return report.ok() ? 0 : kExitVerification;
        }
        json result;
        if (*poset) result = run_poset(sub, o);
        if (*index) result = run_index(sub, o);
        if (*transform) result = run_transform(sub, o);
        if (*complex) result = run_complex(sub, o);
        emit(result, o.out);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
