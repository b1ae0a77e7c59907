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

#include <doctest.h>

#include <functional>

#include "tchebint/error.hpp"
#include "tchebint/ncpoly.hpp"

using namespace tchebint;

namespace {

NCPoly ab(const char* s) { return NCPoly::parse(Alphabet::AB, s); }
NCPoly cd(const char* s) { return NCPoly::parse(Alphabet::CD, s); }
NCPoly ce(const char* s) { return NCPoly::parse(Alphabet::CE, s); }

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::ParseError;
}

}  // namespace

TEST_SUITE("ncpoly") {
    TEST_CASE("parse and print round trip") {
        CHECK(ab("a - 3/2ba^2").to_string() == "a - 3/2ba^2");
        CHECK(ab("1").to_string() == "1");
        CHECK(ab("0").is_zero());
        CHECK(ab("0").to_string() == "0");
        CHECK(cd("d + c^2").to_string() == "c^2 + d");
        CHECK(ab("ab - ab").is_zero());
        CHECK(ab("2 a*b").coeff("ab") == 2);
        CHECK(code_of([] { ab("c"); }) == Errc::AlphabetMismatch);
        CHECK(code_of([] { ab("a +"); }) == Errc::ParseError);
        CHECK(code_of([] { ab("1/0a"); }) == Errc::ParseError);
    }

    TEST_CASE("noncommutative arithmetic") {
        CHECK(ab("a") * ab("b") != ab("b") * ab("a"));
        CHECK(ab("a + b") * ab("a + b") == ab("a^2 + ab + ba + b^2"));
        const NCPoly p = ab("3ab - 1/2b^2a");
        CHECK(NCPoly::one(Alphabet::AB) * p == p);
        CHECK(p * NCPoly::one(Alphabet::AB) == p);
        CHECK((p - p).is_zero());
        CHECK(Rational(2) * p == p + p);
        CHECK(code_of([&] { (void)(p + cd("c")); }) == Errc::AlphabetMismatch);
    }

    TEST_CASE("degrees and homogeneity") {
        CHECK(word_degree("cdc", Alphabet::CD) == 4);
        CHECK(word_degree("cee", Alphabet::CE) == 3);
        CHECK(cd("c^2 + d").is_homogeneous());
        CHECK_FALSE(ab("a + b^2").is_homogeneous());
        CHECK(ab("a + b^2").homogeneous_part(2) == ab("b^2"));
        CHECK(NCPoly(Alphabet::AB).degree() == -1);
        CHECK(words_of_degree(Alphabet::CD, 4).size() == 5);
        CHECK(words_of_degree(Alphabet::AB, 3).size() == 8);
    }

    TEST_CASE("reversal") {
        CHECK(reverse_star(ab("ab")) == ab("ba"));
        CHECK(reverse_star(ab("a^2b")) == ab("ba^2"));
        const NCPoly p = ab("2abb - a + 1/3bab");
        CHECK(reverse_star(reverse_star(p)) == p);
    }

    TEST_CASE("substitution") {
        const std::map<char, NCPoly> psi{{'a', ab("a - b")}, {'b', ab("b")}};
        CHECK(substitute(ab("a + 2b"), psi) == ab("a + b"));
        const std::map<char, NCPoly> cd_images{{'c', ab("a + b")}, {'d', ab("ab + ba")}};
        CHECK(substitute(cd("c^2 + d"), cd_images) == ab("a^2 + 2ab + 2ba + b^2"));
        CHECK(expand_ce(ce("e^2")) == ab("a^2 - ab - ba + b^2"));
        CHECK(code_of([&] { substitute(cd("c"), psi); }) == Errc::MissingImage);
    }

    TEST_CASE("rewriting into the cd basis") {
        CHECK(rewrite_ab_to_cd(ab("a + b")) == cd("c"));
        CHECK(code_of([] { rewrite_ab_to_cd(ab("a")); }) == Errc::NotExpressible);
        CHECK(code_of([] { rewrite_ab_to_cd(ab("a + b^2")); }) == Errc::NotHomogeneous);
        CHECK(rewrite_ab_to_cd(ab("a + 2b"), CdConvention::Upsilon) == cd("c"));
        CHECK(rewrite_ab_to_cd(ab("a^2 + 2ab + 2ba + b^2")) == cd("c^2 + d"));
        for (int n = 0; n <= 6; ++n)
            for (const auto& w : words_of_degree(Alphabet::CD, n)) {
                const NCPoly m = NCPoly::monomial(Alphabet::CD, w);
                CHECK(rewrite_ab_to_cd(expand_cd(m)) == m);
                CHECK(rewrite_ab_to_cd(expand_cd(m, CdConvention::Upsilon), CdConvention::Upsilon) == m);
            }
    }

    TEST_CASE("cd and ce") {
        CHECK(cd_to_ce(cd("d")) == ce("1/2c^2 - 1/2e^2"));
        CHECK(ce_to_cd(ce("e^4")) == cd("c^4 - 2c^2d - 2dc^2 + 4d^2"));
        CHECK(cd_to_ce(cd("c^2 + 2d")) == ce("2c^2 - e^2"));
        CHECK(code_of([] { ce_to_cd(ce("ce")); }) == Errc::OddEPower);
        for (const auto& w : words_of_degree(Alphabet::CD, 5)) {
            const NCPoly m = NCPoly::monomial(Alphabet::CD, w);
            CHECK(ce_to_cd(cd_to_ce(m)) == m);
            CHECK(expand_ce(cd_to_ce(m)) == expand_cd(m));
        }
    }

    TEST_CASE("coproducts") {
        TensorPoly t(Alphabet::AB);
        t.add_term("", "b", 1);
        t.add_term("a", "", 1);
        CHECK(coproduct_delta(ab("ab")) == t);

        TensorPoly c(Alphabet::CD);
        c.add_term("", "", 2);
        CHECK(coproduct_delta(cd("c")) == c);

        TensorPoly cc(Alphabet::CD);
        cc.add_term("", "c", 2);
        cc.add_term("c", "", 2);
        CHECK(coproduct_delta(cd("c^2")) == cc);

        CHECK(coproduct_delta_prime(ab("a^3")).is_zero());
        TensorPoly p(Alphabet::AB);
        p.add_term("a", "", 1);
        CHECK(coproduct_delta_prime(ab("ab")) == p);
        TensorPoly bb(Alphabet::AB);
        bb.add_term("", "b", 1);
        bb.add_term("b", "", 1);
        CHECK(coproduct_delta_prime(ab("b^2")) == bb);
    }

    TEST_CASE("coproduct of cd words stays in cd tensor cd") {
        for (int n = 1; n <= 5; ++n)
            for (const auto& w : words_of_degree(Alphabet::CD, n)) {
                const TensorPoly t = coproduct_delta(NCPoly::monomial(Alphabet::CD, w));
                // expand both tensor factors and compare with the ab coproduct
                TensorPoly expanded(Alphabet::AB);
                for (const auto& [key, coeff] : t.terms()) {
                    const NCPoly l = expand_cd(NCPoly::monomial(Alphabet::CD, key.first));
                    const NCPoly r = expand_cd(NCPoly::monomial(Alphabet::CD, key.second));
                    for (const auto& [lw, lc] : l.terms())
                        for (const auto& [rw, rc] : r.terms()) expanded.add_term(lw, rw, coeff * lc * rc);
                }
                CHECK(expanded == coproduct_delta(expand_cd(NCPoly::monomial(Alphabet::CD, w))));
            }
    }

    TEST_CASE("symmetric and antisymmetric parts") {
        const auto s = sym_asym_split(ab("ab"));
        CHECK(s.sym == ab("1/2ab + 1/2ba"));
        CHECK(s.asym == ab("1/2ab - 1/2ba"));
        const auto t = sym_asym_split(ab("aba"));
        CHECK(t.sym == ab("aba"));
        CHECK(t.asym.is_zero());
        CHECK(asym_basis(3).size() == 2);
        CHECK(sym_basis(3).size() == 6);
        for (int n = 1; n <= 6; ++n) CHECK(asym_basis(n).size() + sym_basis(n).size() == (std::size_t{1} << n));
    }

    TEST_CASE("json round trip") {
        const NCPoly p = cd("3/7c^2d - 5dc + 1");
        CHECK(ncpoly_from_json(to_json(p)) == p);
        CHECK(to_json(p).at("alphabet") == "cd");
    }
}
