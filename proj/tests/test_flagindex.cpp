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

#include "oracles.hpp"
#include "tchebint/corpus.hpp"
#include "tchebint/error.hpp"
#include "tchebint/flagindex.hpp"

using namespace tchebint;

namespace {

NCPoly ab(const char* s) { return NCPoly::parse(Alphabet::AB, s); }
NCPoly cd(const char* s) { return NCPoly::parse(Alphabet::CD, s); }
GradedPoset B(int n) { return generate(Family::Boolean, n); }
GradedPoset L(int n) { return generate(Family::Ladder, n); }
GradedPoset C(int n) { return generate(Family::Chain, n); }

}  // namespace

TEST_SUITE("flagindex") {
    TEST_CASE("flag f-vectors") {
        const FlagFVector b2 = flag_f_vector(B(2));
        CHECK(b2.count(0u) == 1);
        CHECK(b2.count(std::vector<int>{1}) == 2);
        const FlagFVector c2 = flag_f_vector(C(2));
        CHECK(c2.count(0u) == 1);
        CHECK(c2.count(std::vector<int>{1}) == 1);
        const FlagFVector b3 = flag_f_vector(B(3));
        CHECK(b3.count(std::vector<int>{1}) == 3);
        CHECK(b3.count(std::vector<int>{2}) == 3);
        CHECK(b3.count(std::vector<int>{1, 2}) == 6);
        CHECK(flag_f_vector(C(1)).counts().size() == 1);
    }

    TEST_CASE("flag f-vectors agree with chain enumeration on the corpus") {
        for (const auto& p : poset_corpus(0)) {
            if (p.poset.rank() > 6) continue;
            const auto f = flag_f_vector(p.poset);
            const auto oracle_f = oracle::flag_counts(p.poset);
            INFO(p.name);
            REQUIRE(f.counts().size() == oracle_f.size());
            for (const auto& [mask, c] : oracle_f) CHECK(f.count(mask) == c);
        }
    }

    TEST_CASE("Upsilon and Psi") {
        CHECK(upsilon(B(2)) == ab("a + 2b"));
        CHECK(upsilon(C(1)) == NCPoly::one(Alphabet::AB));
        CHECK(upsilon(L(2)) == ab("a^2 + 2ab + 2ba + 4b^2"));
        CHECK(ab_index(B(2)) == ab("a + b"));
        CHECK(ab_index(L(2)) == expand_cd(cd("c^2")));
        CHECK(ab_index(B(3)) == expand_cd(cd("c^2 + d")));
        CHECK(ab_from_upsilon(ab("a + 2b")) == ab("a + b"));
    }

    TEST_CASE("Psi agrees with the flag h-vector on the corpus") {
        for (const auto& p : poset_corpus(0)) {
            if (p.poset.rank() > 6) continue;
            INFO(p.name);
            CHECK(ab_index(p.poset) == oracle::ab_index(p.poset));
            CHECK(upsilon(p.poset) == oracle::upsilon(p.poset));
        }
    }

    TEST_CASE("cd-index") {
        CHECK(cd_index(B(3)) == cd("c^2 + d"));
        CHECK(cd_index(B(2)) == cd("c"));
        for (int n = 1; n <= 5; ++n) CHECK(cd_index(L(n)) == NCPoly::monomial(Alphabet::CD, Word(std::size_t(n), 'c')));
        CHECK(cd_index(generate(Family::CubeLattice, 2)) == cd("c^2 + 2d"));
        try {
            cd_index(C(2));
            FAIL("expected NotExpressible");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NotExpressible);
        }
        for (const auto& p : poset_corpus(0))
            if (p.poset.rank() <= 6 && is_eulerian(p.poset)) {
                INFO(p.name);
                CHECK(expand_cd(cd_index(p.poset)) == oracle::ab_index(p.poset));
                CHECK(expand_cd(cd_index(p.poset), CdConvention::Upsilon) == oracle::upsilon(p.poset));
            }
    }

    TEST_CASE("ce-index") {
        CHECK(ce_index(B(3)) == NCPoly::parse(Alphabet::CE, "3/2c^2 - 1/2e^2"));
        CHECK(ce_index(generate(Family::CubeLattice, 2)) == NCPoly::parse(Alphabet::CE, "2c^2 - e^2"));
    }

    TEST_CASE("total index of a multiset") {
        PosetMultiset m{{"x", B(2)}, {"y", B(2)}, {"z", L(1)}};
        CHECK(total_ab_index(m) == ab("3a + 3b"));
        CHECK(total_ab_index(PosetMultiset{}).is_zero());
    }

    TEST_CASE("json") {
        const auto j = to_json(flag_f_vector(B(3)));
        CHECK(j.at("n") == 2);
        CHECK(j.at("counts").size() == 4);
    }
}
