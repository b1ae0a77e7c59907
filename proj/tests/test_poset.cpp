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

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "tchebint/corpus.hpp"
#include "tchebint/error.hpp"
#include "tchebint/flagindex.hpp"
#include "tchebint/poset.hpp"

using namespace tchebint;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::ParseError;
}

GradedPoset B(int n) { return generate(Family::Boolean, n); }
GradedPoset L(int n) { return generate(Family::Ladder, n); }
GradedPoset C(int n) { return generate(Family::Chain, n); }

// same order under a random relabeling and reindexing
Poset shuffled(const Poset& p, std::uint64_t seed) {
    std::vector<std::size_t> perm(p.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> labels;
    for (auto i : perm) labels.push_back("z" + p.label(i));
    return oracle::poset_from_matrix(labels, [&](std::size_t x, std::size_t y) { return p.leq(perm[x], perm[y]); });
}

}  // namespace

TEST_SUITE("poset") {
    TEST_CASE("construction and validation") {
        const GradedPoset c = build_graded({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
        CHECK(c.rank() == 2);
        CHECK(code_of([] { Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == Errc::CycleDetected);
        CHECK(code_of([] { Poset::from_covers({"a"}, {{"a", "x"}}); }) == Errc::UnknownLabel);
        CHECK(code_of([] { Poset::from_covers({"a", "a"}, {}); }) == Errc::DuplicateLabel);
        CHECK(code_of([] {
                  Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
              }) == Errc::NotTransitivelyReduced);
        CHECK(code_of([] { build_graded({"a", "b"}, {}); }) == Errc::NotBounded);
        CHECK(code_of([] {
                  build_graded({"0", "x", "y", "1"}, {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "1"}});
              }) == Errc::NotTransitivelyReduced);
        CHECK(code_of([] {
                  build_graded({"0", "x", "y", "z", "1"}, {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "z"}, {"z", "1"}});
              }) == Errc::NotGraded);
        const GradedPoset d = build_graded({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
        CHECK(d.rank() == 2);
        CHECK(d.elements_of_rank(1).size() == 2);
        CHECK(d.poset().lower_covers(d.top()).size() == 2);
    }

    TEST_CASE("families") {
        CHECK(B(2).size() == 4);
        CHECK(B(2).elements_of_rank(1).size() == 2);
        CHECK(L(2).size() == 6);
        CHECK(L(2).rank() == 3);
        for (int r = 1; r <= 2; ++r) CHECK(L(2).elements_of_rank(r).size() == 2);
        CHECK(generate(Family::CubeLattice, 2).size() == 10);
        CHECK(generate(Family::CubeLattice, 3).size() == 28);
        CHECK(C(3).size() == 4);
        CHECK(family_from_name("crosspolytope") == Family::CrosspolytopeLattice);
        CHECK(generate(Family::CrosspolytopeLattice, 2).size() == 10);
        CHECK(code_of([] { family_from_name("simplex"); }) == Errc::ParseError);
        for (int n = 1; n <= 4; ++n) CHECK(B(n).size() == (std::size_t{1} << n));
    }

    TEST_CASE("dual") {
        CHECK(is_isomorphic(dual(C(3)), C(3)));
        for (int n = 1; n <= 4; ++n) CHECK(is_isomorphic(dual(B(n)), B(n)));
        const GradedPoset dd = dual(dual(L(3)));
        CHECK(dd.poset().labels() == L(3).poset().labels());
        for (std::size_t x = 0; x < dd.size(); ++x)
            for (std::size_t y = 0; y < dd.size(); ++y) CHECK(dd.leq(x, y) == L(3).leq(x, y));
        CHECK(is_isomorphic(dual(generate(Family::CubeLattice, 2)), generate(Family::CubeLattice, 2)));
        CHECK_FALSE(is_isomorphic(dual(generate(Family::CubeLattice, 3)), generate(Family::CubeLattice, 3)));
    }

    TEST_CASE("direct product") {
        CHECK(is_isomorphic(direct_product(B(1), B(1)), B(2)));
        CHECK(is_isomorphic(direct_product(B(2), B(2)), B(4)));
        for (const auto& p : base_posets()) {
            if (p.poset.size() > 16) continue;
            const GradedPoset pr = direct_product(C(1), p.poset);
            CHECK(pr.size() == 2 * p.poset.size());
            CHECK(pr.rank() == p.poset.rank() + 1);
            CHECK(is_isomorphic(pr, oracle::product(C(1), p.poset)));
        }
    }

    TEST_CASE("diamond product") {
        const GradedPoset d = diamond_product(B(1), B(1));
        CHECK(d.size() == 2);
        CHECK(d.rank() == 1);
        CHECK(is_isomorphic(diamond_product(graded_interval_poset(B(1)), graded_interval_poset(B(1))),
                            graded_interval_poset(direct_product(B(1), B(1)))));
        CHECK(diamond_product(L(2), B(3)).rank() == L(2).rank() + B(3).rank() - 1);
    }

    TEST_CASE("interval posets") {
        const Poset fig2 = figure2_poset();
        const Poset ip = interval_poset(fig2);
        // four singletons, three covers and [u1,u3]
        CHECK(ip.size() == 8);
        CHECK(is_isomorphic(ip, oracle::interval_poset(fig2)));
        const Poset anti = Poset::from_covers({"p", "q", "r"}, {});
        CHECK(interval_poset(anti).size() == 3);
        CHECK(interval_poset(anti).cover_pairs().empty());

        CHECK(graded_interval_poset(C(3)).size() == 11);
        CHECK(graded_interval_poset(C(1)).size() == 4);
        CHECK(is_isomorphic(graded_interval_poset(B(2)), generate(Family::CubeLattice, 2)));
        for (const auto& p : base_posets()) {
            const GradedPoset g = graded_interval_poset(p.poset);
            CHECK(g.rank() == p.poset.rank() + 1);
            if (p.poset.size() <= 10) CHECK(is_isomorphic(g, oracle::graded_interval_poset(p.poset), 128));
        }
        CHECK(graded_interval_poset(B(2)).label(0) == kEmptyInterval);
    }

    TEST_CASE("interval transform of the second kind") {
        const auto m = second_kind_transform(B(2));
        CHECK(m.size() == 4);
        for (const auto& member : m) CHECK(is_isomorphic(member.poset, B(2)));
        const auto c = second_kind_transform(C(1));
        CHECK(c.size() == 2);
        for (const auto& member : c) CHECK(is_isomorphic(member.poset, C(1)));
        for (const auto& p : base_posets()) {
            if (p.poset.size() > 10) continue;
            const auto direct = second_kind_transform(p.poset);
            const auto via = second_kind_via_products(p.poset);
            REQUIRE(direct.size() == p.poset.size());
            for (std::size_t x = 0; x < direct.size(); ++x) {
                CHECK(direct[x].generator == via[x].generator);
                CHECK(is_isomorphic(direct[x].poset, via[x].poset, 128));
                CHECK(is_isomorphic(direct[x].poset, oracle::second_kind_member(p.poset, x), 128));
            }
        }
    }

    TEST_CASE("Eulerian posets") {
        for (int n = 1; n <= 4; ++n) CHECK(is_eulerian(B(n)));
        for (int n = 1; n <= 4; ++n) CHECK(is_eulerian(L(n)));
        CHECK(is_eulerian(C(1)));
        for (int n = 2; n <= 4; ++n) CHECK_FALSE(is_eulerian(C(n)));
        for (const auto& p : poset_corpus(0))
            if (p.poset.rank() <= 5 && is_eulerian(p.poset)) CHECK(is_eulerian(graded_interval_poset(p.poset)));
    }

    TEST_CASE("interval chains with a fixed support") {
        CHECK(pell(1) == 1);
        CHECK(pell(2) == 2);
        CHECK(pell(3) == 5);
        CHECK(pell(4) == 12);
        CHECK(count_chains_with_support(L(2), {"0̂", "1̂"}) == 3);
        CHECK(count_chains_with_support(L(2), {"0̂", "1", "1̂"}) == 7);
        CHECK(count_chains_with_support(C(3), {"0", "1", "2", "3"}) == 17);
        CHECK(oracle::interval_chains_with_support(L(2), {"0̂", "1", "1̂"}) == 7);
        const GradedPoset b3 = B(3);
        CHECK(count_chains_with_support(b3, {"{}", "{1}", "{1,2}", "{1,2,3}"}) ==
              oracle::interval_chains_with_support(b3, {"{}", "{1}", "{1,2}", "{1,2,3}"}));
        CHECK(code_of([] { count_chains_with_support(C(2), {"0", "2", "5"}); }) == Errc::UnknownLabel);
    }

    TEST_CASE("isomorphism") {
        CHECK(is_isomorphic(B(2), build_graded({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}})));
        CHECK_FALSE(is_isomorphic(B(2), C(3)));
        CHECK_FALSE(is_isomorphic(L(2), direct_product(C(1), C(2))));
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            CHECK(is_isomorphic(shuffled(B(4).poset(), seed), B(4).poset()));
            CHECK(is_isomorphic(shuffled(generate(Family::CubeLattice, 3).poset(), seed),
                                generate(Family::CubeLattice, 3).poset()));
        }
        CHECK(code_of([] { is_isomorphic(B(4), B(4), 8); }) == Errc::TooLarge);
    }

    TEST_CASE("json round trip") {
        const GradedPoset p = L(3);
        const GradedPoset q = graded_poset_from_json(to_json(p));
        CHECK(q.poset().labels() == p.poset().labels());
        CHECK(q.poset().covers() == p.poset().covers());
        auto bad = to_json(p);
        bad["top"] = "1";
        CHECK(code_of([&] { graded_poset_from_json(bad); }) == Errc::ParseError);
    }

    TEST_CASE("corpus") {
        const auto corpus = poset_corpus(0);
        for (const auto& p : corpus) CHECK(p.poset.size() <= 200);
        CHECK(random_boolean_subposets(0).size() == 20);
        const auto a = random_boolean_subposets(7), b = random_boolean_subposets(7);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].poset.poset().covers() == b[i].poset.poset().covers());
        for (const auto& p : a) CHECK(p.poset.rank() == 4);
    }
}
