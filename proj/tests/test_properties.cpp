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
#include <random>

#include "oracles.hpp"
#include "tchebint/corpus.hpp"
#include "tchebint/flagindex.hpp"
#include "tchebint/simplicial.hpp"
#include "tchebint/transforms.hpp"
#include "tchebint/verify.hpp"

using namespace tchebint;

namespace {

NCPoly random_poly(std::mt19937_64& rng, Alphabet a, int degree, int terms) {
    const auto words = words_of_degree(a, degree);
    NCPoly p(a);
    for (int i = 0; i < terms; ++i) {
        const long num = static_cast<long>(rng() % 11) - 5;
        const long den = static_cast<long>(rng() % 3) + 1;
        p.add_term(words[rng() % words.size()], make_rational(num, den));
    }
    return p;
}

}  // namespace

TEST_SUITE("properties") {
    TEST_CASE("reversal is an anti-automorphism") {
        std::mt19937_64 rng(1);
        for (int t = 0; t < 40; ++t) {
            const NCPoly p = random_poly(rng, Alphabet::AB, static_cast<int>(rng() % 4), 4);
            const NCPoly q = random_poly(rng, Alphabet::AB, static_cast<int>(rng() % 4), 4);
            CHECK(reverse_star(reverse_star(p)) == p);
            CHECK(reverse_star(p * q) == reverse_star(q) * reverse_star(p));
            const auto s = sym_asym_split(p);
            CHECK(s.sym + s.asym == p);
            CHECK(reverse_star(s.sym) == s.sym);
            CHECK(reverse_star(s.asym) == -s.asym);
        }
    }

    TEST_CASE("cd and ce change of basis round trips") {
        std::mt19937_64 rng(2);
        for (int t = 0; t < 30; ++t) {
            const NCPoly p = random_poly(rng, Alphabet::CD, 1 + static_cast<int>(rng() % 5), 5);
            CHECK(rewrite_ab_to_cd(expand_cd(p)) == p);
            CHECK(ce_to_cd(cd_to_ce(p)) == p);
            CHECK(expand_ce(cd_to_ce(p)) == expand_cd(p));
        }
    }

    TEST_CASE("transforms are linear") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 15; ++t) {
            const int n = 1 + static_cast<int>(rng() % 3);
            const NCPoly p = random_poly(rng, Alphabet::AB, n, 3);
            const NCPoly q = random_poly(rng, Alphabet::AB, n, 3);
            const NCPoly r = random_poly(rng, Alphabet::AB, static_cast<int>(rng() % 3), 2);
            const Rational k = make_rational(static_cast<long>(rng() % 7) - 3, 2);
            CHECK(I_ab(p + k * q) == I_ab(p) + k * I_ab(q));
            CHECK(II_ab(p + k * q) == II_ab(p) + k * II_ab(q));
            CHECK(iota_linear(p + k * q) == iota_linear(p) + k * iota_linear(q));
            CHECK(mixing_M(p + k * q, r) == mixing_M(p, r) + k * mixing_M(q, r));
            CHECK(mixing_M(r, p) == mixing_M(p, r));
            CHECK(II_ab(p - reverse_star(p)).is_zero());
        }
    }

    TEST_CASE("random graded posets") {
        for (std::uint64_t seed = 1; seed <= 4; ++seed)
            for (const auto& p : random_boolean_subposets(seed, 6)) {
                INFO("seed " << seed << " " << p.name);
                const NCPoly psi = oracle::ab_index(p.poset);
                CHECK(ab_index(p.poset) == psi);
                CHECK(ab_index(dual(p.poset)) == reverse_star(psi));
                CHECK(ab_index(graded_interval_poset(p.poset)) == I_ab(psi));
                CHECK(total_ab_index(second_kind_transform(p.poset)) == II_ab(psi));
                CHECK(oracle::second_kind_total(p.poset) == II_ab(psi));
                CHECK(graded_interval_poset(p.poset).rank() == p.poset.rank() + 1);
                if (is_eulerian(p.poset)) CHECK(is_eulerian(graded_interval_poset(p.poset)));
                const auto q = random_boolean_subposets(seed + 100, 1).front().poset;
                CHECK(ab_index(direct_product(p.poset, q)) == mixing_M(psi, ab_index(q)));
                const auto ipq = graded_interval_poset(direct_product(p.poset, q));
                if (ipq.size() <= 1024)
                    CHECK(is_isomorphic(ipq, diamond_product(graded_interval_poset(p.poset), graded_interval_poset(q)),
                                        1024));
                else
                    CHECK(ab_index(ipq) == I_ab(mixing_M(psi, ab_index(q))));
            }
    }

    TEST_CASE("Tchebyshev triangulations under random edge orders") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed)
            for (const auto& c : complex_corpus(seed)) {
                const auto& d = c.complex;
                auto edges = d.edges();
                std::mt19937_64 rng(seed);
                const auto F = F_polynomial(d);
                std::vector<std::uint64_t> first;
                for (int t = 0; t < 4; ++t) {
                    std::shuffle(edges.begin(), edges.end(), rng);
                    const auto tri = tchebyshev_triangulation(d, edges);
                    INFO(c.name);
                    if (first.empty()) first = f_vector(tri);
                    CHECK(f_vector(tri) == first);
                    CHECK(F_polynomial(tri) == cheb_transform_T(F));
                    UnivariatePoly shifted;
                    for (int n = 1; n <= F.degree(); ++n) shifted += Rational(2 * F.coeff(n)) * cheb_U(n - 1);
                    CHECK(summed_F(second_kind_links(tri, d.vertices())) == shifted);
                }
            }
    }

    TEST_CASE("reports are deterministic") {
        CHECK(to_json(run_suite("pell", 0)).dump() == to_json(run_suite("pell", 0)).dump());
        CHECK(to_json(run_suite("iota", 5)).dump() == to_json(run_suite("iota", 5)).dump());
    }
}
