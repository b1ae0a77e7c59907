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
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tchebint/corpus.hpp"
#include "tchebint/error.hpp"
#include "tchebint/simplicial.hpp"

using namespace tchebint;

namespace {

using Face = SimplicialComplex::Face;

UnivariatePoly poly(std::vector<Rational> c) { return UnivariatePoly(std::move(c)); }
UnivariatePoly from(const std::vector<long>& c) {
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return UnivariatePoly(r);
}

// F by the defining sum over f_{j-1} ((x-1)/2)^j
UnivariatePoly F_oracle(const std::vector<std::uint64_t>& f) {
    const UnivariatePoly step({Rational(-1, 2), Rational(1, 2)});
    UnivariatePoly r, power = UnivariatePoly::constant(1);
    for (auto c : f) {
        r += Rational(static_cast<unsigned long>(c)) * power;
        power = power * step;
    }
    return r;
}

SimplicialComplex edge() { return SimplicialComplex::from_faces({"u", "v"}, {{"u", "v"}}); }
SimplicialComplex point() { return SimplicialComplex::from_faces({"p"}, {}); }

bool downward_closed(const SimplicialComplex& d) {
    for (const auto& f : d.faces())
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face g = f;
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
            if (!d.contains(g)) return false;
        }
    return d.contains({});
}

}  // namespace

TEST_SUITE("simplicial") {
    TEST_CASE("univariate polynomials and Chebyshev transforms") {
        const UnivariatePoly x = UnivariatePoly::x();
        CHECK(cheb_transform_T(x * x) == from({-1, 0, 2}));
        CHECK(cheb_transform_U(x * x) == from({-1, 0, 4}));
        CHECK(cheb_transform_T(UnivariatePoly::constant(1)) == UnivariatePoly::constant(1));
        CHECK(cheb_transform_U(UnivariatePoly::constant(1)) == UnivariatePoly::constant(1));
        for (int n = 0; n <= 12; ++n) {
            CHECK(cheb_T(n) == poly(oracle::cheb_T_explicit(n)));
            CHECK(cheb_U(n) == poly(oracle::cheb_U_explicit(n)));
            CHECK(cheb_T(n).eval(1) == 1);
            CHECK(cheb_U(n).eval(1) == n + 1);
        }
        CHECK(from({1, 2, 0, 0}).degree() == 1);
        CHECK(UnivariatePoly().is_zero());
        CHECK(from({0, 1}).pow(3) == from({0, 0, 0, 1}));
        CHECK(univariate_from_json(to_json(from({3, -1, 7}))) == from({3, -1, 7}));
    }

    TEST_CASE("complex construction") {
        const SimplicialComplex fig1 = figure1_complex();
        CHECK(f_vector(fig1) == std::vector<std::uint64_t>{1, 4, 5, 2});
        CHECK(downward_closed(fig1));
        CHECK(fig1.facets().size() == 2);
        CHECK(SimplicialComplex().f_vector() == std::vector<std::uint64_t>{1});
        CHECK(F_polynomial(SimplicialComplex()) == UnivariatePoly::constant(1));
        CHECK(point().f_vector() == std::vector<std::uint64_t>{1, 1});
        try {
            SimplicialComplex::from_faces({"a"}, {{"a", "b"}});
            FAIL("expected UnknownVertex");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UnknownVertex);
        }
        const SimplicialComplex round = complex_from_json(to_json(fig1));
        CHECK(round == fig1);
    }

    TEST_CASE("F and h polynomials") {
        const auto e = edge();
        CHECK(f_vector(e) == std::vector<std::uint64_t>{1, 2, 1});
        const UnivariatePoly xm = from({-1, 1});
        CHECK(F_polynomial(e) == UnivariatePoly::x() + Rational(1, 4) * (xm * xm));
        for (const auto& c : complex_corpus(3)) {
            INFO(c.name);
            CHECK(F_polynomial(c.complex) == F_oracle(f_vector(c.complex)));
            CHECK(F_from_f_vector(f_vector(c.complex)) == F_polynomial(c.complex));
            CHECK(downward_closed(c.complex));
        }
        const auto tri = SimplicialComplex::from_faces({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
        CHECK(h_polynomial(tri) == from({1, 1, 1}));
        CHECK(h_polynomial(SimplicialComplex::from_faces({"x", "y", "z"}, {{"x", "y", "z"}})) == from({1}));
    }

    TEST_CASE("join, suspension and link") {
        CHECK(f_vector(suspension(point())) == std::vector<std::uint64_t>{1, 3, 2});
        const auto tri = SimplicialComplex::from_faces({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
        const auto lk = link(tri, {"x"});
        CHECK(lk.vertices() == std::vector<std::string>{"y", "z"});
        CHECK(lk.dimension() == 0);
        const auto corpus = complex_corpus(1);
        for (std::size_t i = 0; i < corpus.size(); ++i)
            for (std::size_t j = i; j < corpus.size() && j < i + 3; ++j) {
                const auto& a = corpus[i].complex;
                const auto& b = corpus[j].complex;
                if (a.num_faces() * b.num_faces() > 4096) continue;
                const auto jn = join(a, b);
                CHECK(F_polynomial(jn) == F_polynomial(a) * F_polynomial(b));
                const auto fa = f_vector(a), fb = f_vector(b), fj = f_vector(jn);
                for (std::size_t k = 0; k < fj.size(); ++k) {
                    std::uint64_t conv = 0;
                    for (std::size_t s = 0; s <= k; ++s)
                        if (s < fa.size() && k - s < fb.size()) conv += fa[s] * fb[k - s];
                    CHECK(fj[k] == conv);
                }
            }
        try {
            link(tri, {"x", "q"});
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK((e.code() == Errc::FaceNotInComplex || e.code() == Errc::UnknownVertex));
        }
    }

    TEST_CASE("order complexes") {
        const auto b2 = order_complex(generate(Family::Boolean, 2), true);
        CHECK(f_vector(b2) == std::vector<std::uint64_t>{1, 2});
        const auto b3 = order_complex(generate(Family::Boolean, 3), true);
        CHECK(f_vector(b3) == std::vector<std::uint64_t>{1, 6, 6});
        const auto fig2 = order_complex(figure2_poset());
        CHECK(fig2.facets() == std::vector<Face>{{"u1", "u4"}, {"u1", "u2", "u3"}});
    }

    TEST_CASE("stellar subdivision and Tchebyshev triangulations") {
        const auto path = tchebyshev_triangulation(edge(), {{"u", "v"}});
        CHECK(f_vector(path) == std::vector<std::uint64_t>{1, 3, 2});
        CHECK(path.contains({midpoint_label("u", "v"), "u"}));
        const auto tri = SimplicialComplex::from_faces({"x", "y", "z"}, {{"x", "y", "z"}});
        const auto sub = stellar_subdivision(tri, "x", "y", "w");
        CHECK(sub.facets() == std::vector<Face>{{"w", "x", "z"}, {"w", "y", "z"}});
        try {
            tchebyshev_triangulation(edge(), {});
            FAIL("expected NotAnEdgePermutation");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NotAnEdgePermutation);
        }

        const auto fig1 = figure1_complex();
        auto edges = fig1.edges();
        std::sort(edges.begin(), edges.end());
        const auto reference = f_vector(tchebyshev_triangulation(fig1, edges));
        const auto links = summed_F(second_kind_links(tchebyshev_triangulation(fig1, edges), fig1.vertices()));
        int orders = 0;
        do {
            const auto t = tchebyshev_triangulation(fig1, edges);
            CHECK(f_vector(t) == reference);
            CHECK(F_polynomial(t) == cheb_transform_T(F_polynomial(fig1)));
            CHECK(downward_closed(t));
            CHECK(summed_F(second_kind_links(t, fig1.vertices())) == links);
            ++orders;
        } while (std::next_permutation(edges.begin(), edges.end()));
        CHECK(orders == 120);
    }

    TEST_CASE("links of the original vertices") {
        // each endpoint of a subdivided edge has a single point as link
        const auto t = tchebyshev_triangulation(edge(), {{"u", "v"}});
        const auto links = second_kind_links(t, {"u", "v"});
        REQUIRE(links.size() == 2);
        for (const auto& l : links) CHECK(f_vector(l) == std::vector<std::uint64_t>{1, 1});
        const UnivariatePoly summed = summed_F(links);
        CHECK(summed == from({1, 1}));
        // half the U-transform of F of the edge is (x^2 + x)/2, which differs
        CHECK(Rational(1, 2) * cheb_transform_U(F_polynomial(edge())) == poly({0, Rational(1, 2), Rational(1, 2)}));
        CHECK(summed != Rational(1, 2) * cheb_transform_U(F_polynomial(edge())));

        // the link sum is the image of F under x^n -> 2 U_{n-1}
        for (const auto& c : complex_corpus(0)) {
            if (c.complex.edges().size() > 6) continue;
            UnivariatePoly expected;
            const UnivariatePoly F = F_polynomial(c.complex);
            for (int n = 1; n <= F.degree(); ++n) expected += Rational(2 * F.coeff(n)) * cheb_U(n - 1);
            auto e = c.complex.edges();
            std::mt19937_64 rng(11);
            std::shuffle(e.begin(), e.end(), rng);
            INFO(c.name);
            CHECK(summed_F(second_kind_links(tchebyshev_triangulation(c.complex, e), c.complex.vertices())) == expected);
        }
        try {
            second_kind_links(t, {"nope"});
            FAIL("expected UnknownVertex");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UnknownVertex);
        }
    }

    TEST_CASE("order complex of the interval poset") {
        CHECK(order_complex_of_intervals_check(figure2_poset()));
        CHECK(order_complex_of_intervals_check(Poset::from_covers({"p", "q"}, {})));
        for (const auto& p : poset_corpus(0))
            if (p.poset.size() <= 8) {
                INFO(p.name);
                CHECK(order_complex_of_intervals_check(p.poset.poset()));
            }
        const auto order = containment_edge_order(figure2_poset());
        REQUIRE(order.size() == 4);
        CHECK(order.front() == std::pair<std::string, std::string>{"u1", "u3"});
    }

    TEST_CASE("graded interval poset gives a Tchebyshev triangulation of the suspension") {
        for (const auto& p : poset_corpus(0)) {
            if (p.poset.size() > 16 || p.poset.rank() > 5) continue;
            INFO(p.name);
            const auto inner = UnivariatePoly::x() * F_polynomial(order_complex(p.poset, true));
            CHECK(F_polynomial(order_complex(graded_interval_poset(p.poset), true)) == cheb_transform_T(inner));
            CHECK(F_polynomial(suspension(order_complex(p.poset, true))) == inner);
        }
    }

    TEST_CASE("type B complexes") {
        for (int n = 1; n <= 4; ++n) {
            const auto f = f_vector(order_complex(graded_interval_poset(generate(Family::Boolean, n)), true));
            CHECK(f == oracle::type_b_f_vector(n));
        }
    }
}
