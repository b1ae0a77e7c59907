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

#include "tchebint/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tchebint/corpus.hpp"
#include "tchebint/error.hpp"
#include "tchebint/flagindex.hpp"
#include "tchebint/simplicial.hpp"
#include "tchebint/transforms.hpp"

namespace tchebint {

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const VerificationCase& c) { return c.pass; }));
}

std::size_t VerificationReport::failed() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const VerificationCase& c) { return !c.pass && !c.informational; }));
}

namespace {

constexpr Alphabet AB = Alphabet::AB;
constexpr Alphabet CD = Alphabet::CD;

class Suite {
   public:
    explicit Suite(std::string name) { report_.suite = std::move(name); }

    void check(std::string description, std::string expected, std::string actual) {
        const bool pass = expected == actual;
        report_.cases.push_back({std::move(description), std::move(expected), std::move(actual), pass, false});
    }
    void check(std::string description, const NCPoly& expected, const NCPoly& actual) {
        check(std::move(description), expected.to_string(), actual.to_string());
    }
    void note(std::string description, std::string expected, std::string actual) {
        const bool pass = expected == actual;
        report_.cases.push_back({std::move(description), std::move(expected), std::move(actual), pass, true});
    }

    VerificationReport take() { return std::move(report_); }

   private:
    VerificationReport report_;
};

// runs `body` on every item and records one case carrying the first counterexample
template <class T, class F>
void check_every(Suite& s, const std::string& description, const std::vector<T>& items, F&& body) {
    std::size_t checked = 0;
    for (const auto& item : items) {
        auto [expected, actual, where] = body(item);
        ++checked;
        if (expected != actual) {
            s.check(description + " (counterexample: " + where + ")", expected, actual);
            return;
        }
    }
    const std::string all = "all " + std::to_string(checked) + " agree";
    s.check(description, all, all);
}

struct Triple {
    std::string expected, actual, where;
};

std::string join(const std::vector<std::uint64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

NCPoly cpow(int n) { return NCPoly::monomial(CD, Word(static_cast<std::size_t>(n), 'c')); }

NCPoly II_cd(const NCPoly& cd) { return rewrite_ab_to_cd(II_ab(expand_cd(cd))); }

std::vector<NamedPoset> filtered(std::uint64_t seed, int max_rank, std::size_t max_size) {
    std::vector<NamedPoset> out;
    for (auto& p : poset_corpus(seed))
        if (p.poset.rank() <= max_rank && p.poset.size() <= max_size) out.push_back(std::move(p));
    return out;
}

void iota_suite(Suite& s, std::uint64_t seed) {
    const std::vector<std::pair<Word, std::string>> examples{
        {"a", "a^2 + 2ba"},
        {"b", "4b^2 + 2ab + ba"},
        {"aa", "a^3 + 2ba^2"},
        {"ab", "a^2b + aba + 2bab + 2b^2a + ba^2"},
        {"ba", "a^2b + aba + 2bab + 2b^2a + ba^2"},
        {"bb", "8b^3 + 4ab^2 + 2bab + aba + 2b^2a"},
    };
    for (const auto& [w, text] : examples)
        s.check("iota(" + word_to_string(w) + ")", NCPoly::parse(AB, text), iota_ab(w));
    check_every(s, "Upsilon of the graded interval poset equals iota of Upsilon", filtered(seed, 5, 200),
                [](const NamedPoset& p) {
                    return Triple{iota_linear(upsilon(p.poset)).to_string(),
                                  upsilon(graded_interval_poset(p.poset)).to_string(), p.name};
                });
}

void jojic_ab_suite(Suite& s, std::uint64_t seed) {
    s.check("I_ab(1)", NCPoly::parse(AB, "a + b"), I_ab(NCPoly::one(AB)));
    s.check("I_ab on B2", ab_index(graded_interval_poset(generate(Family::Boolean, 2))),
            I_ab(ab_index(generate(Family::Boolean, 2))));
    check_every(s, "Psi of the graded interval poset equals I_ab(Psi)", filtered(seed, 5, 200),
                [](const NamedPoset& p) {
                    return Triple{I_ab(ab_index(p.poset)).to_string(),
                                  ab_index(graded_interval_poset(p.poset)).to_string(), p.name};
                });
}

void jojic_cd_suite(Suite& s, std::uint64_t seed) {
    const std::vector<std::string> frozen{
        "c^2 + 2d",
        "c^3 + 2cd + 4dc",
        "c^4 + 2c^2d + 4cdc + 6dc^2 + 4d^2",
        "c^5 + 2c^3d + 4c^2dc + 6cdc^2 + 8dc^3 + 4cd^2 + 8dcd + 8d^2c",
    };
    for (int n = 1; n <= 4; ++n)
        s.check("I_cd(c^" + std::to_string(n) + ")", NCPoly::parse(CD, frozen[static_cast<std::size_t>(n - 1)]),
                I_cd(cpow(n)));
    std::vector<Word> words;
    for (int d = 0; d <= 5; ++d)
        for (auto& w : words_of_degree(CD, d)) words.push_back(w);
    check_every(s, "I_cd agrees with I_ab on cd-words of degree <= 5", words, [](const Word& w) {
        const NCPoly m = NCPoly::monomial(CD, w);
        return Triple{I_ab(expand_cd(m)).to_string(), expand_cd(I_cd(m)).to_string(), word_to_string(w)};
    });
    std::vector<NamedPoset> eulerian;
    for (auto& p : filtered(seed, 5, 200))
        if (is_eulerian(p.poset)) eulerian.push_back(std::move(p));
    check_every(s, "cd-index of the graded interval poset equals I_cd(cd-index)", eulerian, [](const NamedPoset& p) {
        return Triple{I_cd(cd_index(p.poset)).to_string(), cd_index(graded_interval_poset(p.poset)).to_string(),
                      p.name};
    });
}

void ii_suite(Suite& s, std::uint64_t seed) {
    const std::vector<std::string> frozen{
        "4c",
        "6c^2 + 4d",
        "8c^3 + 8cd + 8dc",
        "10c^4 + 12c^2d + 16cdc + 12dc^2 + 8d^2",
        "12c^5 + 16c^3d + 24c^2dc + 24cdc^2 + 16dc^3 + 16cd^2 + 16dcd + 16d^2c",
    };
    for (int n = 1; n <= 5; ++n)
        s.check("II(c^" + std::to_string(n) + ")", NCPoly::parse(CD, frozen[static_cast<std::size_t>(n - 1)]),
                II_cd(cpow(n)));
    const auto corpus = filtered(seed, 5, 200);
    check_every(s, "total Psi of II(P) built inside I(P) equals II_ab(Psi)", corpus, [](const NamedPoset& p) {
        return Triple{II_ab(ab_index(p.poset)).to_string(), total_ab_index(second_kind_transform(p.poset)).to_string(),
                      p.name};
    });
    check_every(s, "total Psi of II(P) built from products equals II_ab(Psi)", corpus, [](const NamedPoset& p) {
        return Triple{II_ab(ab_index(p.poset)).to_string(),
                      total_ab_index(second_kind_via_products(p.poset)).to_string(), p.name};
    });
    std::vector<NamedPoset> small;
    for (const auto& p : corpus)
        if (p.poset.size() <= 16) small.push_back(p);
    check_every(s, "members of II(P) are dual([0,x]) x [x,1]", small, [](const NamedPoset& p) {
        const auto direct = second_kind_transform(p.poset);
        const auto products = second_kind_via_products(p.poset);
        for (std::size_t i = 0; i < direct.size(); ++i)
            if (!is_isomorphic(direct[i].poset, products[i].poset, 256))
                return Triple{"isomorphic", "not isomorphic", p.name + " at " + direct[i].generator};
        return Triple{"isomorphic", "isomorphic", p.name};
    });
}

void mixing_suite(Suite& s, std::uint64_t) {
    s.check("M(1,1) in cd", NCPoly::parse(CD, "c"), mixing_M_cd(NCPoly::one(CD), NCPoly::one(CD)));
    s.check("M(1,1) in ab", NCPoly::parse(AB, "a + b"), mixing_M_def("", ""));
    std::vector<std::pair<Word, Word>> cd_pairs;
    for (int du = 0; du <= 5; ++du)
        for (int dv = 0; du + dv <= 5; ++dv)
            for (const auto& u : words_of_degree(CD, du))
                for (const auto& v : words_of_degree(CD, dv)) cd_pairs.emplace_back(u, v);
    check_every(s, "cd recursion for M agrees with the defining sum", cd_pairs, [](const std::pair<Word, Word>& uv) {
        const NCPoly u = NCPoly::monomial(CD, uv.first), v = NCPoly::monomial(CD, uv.second);
        return Triple{mixing_M(expand_cd(u), expand_cd(v)).to_string(), expand_cd(mixing_M_cd(u, v)).to_string(),
                      "M(" + word_to_string(uv.first) + "," + word_to_string(uv.second) + ")"};
    });
    std::vector<std::pair<Word, Word>> ab_pairs;
    for (int lu = 0; lu <= 5; ++lu)
        for (int lv = 0; lu + lv <= 5; ++lv)
            for (const auto& u : words_of_degree(AB, lu))
                for (const auto& v : words_of_degree(AB, lv)) ab_pairs.emplace_back(u, v);
    check_every(s, "M(u,v) = M(v,u) on ab-words", ab_pairs, [](const std::pair<Word, Word>& uv) {
        return Triple{mixing_M_def(uv.second, uv.first).to_string(), mixing_M_def(uv.first, uv.second).to_string(),
                      "M(" + word_to_string(uv.first) + "," + word_to_string(uv.second) + ")"};
    });
    const auto base = base_posets();
    std::vector<std::pair<NamedPoset, NamedPoset>> pairs;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j)
            if (base[i].poset.size() * base[j].poset.size() <= 200) pairs.emplace_back(base[i], base[j]);
    check_every(s, "M(Psi_P, Psi_Q) = Psi of P x Q", pairs, [](const std::pair<NamedPoset, NamedPoset>& pq) {
        return Triple{ab_index(direct_product(pq.first.poset, pq.second.poset)).to_string(),
                      mixing_M(ab_index(pq.first.poset), ab_index(pq.second.poset)).to_string(),
                      pq.first.name + " x " + pq.second.name};
    });
}

NCPoly M_cc(int i, int j) { return mixing_M_cd(cpow(i), cpow(j)); }

void delannoy_suite(Suite& s, std::uint64_t) {
    std::vector<std::pair<int, int>> grid;
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j) grid.emplace_back(i, j);
    const auto where = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    check_every(s, "weighted Delannoy paths give M(c^i,c^j)", grid, [&](std::pair<int, int> ij) {
        return Triple{M_cc(ij.first, ij.second).to_string(), delannoy_M(ij.first, ij.second).to_string(),
                      where(ij.first, ij.second)};
    });
    check_every(s, "ce-coefficients of M(c^i,c^j)", grid, [&](std::pair<int, int> ij) {
        const auto [i, j] = ij;
        NCPoly expected(Alphabet::CE);
        for (const auto& k : kvectors_of_degree(i + j + 1)) expected.add_term(k.ce_word(), mcce_coefficient(i, j, k.r()));
        return Triple{expected.to_string(), cd_to_ce(M_cc(i, j)).to_string(), where(i, j)};
    });
    std::vector<std::pair<int, int>> small;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) small.emplace_back(i, j);
    const NCPoly c = cpow(1), diag = NCPoly::parse(CD, "2d - c^2");
    check_every(s, "recurrence for M(c^i,c^j)", small, [&](std::pair<int, int> ij) {
        const auto [i, j] = ij;
        const NCPoly rhs = (M_cc(i, j + 1) + M_cc(i + 1, j)) * c + M_cc(i, j) * diag;
        return Triple{rhs.to_string(), M_cc(i + 1, j + 1).to_string(), where(i, j)};
    });
}

void ladder_suite(Suite& s, std::uint64_t) {
    std::vector<int> ns{1, 2, 3, 4, 5, 6};
    check_every(s, "I_cd(c^n) matches the ladder product formula", ns, [](int n) {
        NCPoly expected(CD);
        for (const auto& k : kvectors_of_degree(n + 1)) expected.add_term(k.cd_word(), Rational(ladder_cd_coefficient(k, n)));
        return Triple{expected.to_string(), I_cd(cpow(n)).to_string(), "n=" + std::to_string(n)};
    });
    check_every(s, "II(c^n) matches 2^(r+1) prod(k_i+1)", ns, [](int n) {
        NCPoly expected(CD);
        for (const auto& k : kvectors_of_degree(n))
            expected.add_term(k.cd_word(), Rational(ii_ladder_cd_coefficient(k, n)));
        return Triple{expected.to_string(), II_cd(cpow(n)).to_string(), "n=" + std::to_string(n)};
    });
    check_every(s, "ce-coefficients of II(c^n)", ns, [](int n) {
        NCPoly expected(Alphabet::CE);
        for (const auto& k : kvectors_of_degree(n)) expected.add_term(k.ce_word(), Rational(uce_coefficient(n, k.r())));
        return Triple{expected.to_string(), cd_to_ce(II_cd(cpow(n))).to_string(), "n=" + std::to_string(n)};
    });
    check_every(s, "coefficient of c^n in II(c^n) is gamma_n", ns, [](int n) {
        return Triple{gamma(n).get_str(), II_cd(cpow(n)).coeff(Word(static_cast<std::size_t>(n), 'c')).get_str(),
                      "n=" + std::to_string(n)};
    });
    std::vector<int> wide{0, 1, 2, 3, 4, 5, 6, 7, 8};
    check_every(s, "gamma_n = 2(n+1)", wide, [](int n) {
        return Triple{std::to_string(2 * (n + 1)), gamma(n).get_str(), "n=" + std::to_string(n)};
    });
    s.check("gamma_4", "10", gamma(4).get_str());
    std::vector<int> raw{1, 2, 3};
    check_every(s, "cd-index of the graded interval poset of L_n", raw, [](int n) {
        return Triple{I_cd(cpow(n)).to_string(), cd_index(graded_interval_poset(generate(Family::Ladder, n))).to_string(),
                      "n=" + std::to_string(n)};
    });
    check_every(s, "total cd-index of II(L_n)", raw, [](int n) {
        return Triple{II_cd(cpow(n)).to_string(),
                      rewrite_ab_to_cd(total_ab_index(second_kind_transform(generate(Family::Ladder, n)))).to_string(),
                      "n=" + std::to_string(n)};
    });
}

// chains bottom = z_0 < ... < z_m = top, as label lists
void bottom_top_chains(const GradedPoset& p, std::size_t x, std::vector<std::string>& cur,
                       std::vector<std::vector<std::string>>& out) {
    cur.push_back(p.label(x));
    if (x == p.top()) {
        out.push_back(cur);
    } else {
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.less(x, y)) bottom_top_chains(p, y, cur, out);
    }
    cur.pop_back();
}

void pell_suite(Suite& s, std::uint64_t seed) {
    const GradedPoset l2 = generate(Family::Ladder, 2);
    s.check("support 0,1 of L_2", "3", std::to_string(count_chains_with_support(l2, {"0̂", "1̂"})));
    s.check("support 0,z,1 of L_2", "7", std::to_string(count_chains_with_support(l2, {"0̂", "1", "1̂"})));
    check_every(s, "interval chains with a given support number P(m)+P(m+1)", filtered(seed, 6, 32),
                [](const NamedPoset& p) {
                    std::vector<std::vector<std::string>> chains;
                    std::vector<std::string> cur;
                    bottom_top_chains(p.poset, p.poset.bottom(), cur, chains);
                    for (const auto& ch : chains) {
                        const int m = static_cast<int>(ch.size()) - 1;
                        if (m > 6) continue;
                        const auto want = pell(m) + pell(m + 1);
                        const auto got = count_chains_with_support(p.poset, ch);
                        if (want != got) return Triple{std::to_string(want), std::to_string(got), p.name};
                    }
                    return Triple{"ok", "ok", p.name};
                });
}

std::vector<std::pair<std::string, std::string>> nth(const std::vector<std::pair<std::string, std::string>>& edges,
                                                     const std::vector<std::size_t>& perm) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto i : perm) out.push_back(edges[i]);
    return out;
}

// x^n -> 2 U_{n-1}(x)
UnivariatePoly shifted_U(const UnivariatePoly& f) {
    UnivariatePoly r;
    for (int n = 1; n <= f.degree(); ++n) r += Rational(2 * f.coeff(n)) * cheb_U(n - 1);
    return r;
}

void tcheb_suite(Suite& s, std::uint64_t seed) {
    std::vector<NamedComplex> complexes;
    for (auto& c : complex_corpus(seed))
        if (c.complex.edges().size() <= 6) complexes.push_back(std::move(c));
    struct Outcome {
        std::string name;
        std::string f, links, F_T, T_F, links_F, half_U, shifted;
        std::size_t faces = 0;
        bool f_stable = true, links_stable = true, transform_ok = true;
    };
    std::vector<Outcome> outcomes;
    for (const auto& nc : complexes) {
        const auto& d = nc.complex;
        const auto edges = d.edges();
        const auto verts = d.vertices();
        const UnivariatePoly F = F_polynomial(d);
        Outcome o{nc.name};
        o.faces = d.num_faces();
        o.T_F = cheb_transform_T(F).to_string();
        o.half_U = (Rational(1, 2) * cheb_transform_U(F)).to_string();
        o.shifted = shifted_U(F).to_string();
        std::vector<std::size_t> perm(edges.size());
        std::iota(perm.begin(), perm.end(), 0);
        bool first = true;
        do {
            const auto t = tchebyshev_triangulation(d, nth(edges, perm));
            const std::string f = join(f_vector(t));
            const std::string links = summed_F(second_kind_links(t, verts)).to_string();
            if (first) {
                o.f = f;
                o.links = links;
                o.F_T = F_polynomial(t).to_string();
                first = false;
            }
            if (f != o.f) o.f_stable = false;
            if (links != o.links) o.links_stable = false;
            if (F_polynomial(t).to_string() != o.T_F) o.transform_ok = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        outcomes.push_back(o);
    }
    check_every(s, "f-vector of T(D) is the same for every edge order", outcomes, [](const Outcome& o) {
        return Triple{"stable", o.f_stable ? "stable" : "order-dependent", o.name};
    });
    check_every(s, "summed link F is the same for every edge order", outcomes, [](const Outcome& o) {
        return Triple{"stable", o.links_stable ? "stable" : "order-dependent", o.name};
    });
    check_every(s, "F of T(D) equals T(F_D) for every edge order", outcomes, [](const Outcome& o) {
        return Triple{o.T_F, o.transform_ok ? o.T_F : o.F_T, o.name};
    });
    // the literal statement; the smallest failing complex is reported
    std::vector<Outcome> by_size = outcomes;
    std::stable_sort(by_size.begin(), by_size.end(), [](const Outcome& x, const Outcome& y) { return x.faces < y.faces; });
    check_every(s, "summed link F equals half the U-transform of F_D", by_size, [](const Outcome& o) {
        return Triple{o.half_U, o.links, o.name};
    });
    check_every(s, "summed link F equals the image of F_D under x^n -> 2U_(n-1)", outcomes, [](const Outcome& o) {
        return Triple{o.shifted, o.links, o.name};
    });

    std::vector<std::pair<std::string, Poset>> posets{
        {"fig2", figure2_poset()}, {"antichain", Poset::from_covers({"p", "q", "r"}, {})}};
    for (const auto& p : poset_corpus(seed))
        if (p.poset.size() <= 8) posets.emplace_back(p.name, p.poset.poset());
    check_every(s, "order complex of I(P) is the containment-ordered Tchebyshev triangulation", posets,
                [](const std::pair<std::string, Poset>& p) {
                    return Triple{"true", order_complex_of_intervals_check(p.second) ? "true" : "false", p.first};
                });
    check_every(s, "F of the stripped graded interval poset equals T(x F of stripped P)", filtered(seed, 5, 24),
                [](const NamedPoset& p) {
                    const UnivariatePoly inner = UnivariatePoly::x() * F_polynomial(order_complex(p.poset, true));
                    return Triple{cheb_transform_T(inner).to_string(),
                                  F_polynomial(order_complex(graded_interval_poset(p.poset), true)).to_string(), p.name};
                });
}

void typeb_suite(Suite& s, std::uint64_t seed) {
    const std::vector<std::string> stored{"(1,2)", "(1,8,8)", "(1,26,72,48)", "(1,80,464,768,384)"};
    for (int n = 1; n <= 4; ++n) {
        const auto f = f_vector(order_complex(graded_interval_poset(generate(Family::Boolean, n)), true));
        s.check("f-vector of the type B complex, n=" + std::to_string(n), stored[static_cast<std::size_t>(n - 1)],
                join(f));
        BigInt chi = 0;
        for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? 1 : -1) * BigInt(std::to_string(f[i]));
        s.check("reduced Euler characteristic, n=" + std::to_string(n), n % 2 ? "1" : "-1", chi.get_str());
    }
    for (int n = 1; n <= 3; ++n)
        s.check("graded interval poset of B_" + std::to_string(n) + " is the cube lattice", "isomorphic",
                is_isomorphic(graded_interval_poset(generate(Family::Boolean, n)), generate(Family::CubeLattice, n))
                    ? "isomorphic"
                    : "not isomorphic");
    std::vector<NamedPoset> eulerian;
    for (auto& p : filtered(seed, 5, 200))
        if (is_eulerian(p.poset)) eulerian.push_back(std::move(p));
    check_every(s, "graded interval poset of an Eulerian poset is Eulerian", eulerian, [](const NamedPoset& p) {
        return Triple{"true", is_eulerian(graded_interval_poset(p.poset)) ? "true" : "false", p.name};
    });
}

void eigen_suite(Suite& s, std::uint64_t) {
    for (int n = 1; n <= 4; ++n) {
        const NCPoly psi = ab_index(generate(Family::Boolean, n));
        const std::string name = "Psi of B_" + std::to_string(n);
        const Rational lambda(pow2(n));
        s.check("II_ab(" + name + ") = 2^n " + name, lambda * psi, II_ab(psi));
        const NCPoly lifted = lift(psi);
        s.check("lift(" + name + ") is an eigenvector with eigenvalue 2^n", lambda * lifted, II_ab(lifted));
    }
    const EigenReport r = eigen_experiments(6);
    for (const auto& d : r.degrees) {
        const std::string n = std::to_string(d.n);
        s.check("II_ab vanishes on the antisymmetric basis, degree " + n, "true", d.asym_in_kernel ? "true" : "false");
        s.note("kernel dimension vs dim Asym, degree " + n, std::to_string(d.dim_asym), std::to_string(d.kernel_dim));
        s.note("Pyr/lift compositions that are eigenvectors, degree " + n, std::to_string(d.compositions),
               std::to_string(d.eigen_compositions));
        s.note("rank of Pyr/lift compositions vs dim Sym, degree " + n, std::to_string(d.dim_sym),
               std::to_string(d.composition_rank));
    }
    s.check("M of two eigenvectors has the product eigenvalue (" + std::to_string(r.product_pairs) + " pairs)", "true",
            r.product_law_holds ? "true" : "false");
}

void products_suite(Suite& s, std::uint64_t) {
    std::vector<NamedPoset> base;
    for (auto& p : base_posets())
        if (p.poset.size() <= 9) base.push_back(std::move(p));
    std::vector<std::pair<NamedPoset, NamedPoset>> pairs;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j)
            if (interval_poset(base[i].poset.poset()).size() * interval_poset(base[j].poset.poset()).size() <= 400)
                pairs.emplace_back(base[i], base[j]);
    const auto iso = [](bool b) { return std::string(b ? "isomorphic" : "not isomorphic"); };
    check_every(s, "I(P x Q) is I(P) x I(Q)", pairs, [&](const std::pair<NamedPoset, NamedPoset>& pq) {
        const Poset lhs = interval_poset(direct_product(pq.first.poset, pq.second.poset).poset());
        const Poset rhs = direct_product(interval_poset(pq.first.poset.poset()), interval_poset(pq.second.poset.poset()));
        return Triple{"isomorphic", iso(is_isomorphic(lhs, rhs, 512)), pq.first.name + " x " + pq.second.name};
    });
    check_every(s, "graded interval poset of P x Q is the diamond product", pairs,
                [&](const std::pair<NamedPoset, NamedPoset>& pq) {
                    const GradedPoset lhs = graded_interval_poset(direct_product(pq.first.poset, pq.second.poset));
                    const GradedPoset rhs = diamond_product(graded_interval_poset(pq.first.poset),
                                                            graded_interval_poset(pq.second.poset));
                    return Triple{"isomorphic", iso(is_isomorphic(lhs, rhs, 512)),
                                  pq.first.name + " x " + pq.second.name};
                });
    check_every(s, "II(P x Q) is member-wise II(P) x II(Q)", pairs, [&](const std::pair<NamedPoset, NamedPoset>& pq) {
        const auto& p = pq.first.poset;
        const auto& q = pq.second.poset;
        const auto whole = second_kind_transform(direct_product(p, q));
        const auto mp = second_kind_transform(p);
        const auto mq = second_kind_transform(q);
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < q.size(); ++y) {
                const auto& member = whole[x * q.size() + y];
                if (!is_isomorphic(member.poset, direct_product(mp[x].poset, mq[y].poset), 512))
                    return Triple{"isomorphic", "not isomorphic",
                                  pq.first.name + " x " + pq.second.name + " at " + member.generator};
            }
        return Triple{"isomorphic", "isomorphic", pq.first.name + " x " + pq.second.name};
    });
}

using SuiteFn = void (*)(Suite&, std::uint64_t);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r{
        {"iota", iota_suite},         {"jojic-ab", jojic_ab_suite}, {"jojic-cd", jojic_cd_suite},
        {"ii", ii_suite},             {"mixing", mixing_suite},     {"delannoy", delannoy_suite},
        {"ladder", ladder_suite},     {"pell", pell_suite},         {"tcheb-triangulation", tcheb_suite},
        {"typeb", typeb_suite},       {"eigen", eigen_suite},       {"products", products_suite},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"iota",   "jojic-ab", "jojic-cd",            "ii",
                                                "mixing", "delannoy", "ladder",              "pell",
                                                "tcheb-triangulation", "typeb", "eigen", "products"};
    return names;
}

VerificationReport run_suite(std::string_view name, std::uint64_t seed) {
    if (name == "all") {
        VerificationReport all{"all", {}};
        for (const auto& n : suite_names()) {
            auto r = run_suite(n, seed);
            for (auto& c : r.cases) {
                c.description = n + ": " + c.description;
                all.cases.push_back(std::move(c));
            }
        }
        return all;
    }
    const auto it = registry().find(std::string(name));
    if (it == registry().end()) throw Error(Errc::ParseError, "unknown suite '" + std::string(name) + "'");
    Suite s(it->first);
    it->second(s, seed);
    return s.take();
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json cases = nlohmann::json::array();
    std::size_t informational = 0;
    for (const auto& c : r.cases) {
        informational += c.informational;
        cases.push_back({{"description", c.description},
                         {"expected", c.expected},
                         {"actual", c.actual},
                         {"pass", c.pass},
                         {"informational", c.informational}});
    }
    return {{"suite", r.suite},
            {"cases", cases},
            {"summary",
             {{"total", r.cases.size()}, {"passed", r.passed()}, {"failed", r.failed()}, {"informational", informational}}}};
}

}  // namespace tchebint
