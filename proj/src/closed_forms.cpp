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

#include <functional>

#include "tchebint/error.hpp"
#include "tchebint/linalg.hpp"
#include "tchebint/transforms.hpp"

namespace tchebint {

NCPoly delannoy_M(int i, int j) {
    if (i < 0 || j < 0) throw Error(Errc::InvalidSize, "Delannoy endpoints must be non-negative");
    if (i + j > 16) throw Error(Errc::TooLarge, "Delannoy enumeration");
    const NCPoly c = NCPoly::monomial(Alphabet::CD, "c");
    const NCPoly diag = NCPoly::parse(Alphabet::CD, "2d - c^2");
    NCPoly total(Alphabet::CD);
    std::function<void(int, int, const NCPoly&)> walk = [&](int x, int y, const NCPoly& weight) {
        if (x == i && y == j) {
            total += weight;
            return;
        }
        if (x < i) walk(x + 1, y, weight * c);
        if (y < j) walk(x, y + 1, weight * c);
        if (x < i && y < j) walk(x + 1, y + 1, weight * diag);
    };
    walk(-1, 0, NCPoly::one(Alphabet::CD));
    walk(0, -1, NCPoly::one(Alphabet::CD));
    return Rational(1, 2) * total;
}

Rational mcce_coefficient(int i, int j, int r) {
    if (i < 0 || j < 0 || r < 0) throw Error(Errc::InvalidSize, "negative argument");
    if (2 * r > i + j + 1) return 0;
    Rational v(binomial(i + j + 2 - 2 * r, i + 1 - r));
    v /= 2;
    return r % 2 ? Rational(-v) : v;
}

int KVector::degree() const {
    int d = 2 * r();
    for (int k : ks) d += k;
    return d;
}

Word KVector::cd_word() const {
    Word w;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) w += 'd';
        w.append(static_cast<std::size_t>(ks[i]), 'c');
    }
    return w;
}

Word KVector::ce_word() const {
    Word w;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) w += "ee";
        w.append(static_cast<std::size_t>(ks[i]), 'c');
    }
    return w;
}

KVector KVector::from_cd_word(const Word& w) {
    KVector k{{0}};
    for (char ch : w) {
        if (ch == 'c')
            ++k.ks.back();
        else if (ch == 'd')
            k.ks.push_back(0);
        else
            throw Error(Errc::AlphabetMismatch, "not a cd-word");
    }
    return k;
}

KVector KVector::from_ce_word(const Word& w) {
    Word cd;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 'c') {
            cd += 'c';
        } else if (w[i] == 'e' && i + 1 < w.size() && w[i + 1] == 'e') {
            cd += 'd';
            ++i;
        } else {
            throw Error(Errc::OddEPower, "ce-word with an unpaired e");
        }
    }
    return from_cd_word(cd);
}

std::vector<KVector> kvectors_of_degree(int degree) {
    std::vector<KVector> out;
    for (const auto& w : words_of_degree(Alphabet::CD, degree)) out.push_back(KVector::from_cd_word(w));
    return out;
}

namespace {

void check_ks(const KVector& k, int expected) {
    if (k.ks.empty()) throw Error(Errc::InvalidSize, "empty k-vector");
    for (int x : k.ks)
        if (x < 0) throw Error(Errc::InvalidSize, "negative k");
    if (k.degree() != expected)
        throw Error(Errc::DegreeMismatch,
                    "k-vector has degree " + std::to_string(k.degree()) + ", expected " + std::to_string(expected));
}

}  // namespace

BigInt ladder_cd_coefficient(const KVector& k, int n) {
    check_ks(k, n + 1);
    BigInt v = pow2(k.r());
    for (std::size_t i = 1; i < k.ks.size(); ++i) v *= k.ks[i] + 1;
    return v;
}

BigInt ii_ladder_cd_coefficient(const KVector& k, int n) {
    check_ks(k, n);
    BigInt v = pow2(k.r() + 1);
    for (int x : k.ks) v *= x + 1;
    return v;
}

BigInt uce_coefficient(int n, int r) {
    if (n < 0 || r < 0 || 2 * r > n) throw Error(Errc::DegreeMismatch, "need 0 <= 2r <= n");
    BigInt v = pow2(n + 1 - 2 * r);
    return r % 2 ? BigInt(-v) : v;
}

BigInt gamma(int n) {
    if (n < 0) throw Error(Errc::InvalidSize, "negative n");
    BigInt total = 0;
    for (int r = 0; 2 * r <= n; ++r) {
        BigInt term = pow2(n + 1 - 2 * r) * binomial(n - r, n - 2 * r);
        total += r % 2 ? BigInt(-term) : term;
    }
    return total;
}

std::vector<EigenWitness> eigen_witnesses(int steps) {
    std::vector<EigenWitness> cur{{"", NCPoly::one(Alphabet::AB), BigInt(2)}};
    for (int s = 0; s < steps; ++s) {
        std::vector<EigenWitness> next;
        for (const auto& w : cur) {
            next.push_back({"P" + w.recipe, pyr(w.vector), 2 * w.eigenvalue});
            next.push_back({"L" + w.recipe, lift(w.vector), w.eigenvalue});
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

linalg::Vector coordinates(const NCPoly& p, const std::vector<Word>& basis) {
    linalg::Vector v;
    for (const auto& w : basis) v.push_back(p.coeff(w));
    return v;
}

}  // namespace

EigenReport eigen_experiments(int max_n) {
    if (max_n < 1 || max_n > 7) throw Error(Errc::InvalidSize, "eigen experiments support 1 <= n <= 7");
    EigenReport report;
    for (int n = 1; n <= max_n; ++n) {
        EigenDegree d;
        d.n = n;
        const auto words = words_of_degree(Alphabet::AB, n);
        const auto asym = asym_basis(n);
        d.dim_asym = asym.size();
        d.dim_sym = sym_basis(n).size();
        linalg::Matrix columns;
        for (const auto& w : words) columns.push_back(coordinates(II_ab(NCPoly::monomial(Alphabet::AB, w)), words));
        d.kernel_dim = words.size() - linalg::rank(columns);
        d.asym_in_kernel = true;
        for (const auto& a : asym)
            if (!II_ab(a).is_zero()) d.asym_in_kernel = false;
        d.kernel_equals_asym = d.asym_in_kernel && d.kernel_dim == d.dim_asym;

        const auto witnesses = eigen_witnesses(n);
        d.compositions = witnesses.size();
        linalg::Matrix span;
        bool all_symmetric = true;
        d.compositions_are_eigenvectors = true;
        for (const auto& w : witnesses) {
            span.push_back(coordinates(w.vector, words));
            if (reverse_star(w.vector) != w.vector) all_symmetric = false;
            if (II_ab(w.vector) == Rational(w.eigenvalue) * w.vector)
                ++d.eigen_compositions;
            else
                d.compositions_are_eigenvectors = false;
        }
        d.composition_rank = linalg::rank(span);
        d.compositions_span_sym = all_symmetric && d.composition_rank == d.dim_sym;
        report.degrees.push_back(d);
    }
    // M of two eigenvectors is an eigenvector for the product eigenvalue
    std::vector<EigenWitness> small;
    for (int s = 0; s <= 2; ++s)
        for (auto& w : eigen_witnesses(s)) small.push_back(std::move(w));
    for (const auto& x : small)
        for (const auto& y : small) {
            if (x.vector.degree() + y.vector.degree() + 1 > std::min(max_n, 5)) continue;
            const NCPoly m = mixing_M(x.vector, y.vector);
            ++report.product_pairs;
            if (II_ab(m) != Rational(x.eigenvalue * y.eigenvalue) * m) report.product_law_holds = false;
        }
    return report;
}

nlohmann::json to_json(const EigenReport& r) {
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& d : r.degrees)
        degrees.push_back({{"n", d.n},
                           {"dim_sym", d.dim_sym},
                           {"dim_asym", d.dim_asym},
                           {"kernel_dim", d.kernel_dim},
                           {"asym_in_kernel", d.asym_in_kernel},
                           {"kernel_equals_asym", d.kernel_equals_asym},
                           {"compositions", d.compositions},
                           {"eigen_compositions", d.eigen_compositions},
                           {"composition_rank", d.composition_rank},
                           {"compositions_span_sym", d.compositions_span_sym},
                           {"compositions_are_eigenvectors", d.compositions_are_eigenvectors}});
    return {{"degrees", degrees}, {"product_pairs", r.product_pairs}, {"product_law_holds", r.product_law_holds}};
}

}  // namespace tchebint
