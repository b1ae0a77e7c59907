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

#include "tchebint/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>

#include "tchebint/error.hpp"
#include "tchebint/linalg.hpp"

namespace tchebint {

std::string_view alphabet_name(Alphabet a) noexcept {
    switch (a) {
        case Alphabet::AB: return "ab";
        case Alphabet::CD: return "cd";
        case Alphabet::CE: return "ce";
    }
    return "ab";
}

Alphabet alphabet_from_name(std::string_view name) {
    if (name == "ab") return Alphabet::AB;
    if (name == "cd") return Alphabet::CD;
    if (name == "ce") return Alphabet::CE;
    throw Error(Errc::ParseError, "unknown alphabet '" + std::string(name) + "'");
}

char first_letter(Alphabet a) noexcept { return a == Alphabet::AB ? 'a' : 'c'; }

char second_letter(Alphabet a) noexcept {
    switch (a) {
        case Alphabet::AB: return 'b';
        case Alphabet::CD: return 'd';
        case Alphabet::CE: return 'e';
    }
    return 'b';
}

bool is_letter(Alphabet a, char ch) noexcept { return ch == first_letter(a) || ch == second_letter(a); }

int word_degree(const Word& w, Alphabet a) noexcept {
    if (a != Alphabet::CD) return static_cast<int>(w.size());
    int d = 0;
    for (char ch : w) d += ch == 'd' ? 2 : 1;
    return d;
}

std::vector<Word> words_of_degree(Alphabet a, int degree) {
    std::vector<Word> out;
    if (degree < 0) return out;
    const char x = first_letter(a), y = second_letter(a);
    const int ystep = a == Alphabet::CD ? 2 : 1;
    Word cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        cur.push_back(x);
        self(self, left - 1);
        cur.pop_back();
        if (left >= ystep) {
            cur.push_back(y);
            self(self, left - ystep);
            cur.pop_back();
        }
    };
    rec(rec, degree);
    std::sort(out.begin(), out.end(), WordOrder{});
    return out;
}

NCPoly NCPoly::monomial(Alphabet a, const Word& w, const Rational& c) {
    NCPoly p(a);
    p.add_term(w, c);
    return p;
}

Rational NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    for (char ch : w)
        if (!is_letter(alphabet_, ch))
            throw Error(Errc::AlphabetMismatch,
                        "letter '" + std::string(1, ch) + "' not in alphabet " + std::string(alphabet_name(alphabet_)));
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

bool NCPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = word_degree(terms_.begin()->first, alphabet_);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return word_degree(t.first, alphabet_) == d; });
}

int NCPoly::degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, word_degree(w, alphabet_));
    return d;
}

NCPoly NCPoly::homogeneous_part(int degree) const {
    NCPoly r(alphabet_);
    for (const auto& [w, c] : terms_)
        if (word_degree(w, alphabet_) == degree) r.terms_.emplace(w, c);
    return r;
}

void NCPoly::check_alphabet(const NCPoly& o) const {
    if (o.alphabet_ != alphabet_)
        throw Error(Errc::AlphabetMismatch, std::string(alphabet_name(alphabet_)) + " vs " +
                                                std::string(alphabet_name(o.alphabet_)));
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    check_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    check_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& r) {
    if (sgn(r) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= r;
    return *this;
}

NCPoly operator*(const NCPoly& x, const NCPoly& y) {
    x.check_alphabet(y);
    NCPoly r(x.alphabet_);
    for (const auto& [u, cu] : x.terms_)
        for (const auto& [v, cv] : y.terms_) r.add_term(u + v, cu * cv);
    return r;
}

NCPoly& NCPoly::operator*=(const NCPoly& o) { return *this = *this * o; }

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        s.push_back(w[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        const bool neg = sgn(c) < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        const Rational mag = abs(c);
        if (w.empty()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str();
            s += word_to_string(w);
        }
    }
    return s;
}

NCPoly NCPoly::parse(Alphabet a, std::string_view text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') t.push_back(ch);
    if (t.empty()) throw Error(Errc::ParseError, "empty polynomial");
    if (t == "0") return NCPoly(a);
    NCPoly p(a);
    std::size_t i = 0;
    auto read_int = [&]() {
        std::size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        std::string digits = t.substr(i, j - i);
        i = j;
        return digits;
    };
    bool first = true;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw Error(Errc::ParseError, "expected sign at offset " + std::to_string(i));
        }
        first = false;
        Rational coeff(1);
        bool have_coeff = false;
        std::string num = read_int();
        if (!num.empty()) {
            have_coeff = true;
            std::string den = "1";
            if (i < t.size() && t[i] == '/') {
                ++i;
                den = read_int();
                if (den.empty() || den == "0") throw Error(Errc::ParseError, "bad denominator");
            }
            coeff = Rational(BigInt(num), BigInt(den));
            coeff.canonicalize();
        }
        Word w;
        while (i < t.size() && std::isalpha(static_cast<unsigned char>(t[i]))) {
            const char ch = t[i++];
            if (!is_letter(a, ch)) throw Error(Errc::AlphabetMismatch, "letter '" + std::string(1, ch) + "'");
            std::size_t reps = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                std::string e = read_int();
                if (e.empty()) throw Error(Errc::ParseError, "missing exponent");
                reps = std::stoul(e);
            }
            w.append(reps, ch);
        }
        if (!have_coeff && w.empty()) throw Error(Errc::ParseError, "empty term in '" + std::string(text) + "'");
        p.add_term(w, sign * coeff);
    }
    return p;
}

Word reverse_word(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

NCPoly reverse_star(const NCPoly& p) {
    NCPoly r(p.alphabet());
    for (const auto& [w, c] : p.terms()) r.add_term(reverse_word(w), c);
    return r;
}

NCPoly substitute(const NCPoly& p, const std::map<char, NCPoly>& images) {
    const char x = first_letter(p.alphabet()), y = second_letter(p.alphabet());
    auto ix = images.find(x), iy = images.find(y);
    const bool uses_x = std::any_of(p.terms().begin(), p.terms().end(),
                                    [&](const auto& t) { return t.first.find(x) != Word::npos; });
    const bool uses_y = std::any_of(p.terms().begin(), p.terms().end(),
                                    [&](const auto& t) { return t.first.find(y) != Word::npos; });
    if ((uses_x && ix == images.end()) || (uses_y && iy == images.end()))
        throw Error(Errc::MissingImage, "no image for a letter of " + std::string(alphabet_name(p.alphabet())));
    if (images.empty()) throw Error(Errc::MissingImage, "empty image map");
    const Alphabet out = images.begin()->second.alphabet();
    for (const auto& [ch, img] : images)
        if (img.alphabet() != out) throw Error(Errc::AlphabetMismatch, "image alphabets differ");
    NCPoly r(out);
    for (const auto& [w, c] : p.terms()) {
        NCPoly prod = NCPoly::one(out);
        for (char ch : w) prod = prod * (ch == x ? ix->second : iy->second);
        r += c * prod;
    }
    return r;
}

namespace {

std::map<char, NCPoly> cd_images(CdConvention conv) {
    const Alphabet AB = Alphabet::AB;
    if (conv == CdConvention::Psi)
        return {{'c', NCPoly::parse(AB, "a+b")}, {'d', NCPoly::parse(AB, "ab+ba")}};
    return {{'c', NCPoly::parse(AB, "a+2b")}, {'d', NCPoly::parse(AB, "ab+ba+2b^2")}};
}

struct CdBasis {
    std::vector<Word> cd_words;
    std::vector<Word> rows;  // ab words selecting an invertible square system
    linalg::Matrix inv;
};

std::shared_ptr<const CdBasis> cd_basis(int n, CdConvention conv) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const CdBasis>> cache;
    const auto key = std::make_pair(n, static_cast<int>(conv));
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto basis = std::make_shared<CdBasis>();
    basis->cd_words = words_of_degree(Alphabet::CD, n);
    const auto ab_words = words_of_degree(Alphabet::AB, n);
    const std::size_t F = basis->cd_words.size();
    std::vector<NCPoly> expansions;
    for (const auto& w : basis->cd_words) expansions.push_back(expand_cd(NCPoly::monomial(Alphabet::CD, w), conv));
    linalg::Matrix A(ab_words.size(), linalg::Vector(F, Rational(0)));
    for (std::size_t j = 0; j < F; ++j)
        for (const auto& [w, c] : expansions[j].terms()) {
            auto pos = std::lower_bound(ab_words.begin(), ab_words.end(), w, WordOrder{}) - ab_words.begin();
            A[pos][j] = c;
        }
    const auto rows = linalg::independent_rows(A, F);
    linalg::Matrix S;
    for (auto r : rows) {
        basis->rows.push_back(ab_words[r]);
        S.push_back(A[r]);
    }
    auto inv = linalg::inverse(S);
    if (!inv) throw Error(Errc::NotExpressible, "cd monomials are not independent");
    basis->inv = std::move(*inv);
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(basis)).first->second;
}

}  // namespace

NCPoly expand_cd(const NCPoly& cd, CdConvention conv) {
    if (cd.alphabet() != Alphabet::CD) throw Error(Errc::AlphabetMismatch, "expand_cd expects a cd-polynomial");
    return substitute(cd, cd_images(conv));
}

NCPoly expand_ce(const NCPoly& ce) {
    if (ce.alphabet() != Alphabet::CE) throw Error(Errc::AlphabetMismatch, "expand_ce expects a ce-polynomial");
    return substitute(ce, {{'c', NCPoly::parse(Alphabet::AB, "a+b")}, {'e', NCPoly::parse(Alphabet::AB, "a-b")}});
}

NCPoly rewrite_ab_to_cd(const NCPoly& ab, CdConvention conv) {
    if (ab.alphabet() != Alphabet::AB) throw Error(Errc::AlphabetMismatch, "rewrite expects an ab-polynomial");
    if (!ab.is_homogeneous()) throw Error(Errc::NotHomogeneous, ab.to_string());
    if (ab.is_zero()) return NCPoly(Alphabet::CD);
    const auto basis = cd_basis(ab.degree(), conv);
    linalg::Vector rhs;
    for (const auto& w : basis->rows) rhs.push_back(ab.coeff(w));
    const auto x = linalg::multiply(basis->inv, rhs);
    NCPoly cd(Alphabet::CD);
    for (std::size_t j = 0; j < x.size(); ++j) cd.add_term(basis->cd_words[j], x[j]);
    if (expand_cd(cd, conv) != ab) throw Error(Errc::NotExpressible, ab.to_string());
    return cd;
}

NCPoly cd_to_ce(const NCPoly& cd) {
    if (cd.alphabet() != Alphabet::CD) throw Error(Errc::AlphabetMismatch, "cd_to_ce expects a cd-polynomial");
    return substitute(cd, {{'c', NCPoly::monomial(Alphabet::CE, "c")},
                           {'d', NCPoly::parse(Alphabet::CE, "1/2c^2 - 1/2e^2")}});
}

NCPoly ce_to_cd(const NCPoly& ce) {
    if (ce.alphabet() != Alphabet::CE) throw Error(Errc::AlphabetMismatch, "ce_to_cd expects a ce-polynomial");
    const NCPoly e2 = NCPoly::parse(Alphabet::CD, "c^2 - 2d");
    const NCPoly c = NCPoly::monomial(Alphabet::CD, "c");
    NCPoly r(Alphabet::CD);
    for (const auto& [w, coef] : ce.terms()) {
        NCPoly prod = NCPoly::one(Alphabet::CD);
        for (std::size_t i = 0; i < w.size();) {
            if (w[i] == 'c') {
                prod = prod * c;
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < w.size() && w[j] == 'e') ++j;
            if ((j - i) % 2 != 0) throw Error(Errc::OddEPower, "odd e-run in " + word_to_string(w));
            for (std::size_t k = 0; k < (j - i) / 2; ++k) prod = prod * e2;
            i = j;
        }
        r += coef * prod;
    }
    return r;
}

Rational TensorPoly::coeff(const Word& l, const Word& r) const {
    auto it = terms_.find({l, r});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorPoly::add_term(const Word& l, const Word& r, const Rational& c) {
    for (char ch : l + r)
        if (!is_letter(alphabet_, ch)) throw Error(Errc::AlphabetMismatch, "letter not in tensor alphabet");
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace({l, r}, c);
    if (fresh) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (o.alphabet_ != alphabet_) throw Error(Errc::AlphabetMismatch, "tensor alphabets differ");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const Rational& r) {
    if (sgn(r) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= r;
    return *this;
}

std::string TensorPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool neg = sgn(c) < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        const Rational mag = abs(c);
        if (mag != 1) s += mag.get_str() + "*";
        s += word_to_string(k.first) + "⊗" + word_to_string(k.second);
    }
    return s;
}

namespace {

TensorPoly delta_ab(const NCPoly& p, bool only_b) {
    TensorPoly t(Alphabet::AB);
    for (const auto& [w, c] : p.terms())
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (only_b && w[i] != 'b') continue;
            t.add_term(w.substr(0, i), w.substr(i + 1), c);
        }
    return t;
}

}  // namespace

TensorPoly coproduct_delta(const NCPoly& p) {
    if (p.alphabet() == Alphabet::AB) return delta_ab(p, false);
    if (p.alphabet() != Alphabet::CD) throw Error(Errc::AlphabetMismatch, "coproduct on ce-polynomials");
    const TensorPoly ab = delta_ab(expand_cd(p), false);
    try {
        // re-express the left factors for each fixed right ab-word, then the right factors
        std::map<Word, NCPoly, WordOrder> by_right;
        for (const auto& [k, c] : ab.terms()) {
            auto it = by_right.try_emplace(k.second, Alphabet::AB).first;
            it->second.add_term(k.first, c);
        }
        std::map<Word, NCPoly, WordOrder> by_left_cd;
        for (const auto& [right, left] : by_right) {
            const NCPoly left_cd = rewrite_ab_to_cd(left);
            for (const auto& [lw, lc] : left_cd.terms()) {
                auto it = by_left_cd.try_emplace(lw, Alphabet::AB).first;
                it->second.add_term(right, lc);
            }
        }
        TensorPoly out(Alphabet::CD);
        for (const auto& [lw, right] : by_left_cd) {
            const NCPoly right_cd = rewrite_ab_to_cd(right);
            for (const auto& [rw, rc] : right_cd.terms()) out.add_term(lw, rw, rc);
        }
        return out;
    } catch (const Error& e) {
        if (e.code() == Errc::NotExpressible || e.code() == Errc::NotHomogeneous)
            throw Error(Errc::NotCoalgebraElement, p.to_string());
        throw;
    }
}

TensorPoly coproduct_delta_prime(const NCPoly& p) {
    if (p.alphabet() != Alphabet::AB) throw Error(Errc::AlphabetMismatch, "delta prime expects an ab-polynomial");
    return delta_ab(p, true);
}

SymAsym sym_asym_split(const NCPoly& p) {
    if (!p.is_homogeneous()) throw Error(Errc::NotHomogeneous, p.to_string());
    const NCPoly s = reverse_star(p);
    const Rational half(1, 2);
    return {half * (p + s), half * (p - s)};
}

std::vector<NCPoly> asym_basis(int n) {
    std::vector<NCPoly> out;
    for (const auto& w : words_of_degree(Alphabet::AB, n)) {
        const Word r = reverse_word(w);
        if (w < r) out.push_back(NCPoly::monomial(Alphabet::AB, w) - NCPoly::monomial(Alphabet::AB, r));
    }
    return out;
}

std::vector<NCPoly> sym_basis(int n) {
    std::vector<NCPoly> out;
    for (const auto& w : words_of_degree(Alphabet::AB, n)) {
        const Word r = reverse_word(w);
        if (w < r)
            out.push_back(NCPoly::monomial(Alphabet::AB, w) + NCPoly::monomial(Alphabet::AB, r));
        else if (w == r)
            out.push_back(NCPoly::monomial(Alphabet::AB, w));
    }
    return out;
}

nlohmann::json to_json(const NCPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : p.terms()) {
        const auto q = rational_to_json(c);
        terms.push_back({{"word", w}, {"num", q[0]}, {"den", q[1]}});
    }
    return {{"alphabet", alphabet_name(p.alphabet())}, {"terms", terms}};
}

NCPoly ncpoly_from_json(const nlohmann::json& j) {
    try {
        NCPoly p(alphabet_from_name(j.at("alphabet").get<std::string>()));
        for (const auto& t : j.at("terms")) {
            const nlohmann::json den = t.contains("den") ? t.at("den") : nlohmann::json(1);
            p.add_term(t.at("word").get<std::string>(), rational_from_json(nlohmann::json::array({t.at("num"), den})));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

nlohmann::json to_json(const TensorPoly& t) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : t.terms()) {
        const auto q = rational_to_json(c);
        terms.push_back({{"left", k.first}, {"right", k.second}, {"num", q[0]}, {"den", q[1]}});
    }
    return {{"alphabet", alphabet_name(t.alphabet())}, {"terms", terms}};
}

}  // namespace tchebint
