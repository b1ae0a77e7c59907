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

#ifndef TCHEBINT_NCPOLY_HPP
#define TCHEBINT_NCPOLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tchebint/rational.hpp"

namespace tchebint {

enum class Alphabet { AB, CD, CE };

std::string_view alphabet_name(Alphabet a) noexcept;  // "ab", "cd", "ce"
Alphabet alphabet_from_name(std::string_view name);
char first_letter(Alphabet a) noexcept;
char second_letter(Alphabet a) noexcept;
bool is_letter(Alphabet a, char ch) noexcept;

// Words are plain letter strings; the empty word is the unit.
using Word = std::string;

// weighted degree first (d counts 2), then lexicographic
struct WordOrder {
    static std::size_t weight(const Word& w) noexcept {
        std::size_t n = w.size();
        for (char ch : w) n += ch == 'd';
        return n;
    }
    bool operator()(const Word& x, const Word& y) const noexcept {
        const std::size_t wx = weight(x), wy = weight(y);
        if (wx != wy) return wx < wy;
        return x < y;
    }
};

// c and e count 1, d counts 2
int word_degree(const Word& w, Alphabet a) noexcept;

// all words of the given degree, in canonical order
std::vector<Word> words_of_degree(Alphabet a, int degree);

class NCPoly {
   public:
    using Terms = std::map<Word, Rational, WordOrder>;

    explicit NCPoly(Alphabet a = Alphabet::AB) : alphabet_(a) {}

    static NCPoly one(Alphabet a) { return monomial(a, Word{}); }
    static NCPoly monomial(Alphabet a, const Word& w, const Rational& c = 1);
    // accepts the to_string format, e.g. "c^2 + 2d", "a - 3/2ba^2", "1"
    static NCPoly parse(Alphabet a, std::string_view text);

    Alphabet alphabet() const noexcept { return alphabet_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coeff(const Word& w) const;

    void add_term(const Word& w, const Rational& c);

    bool is_homogeneous() const;
    int degree() const;  // maximal word degree, -1 for zero
    NCPoly homogeneous_part(int degree) const;

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rational& r);
    NCPoly& operator*=(const NCPoly& o);

    friend NCPoly operator+(NCPoly x, const NCPoly& y) { return x += y; }
    friend NCPoly operator-(NCPoly x, const NCPoly& y) { return x -= y; }
    friend NCPoly operator*(const NCPoly& x, const NCPoly& y);
    friend NCPoly operator*(NCPoly x, const Rational& r) { return x *= r; }
    friend NCPoly operator*(const Rational& r, NCPoly x) { return x *= r; }
    friend NCPoly operator-(NCPoly x) { return x *= Rational(-1); }
    friend bool operator==(const NCPoly& x, const NCPoly& y) {
        return x.alphabet_ == y.alphabet_ && x.terms_ == y.terms_;
    }

    std::string to_string() const;

   private:
    void check_alphabet(const NCPoly& o) const;

    Alphabet alphabet_;
    Terms terms_;
};

std::string word_to_string(const Word& w);  // "a^2b", "1" for the empty word

NCPoly reverse_star(const NCPoly& p);
Word reverse_word(Word w);

// algebra homomorphism given by letter images
NCPoly substitute(const NCPoly& p, const std::map<char, NCPoly>& images);

// linear extension of a word-level map
template <class F>
NCPoly apply_linear(const NCPoly& p, Alphabet out, F&& f) {
    NCPoly r(out);
    for (const auto& [w, c] : p.terms()) r += c * f(w);
    return r;
}

enum class CdConvention { Psi, Upsilon };

NCPoly expand_cd(const NCPoly& cd, CdConvention conv = CdConvention::Psi);
NCPoly expand_ce(const NCPoly& ce);  // c = a+b, e = a-b
NCPoly rewrite_ab_to_cd(const NCPoly& ab, CdConvention conv = CdConvention::Psi);

NCPoly cd_to_ce(const NCPoly& cd);
NCPoly ce_to_cd(const NCPoly& ce);

class TensorPoly {
   public:
    using Key = std::pair<Word, Word>;
    struct KeyOrder {
        bool operator()(const Key& x, const Key& y) const noexcept {
            WordOrder o;
            if (x.first != y.first) return o(x.first, y.first);
            return o(x.second, y.second);
        }
    };
    using Terms = std::map<Key, Rational, KeyOrder>;

    explicit TensorPoly(Alphabet a = Alphabet::AB) : alphabet_(a) {}

    Alphabet alphabet() const noexcept { return alphabet_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Word& l, const Word& r) const;
    void add_term(const Word& l, const Word& r, const Rational& c);

    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator*=(const Rational& r);
    friend bool operator==(const TensorPoly& x, const TensorPoly& y) {
        return x.alphabet_ == y.alphabet_ && x.terms_ == y.terms_;
    }

    std::string to_string() const;

   private:
    Alphabet alphabet_;
    Terms terms_;
};

// letter-deletion coproduct; CD inputs go through the Psi expansion
TensorPoly coproduct_delta(const NCPoly& p);
// deletion of one letter b, AB only
TensorPoly coproduct_delta_prime(const NCPoly& p);

struct SymAsym {
    NCPoly sym;
    NCPoly asym;
};
SymAsym sym_asym_split(const NCPoly& p);
std::vector<NCPoly> asym_basis(int n);
std::vector<NCPoly> sym_basis(int n);

nlohmann::json to_json(const NCPoly& p);
NCPoly ncpoly_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TensorPoly& t);

}  // namespace tchebint

#endif
