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

#include "tchebint/transforms.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "tchebint/error.hpp"
#include "tchebint/flagindex.hpp"

namespace tchebint {

namespace {

// Lookups and inserts are locked; values are computed outside the lock, so a
// racing thread may compute the same entry twice but never corrupts it.
template <class K, class V>
class MemoTable {
   public:
    std::optional<V> find(const K& k) const {
        std::lock_guard lock(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    const V& insert(const K& k, V v) {
        std::lock_guard lock(mu_);
        return map_.try_emplace(k, std::move(v)).first->second;
    }

   private:
    mutable std::mutex mu_;
    std::map<K, V> map_;
};

const Alphabet AB = Alphabet::AB;
const Alphabet CD = Alphabet::CD;

NCPoly ab(std::string_view s) { return NCPoly::parse(AB, s); }
NCPoly wab(const Word& w) { return NCPoly::monomial(AB, w); }
NCPoly wcd(const Word& w) { return NCPoly::monomial(CD, w); }

void require(const NCPoly& p, Alphabet a, const char* what) {
    if (p.alphabet() != a)
        throw Error(Errc::AlphabetMismatch, std::string(what) + " expects alphabet " + std::string(alphabet_name(a)));
}

std::vector<std::pair<Word, Word>> split_word(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    for (std::size_t i = 0; i < w.size(); ++i) out.emplace_back(w.substr(0, i), w.substr(i + 1));
    return out;
}

const TensorPoly& cd_coproduct(const Word& w) {
    static MemoTable<Word, TensorPoly> memo;
    if (auto hit = memo.find(w)) return memo.insert(w, std::move(*hit));
    return memo.insert(w, coproduct_delta(wcd(w)));
}

}  // namespace

NCPoly iota_ab(const Word& w) {
    static MemoTable<Word, NCPoly> memo;
    if (auto hit = memo.find(w)) return *hit;
    for (char ch : w)
        if (ch != 'a' && ch != 'b') throw Error(Errc::AlphabetMismatch, "iota expects an ab-word");
    const NCPoly head = ab("a+2b");
    NCPoly r(AB);
    const auto first = w.find('b');
    if (first == Word::npos) {
        r = head * wab(w);
    } else {
        const auto last = w.rfind('b');
        const std::size_t i = first, j = w.size() - 1 - last;
        if (first == last) {
            const Word swapped = Word(j, 'a') + "b" + Word(i, 'a');
            r = head * (wab(w) + wab(swapped)) + wab("b" + Word(i + j + 1, 'a'));
        } else {
            const Word mid = w.substr(first + 1, last - first - 1);
            r = iota_ab(w.substr(0, last)) * wab("b" + Word(j, 'a')) +
                iota_ab(w.substr(first + 1)) * wab("b" + Word(i, 'a')) +
                iota_ab(mid) * wab("b" + Word(i + j + 1, 'a'));
        }
    }
    return memo.insert(w, std::move(r));
}

NCPoly iota_linear(const NCPoly& p) {
    require(p, AB, "iota");
    return apply_linear(p, AB, iota_ab);
}

bool interval_upsilon_check(const GradedPoset& p) {
    return upsilon(graded_interval_poset(p)) == iota_linear(upsilon(p));
}

namespace {

NCPoly I_ab_word(const Word& w) {
    static MemoTable<Word, NCPoly> memo;
    if (auto hit = memo.find(w)) return *hit;
    NCPoly r(AB);
    if (w.empty()) {
        r = ab("a+b");
    } else {
        const Word u = w.substr(0, w.size() - 1);
        const char x = w.back();
        const NCPoly middle = wab(x == 'a' ? "ab" : "ba");
        r = I_ab_word(u) * wab(Word(1, x)) + ab("ab+ba") * wab(reverse_word(u));
        for (const auto& [u1, u2] : split_word(u)) r += I_ab_word(u2) * middle * wab(reverse_word(u1));
    }
    return memo.insert(w, std::move(r));
}

NCPoly I_cd_word(const Word& w) {
    static MemoTable<Word, NCPoly> memo;
    if (auto hit = memo.find(w)) return *hit;
    NCPoly r(CD);
    if (w.empty()) {
        r = wcd("c");
    } else {
        const Word u = w.substr(0, w.size() - 1);
        const NCPoly us = wcd(reverse_word(u));
        const TensorPoly& cop = cd_coproduct(u);
        if (w.back() == 'c') {
            r = I_cd_word(u) * wcd("c") + 2 * wcd("d") * us;
            for (const auto& [k, coef] : cop.terms())
                r += coef * (I_cd_word(k.second) * wcd("d") * wcd(reverse_word(k.first)));
        } else {
            r = I_cd_word(u) * wcd("d") + NCPoly::parse(CD, "dc+cd") * us + wcd("d") * us * wcd("c");
            for (const auto& [k, coef] : cop.terms()) {
                const Word l_star = reverse_word(k.first);
                r += coef * (I_cd_word(k.second) * wcd("d") * pyr(wcd(l_star)) +
                             wcd("d") * wcd(reverse_word(k.second)) * wcd("d") * wcd(l_star));
            }
        }
    }
    return memo.insert(w, std::move(r));
}

using RsnKey = std::tuple<int, int, int, Word, Word>;

NCPoly M_rsn(int r, int s, int n, const Word& u, const Word& v) {
    static MemoTable<RsnKey, NCPoly> memo;
    if (n < 2) return NCPoly(AB);
    if (n == 2) {
        if (r == 1 && s == 2) return wab(u + "a" + v);
        // the factors swap sides here; u.b.v breaks the symmetry M(u,v) = M(v,u)
        if (r == 2 && s == 1) return wab(v + "b" + u);
        return NCPoly(AB);
    }
    if (static_cast<int>(u.size() + v.size()) + 2 < n) return NCPoly(AB);
    const RsnKey key{r, s, n, u, v};
    if (auto hit = memo.find(key)) return *hit;
    NCPoly out(AB);
    if (r == 1) {
        for (const auto& [u1, u2] : split_word(u)) out += wab(u1 + "a") * M_rsn(2, s, n - 1, u2, v);
    } else {
        for (const auto& [v1, v2] : split_word(v)) out += wab(v1 + "b") * M_rsn(1, s, n - 1, u, v2);
    }
    return memo.insert(key, std::move(out));
}

NCPoly M_cd_word(const Word& u, const Word& v) {
    static MemoTable<std::pair<Word, Word>, NCPoly> memo;
    if (u.empty() && v.empty()) return wcd("c");
    if (v.empty()) return M_cd_word(v, u);
    const auto key = std::make_pair(u, v);
    if (auto hit = memo.find(key)) return *hit;
    const Word vv = v.substr(0, v.size() - 1);
    const TensorPoly* cop = u.empty() ? nullptr : &cd_coproduct(u);
    NCPoly r(CD);
    if (v.back() == 'c') {
        r = wcd(vv + "d" + u) + M_cd_word(u, vv) * wcd("c");
        if (cop)
            for (const auto& [k, coef] : cop->terms()) r += coef * (M_cd_word(k.first, vv) * wcd("d" + k.second));
    } else {
        r = wcd(vv + "d") * M_cd_word(Word{}, u) + M_cd_word(u, vv) * wcd("d");
        if (cop)
            for (const auto& [k, coef] : cop->terms())
                r += coef * (M_cd_word(k.first, vv) * wcd("d") * M_cd_word(Word{}, k.second));
    }
    return memo.insert(key, std::move(r));
}

}  // namespace

NCPoly I_ab(const NCPoly& p) {
    require(p, AB, "I_ab");
    return apply_linear(p, AB, I_ab_word);
}

NCPoly I_cd(const NCPoly& p) {
    require(p, CD, "I_cd");
    return apply_linear(p, CD, I_cd_word);
}

NCPoly mixing_M_def(const Word& u, const Word& v) {
    static MemoTable<std::pair<Word, Word>, NCPoly> memo;
    const auto key = std::make_pair(u, v);
    if (auto hit = memo.find(key)) return *hit;
    for (char ch : u + v)
        if (ch != 'a' && ch != 'b') throw Error(Errc::AlphabetMismatch, "mixing operator expects ab-words");
    NCPoly total(AB);
    const int top = static_cast<int>(u.size() + v.size()) + 2;
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s)
            for (int n = 2; n <= top; ++n)
                if ((n - r - s - 1) % 2 == 0) total += M_rsn(r, s, n, u, v);
    return memo.insert(key, std::move(total));
}

NCPoly mixing_M(const NCPoly& u, const NCPoly& v) {
    require(u, AB, "M");
    require(v, AB, "M");
    NCPoly r(AB);
    for (const auto& [x, cx] : u.terms())
        for (const auto& [y, cy] : v.terms()) r += (cx * cy) * mixing_M_def(x, y);
    return r;
}

NCPoly mixing_M_cd(const NCPoly& u, const NCPoly& v) {
    require(u, CD, "M_cd");
    require(v, CD, "M_cd");
    NCPoly r(CD);
    for (const auto& [x, cx] : u.terms())
        for (const auto& [y, cy] : v.terms()) r += (cx * cy) * M_cd_word(x, y);
    return r;
}

NCPoly pyr(const NCPoly& u) {
    if (u.alphabet() == AB) return mixing_M(NCPoly::one(AB), u);
    if (u.alphabet() == CD) return mixing_M_cd(NCPoly::one(CD), u);
    throw Error(Errc::AlphabetMismatch, "pyr expects ab or cd");
}

NCPoly lift(const NCPoly& u) {
    require(u, AB, "lift");
    const NCPoly e = ab("a-b");
    return e * u + u * e;
}

NCPoly II_ab(const NCPoly& p) {
    require(p, AB, "II_ab");
    static MemoTable<Word, NCPoly> memo;
    return apply_linear(p, AB, [](const Word& w) {
        if (auto hit = memo.find(w)) return *hit;
        NCPoly r = wab(w) + wab(reverse_word(w));
        for (const auto& [u1, u2] : split_word(w)) r += mixing_M_def(reverse_word(u1), u2);
        return memo.insert(w, std::move(r));
    });
}

}  // namespace tchebint
