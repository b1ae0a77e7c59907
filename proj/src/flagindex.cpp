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

#include "tchebint/flagindex.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "tchebint/error.hpp"

namespace tchebint {

FlagFVector::FlagFVector(int n, std::vector<BigInt> counts) : n_(n), counts_(std::move(counts)) {
    if (n < 0 || n > 24 || counts_.size() != (std::size_t{1} << n))
        throw Error(Errc::InvalidSize, "flag vector of width " + std::to_string(n));
}

const BigInt& FlagFVector::count(const std::vector<int>& ranks) const {
    unsigned mask = 0;
    for (int r : ranks) {
        if (r < 1 || r > n_) throw Error(Errc::InvalidSize, "rank " + std::to_string(r) + " is not interior");
        mask |= 1u << (r - 1);
    }
    return counts_[mask];
}

FlagFVector flag_f_vector(const GradedPoset& p) {
    const int n = std::max(p.rank() - 1, 0);
    if (n > 20) throw Error(Errc::TooLarge, "rank too large for flag enumeration");
    const std::size_t width = std::size_t{1} << n;
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return p.rank(x) < p.rank(y); });
    // chains[x][S]: chains from the bottom to x whose interior ranks (x included) form S
    std::vector<std::vector<std::uint64_t>> chains(p.size());
    for (auto x : order) {
        auto& cx = chains[x];
        cx.assign(width, 0);
        if (x == p.bottom()) {
            cx[0] = 1;
            continue;
        }
        const bool interior = x != p.top();
        const std::size_t bit = interior ? std::size_t{1} << (p.rank(x) - 1) : 0;
        const Bitset& below = p.poset().down_set(x);
        for (auto y = below.find_first(); y != Bitset::npos; y = below.find_next(y)) {
            if (y == x) continue;
            const auto& cy = chains[y];
            for (std::size_t s = 0; s < width; ++s) {
                if (cy[s] == 0) continue;
                if (__builtin_add_overflow(cx[s | bit], cy[s], &cx[s | bit]))
                    throw Error(Errc::TooLarge, "chain count overflow");
            }
        }
    }
    std::vector<BigInt> counts(width);
    if (p.size() == 1) {
        counts[0] = 1;
    } else {
        for (std::size_t s = 0; s < width; ++s) counts[s] = BigInt(static_cast<unsigned long>(chains[p.top()][s]));
    }
    return FlagFVector(n, std::move(counts));
}

NCPoly upsilon_from_flags(const FlagFVector& f) {
    NCPoly u(Alphabet::AB);
    const int n = f.n();
    for (std::size_t s = 0; s < f.counts().size(); ++s) {
        Word w(static_cast<std::size_t>(n), 'a');
        for (int i = 0; i < n; ++i)
            if (s >> i & 1u) w[static_cast<std::size_t>(i)] = 'b';
        u.add_term(w, Rational(f.counts()[s]));
    }
    return u;
}

NCPoly upsilon(const GradedPoset& p) { return upsilon_from_flags(flag_f_vector(p)); }

NCPoly ab_from_upsilon(const NCPoly& ups) {
    return substitute(ups, {{'a', NCPoly::parse(Alphabet::AB, "a-b")}, {'b', NCPoly::monomial(Alphabet::AB, "b")}});
}

NCPoly ab_index(const GradedPoset& p) { return ab_from_upsilon(upsilon(p)); }

NCPoly cd_index(const GradedPoset& p) {
    const NCPoly ups = upsilon(p);
    const NCPoly via_upsilon = rewrite_ab_to_cd(ups, CdConvention::Upsilon);
    const NCPoly via_psi = rewrite_ab_to_cd(ab_from_upsilon(ups), CdConvention::Psi);
    if (via_upsilon != via_psi)
        throw std::logic_error("cd conventions disagree: " + via_upsilon.to_string() + " vs " + via_psi.to_string());
    return via_psi;
}

NCPoly ce_index(const GradedPoset& p) { return cd_to_ce(cd_index(p)); }

NCPoly total_ab_index(const PosetMultiset& m) {
    NCPoly total(Alphabet::AB);
    for (const auto& member : m) total += ab_index(member.poset);
    return total;
}

nlohmann::json to_json(const FlagFVector& f) {
    nlohmann::json counts = nlohmann::json::array();
    for (std::size_t s = 0; s < f.counts().size(); ++s) {
        std::vector<int> ranks;
        for (int i = 0; i < f.n(); ++i)
            if (s >> i & 1u) ranks.push_back(i + 1);
        counts.push_back({{"S", ranks}, {"f", bigint_to_json(f.counts()[s])}});
    }
    return {{"n", f.n()}, {"counts", counts}};
}

}  // namespace tchebint
