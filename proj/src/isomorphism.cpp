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

#include <algorithm>
#include <map>

#include "tchebint/error.hpp"
#include "tchebint/poset.hpp"

namespace tchebint {

namespace {

using Signature = std::vector<long>;

struct Palette {
    std::map<Signature, int> ids;
    int id(const Signature& s) { return ids.try_emplace(s, static_cast<int>(ids.size())).first->second; }
};

std::vector<long> heights(const Poset& p) {
    // longest chain ending at x; labels are not topologically sorted in general
    std::vector<long> h(p.size(), -1);
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return p.down_set(x).count() < p.down_set(y).count(); });
    for (auto x : order) {
        long best = 0;
        for (auto y : p.lower_covers(x)) best = std::max(best, h[y] + 1);
        h[x] = best;
    }
    return h;
}

std::vector<int> initial_colors(const Poset& p, Palette& pal) {
    const auto h = heights(p);
    std::vector<int> c(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        c[x] = pal.id({static_cast<long>(p.down_set(x).count()), static_cast<long>(p.up_set(x).count()),
                       static_cast<long>(p.lower_covers(x).size()), static_cast<long>(p.upper_covers(x).size()), h[x]});
    return c;
}

std::vector<int> refine(const Poset& p, const std::vector<int>& c, Palette& pal) {
    std::vector<int> out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        Signature s{c[x], -1};
        std::vector<long> up, down;
        for (auto y : p.upper_covers(x)) up.push_back(c[y]);
        for (auto y : p.lower_covers(x)) down.push_back(c[y]);
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        s.insert(s.end(), up.begin(), up.end());
        s.push_back(-2);
        s.insert(s.end(), down.begin(), down.end());
        out[x] = pal.id(s);
    }
    return out;
}

std::size_t classes(const std::vector<int>& c) {
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

}  // namespace

bool is_isomorphic(const Poset& p, const Poset& q, std::size_t cap) {
    const std::size_t n = p.size();
    if (n != q.size()) return false;
    if (n > cap) throw Error(Errc::TooLarge, std::to_string(n) + " elements exceed the isomorphism cap");
    if (n == 0) return true;
    if (p.cover_pairs().size() != q.cover_pairs().size()) return false;

    Palette pal;
    auto cp = initial_colors(p, pal);
    auto cq = initial_colors(q, pal);
    for (std::size_t round = 0; round < n; ++round) {
        auto np = refine(p, cp, pal);
        auto nq = refine(q, cq, pal);
        const bool stable = classes(np) == classes(cp) && classes(nq) == classes(cq);
        cp = std::move(np);
        cq = std::move(nq);
        if (stable) break;
    }
    {
        auto sp = cp, sq = cq;
        std::sort(sp.begin(), sp.end());
        std::sort(sq.begin(), sq.end());
        if (sp != sq) return false;
    }
    std::map<int, std::size_t> class_size;
    for (int c : cp) ++class_size[c];

    // place elements so that each new one is adjacent to as many placed ones as possible
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    std::vector<int> links(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t x = 0; x < n; ++x) {
            if (placed[x]) continue;
            if (best == n || links[x] > links[best] ||
                (links[x] == links[best] && class_size[cp[x]] < class_size[cp[best]]))
                best = x;
        }
        placed[best] = true;
        order.push_back(best);
        for (auto y : p.upper_covers(best)) ++links[y];
        for (auto y : p.lower_covers(best)) ++links[y];
    }

    std::vector<std::size_t> image(n, n);
    std::vector<bool> used(n, false);
    auto consistent = [&](std::size_t k, std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t a = order[i], b = image[a];
            if (p.leq(x, a) != q.leq(y, b) || p.leq(a, x) != q.leq(b, y)) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, std::size_t k) -> bool {
        if (k == n) return true;
        const std::size_t x = order[k];
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || cq[y] != cp[x] || !consistent(k, x, y)) continue;
            used[y] = true;
            image[x] = y;
            if (self(self, k + 1)) return true;
            used[y] = false;
        }
        image[x] = n;
        return false;
    };
    return search(search, 0);
}

}  // namespace tchebint
