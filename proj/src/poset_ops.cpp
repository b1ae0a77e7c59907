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
#include <functional>
#include <numeric>

#include "tchebint/error.hpp"
#include "tchebint/poset.hpp"

namespace tchebint {

namespace {

Poset from_relation(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq) {
    const std::size_t n = labels.size();
    std::vector<Bitset> rel(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (leq(x, y)) rel[x].set(y);
    return Poset::from_order(std::move(labels), rel);
}

Poset induced(const Poset& p, const std::vector<std::size_t>& elems) {
    std::vector<std::string> labels;
    for (auto x : elems) labels.push_back(p.label(x));
    return from_relation(std::move(labels), [&](std::size_t i, std::size_t j) { return p.leq(elems[i], elems[j]); });
}

std::string set_label(const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out;
}

std::vector<int> mask_elements(unsigned mask, int n) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s.push_back(i + 1);
    return s;
}

void require_size(int n, int max) {
    if (n < 1) throw Error(Errc::InvalidSize, "n must be at least 1");
    if (n > max) throw Error(Errc::TooLarge, "n = " + std::to_string(n));
}

GradedPoset boolean_algebra(int n) {
    require_size(n, 12);
    std::vector<unsigned> masks(1u << n);
    std::iota(masks.begin(), masks.end(), 0u);
    std::sort(masks.begin(), masks.end(), [&](unsigned x, unsigned y) {
        const int px = __builtin_popcount(x), py = __builtin_popcount(y);
        if (px != py) return px < py;
        return mask_elements(x, n) < mask_elements(y, n);
    });
    std::vector<std::string> labels;
    for (auto m : masks) labels.push_back("{" + set_label(mask_elements(m, n)) + "}");
    return GradedPoset(from_relation(std::move(labels), [&](std::size_t i, std::size_t j) {
        return (masks[i] & ~masks[j]) == 0;
    }));
}

GradedPoset chain(int n) {
    require_size(n, 4096);
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
    return GradedPoset(from_relation(std::move(labels), [](std::size_t i, std::size_t j) { return i <= j; }));
}

GradedPoset ladder(int n) {
    require_size(n, 1024);
    std::vector<std::string> labels{"0̂"};
    std::vector<int> rank{0};
    for (int i = 1; i <= n; ++i) {
        labels.push_back(std::to_string(i));
        labels.push_back("-" + std::to_string(i));
        rank.push_back(i);
        rank.push_back(i);
    }
    labels.push_back("1̂");
    rank.push_back(n + 1);
    return GradedPoset(from_relation(std::move(labels), [&](std::size_t i, std::size_t j) {
        return i == j || rank[i] < rank[j];
    }));
}

GradedPoset cube_lattice(int n) {
    require_size(n, 8);
    std::vector<std::string> words{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (char ch : {'0', '1', '*'}) next.push_back(w + ch);
        words = std::move(next);
    }
    std::stable_sort(words.begin(), words.end(), [](const std::string& x, const std::string& y) {
        const auto sx = std::count(x.begin(), x.end(), '*'), sy = std::count(y.begin(), y.end(), '*');
        if (sx != sy) return sx < sy;
        return x < y;
    });
    std::vector<std::string> labels{kEmptyInterval};
    labels.insert(labels.end(), words.begin(), words.end());
    return GradedPoset(from_relation(labels, [&](std::size_t i, std::size_t j) {
        if (i == 0) return true;
        if (j == 0) return false;
        const auto &u = words[i - 1], &v = words[j - 1];
        for (int k = 0; k < n; ++k)
            if (v[k] != '*' && v[k] != u[k]) return false;
        return true;
    }));
}

GradedPoset crosspolytope_lattice(int n) {
    require_size(n, 8);
    std::vector<std::pair<unsigned, unsigned>> faces;
    for (unsigned pos = 0; pos < (1u << n); ++pos)
        for (unsigned neg = 0; neg < (1u << n); ++neg)
            if ((pos & neg) == 0) faces.emplace_back(pos, neg);
    std::vector<std::string> labels;
    for (auto [pos, neg] : faces)
        labels.push_back("(" + set_label(mask_elements(pos, n)) + "|" + set_label(mask_elements(neg, n)) + ")");
    std::vector<std::size_t> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const int rx = __builtin_popcount(faces[x].first | faces[x].second);
        const int ry = __builtin_popcount(faces[y].first | faces[y].second);
        if (rx != ry) return rx < ry;
        return labels[x] < labels[y];
    });
    std::vector<std::string> sorted_labels;
    std::vector<std::pair<unsigned, unsigned>> sorted_faces;
    for (auto i : order) {
        sorted_labels.push_back(labels[i]);
        sorted_faces.push_back(faces[i]);
    }
    sorted_labels.push_back("1̂");
    const std::size_t top = sorted_faces.size();
    return GradedPoset(from_relation(std::move(sorted_labels), [&](std::size_t i, std::size_t j) {
        if (j == top) return true;
        if (i == top) return false;
        return (sorted_faces[i].first & ~sorted_faces[j].first) == 0 &&
               (sorted_faces[i].second & ~sorted_faces[j].second) == 0;
    }));
}

}  // namespace

Family family_from_name(std::string_view name) {
    if (name == "boolean") return Family::Boolean;
    if (name == "ladder") return Family::Ladder;
    if (name == "chain") return Family::Chain;
    if (name == "cube") return Family::CubeLattice;
    if (name == "crosspolytope") return Family::CrosspolytopeLattice;
    throw Error(Errc::ParseError, "unknown poset family '" + std::string(name) + "'");
}

GradedPoset generate(Family kind, int n) {
    switch (kind) {
        case Family::Boolean: return boolean_algebra(n);
        case Family::Ladder: return ladder(n);
        case Family::Chain: return chain(n);
        case Family::CubeLattice: return cube_lattice(n);
        case Family::CrosspolytopeLattice: return crosspolytope_lattice(n);
    }
    throw Error(Errc::InvalidSize, "unknown family");
}

GradedPoset dual(const GradedPoset& p) {
    const Poset& q = p.poset();
    return GradedPoset(from_relation(q.labels(), [&](std::size_t i, std::size_t j) { return q.leq(j, i); }));
}

GradedPoset direct_product(const GradedPoset& p, const GradedPoset& q) {
    const std::size_t m = q.size();
    if (p.size() * m > 4096) throw Error(Errc::TooLarge, "product has more than 4096 elements");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
    return GradedPoset(from_relation(std::move(labels), [&](std::size_t x, std::size_t y) {
        return p.leq(x / m, y / m) && q.leq(x % m, y % m);
    }));
}

Poset direct_product(const Poset& p, const Poset& q) {
    const std::size_t m = q.size();
    if (p.size() * m > 4096) throw Error(Errc::TooLarge, "product has more than 4096 elements");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
    return from_relation(std::move(labels), [&](std::size_t x, std::size_t y) {
        return p.leq(x / m, y / m) && q.leq(x % m, y % m);
    });
}

GradedPoset diamond_product(const GradedPoset& p, const GradedPoset& q) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::string> labels{"0̂"};
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (i != p.bottom() && j != q.bottom()) {
                pairs.emplace_back(i, j);
                labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
            }
    return GradedPoset(from_relation(std::move(labels), [&](std::size_t x, std::size_t y) {
        if (x == 0) return true;
        if (y == 0) return false;
        return p.leq(pairs[x - 1].first, pairs[y - 1].first) && q.leq(pairs[x - 1].second, pairs[y - 1].second);
    }));
}

GradedPoset closed_interval(const GradedPoset& p, std::size_t lo, std::size_t hi) {
    if (!p.leq(lo, hi)) throw Error(Errc::NotAChain, p.label(lo) + " is not below " + p.label(hi));
    std::vector<std::size_t> elems;
    for (std::size_t z = 0; z < p.size(); ++z)
        if (p.leq(lo, z) && p.leq(z, hi)) elems.push_back(z);
    return GradedPoset(induced(p.poset(), elems));
}

std::string interval_label(const std::string& u, const std::string& v) { return "[" + u + "," + v + "]"; }

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_intervals(const Poset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < p.size(); ++u)
        for (auto v = p.up_set(u).find_first(); v != Bitset::npos; v = p.up_set(u).find_next(v)) out.emplace_back(u, v);
    return out;
}

}  // namespace

Poset interval_poset(const Poset& p) {
    const auto iv = all_intervals(p);
    if (iv.size() > 8192) throw Error(Errc::TooLarge, "too many intervals");
    std::vector<std::string> labels;
    for (auto [u, v] : iv) labels.push_back(interval_label(p.label(u), p.label(v)));
    return from_relation(std::move(labels), [&](std::size_t x, std::size_t y) {
        return p.leq(iv[y].first, iv[x].first) && p.leq(iv[x].second, iv[y].second);
    });
}

GradedPoset graded_interval_poset(const GradedPoset& gp) {
    const Poset& p = gp.poset();
    const auto iv = all_intervals(p);
    if (iv.size() > 8192) throw Error(Errc::TooLarge, "too many intervals");
    std::vector<std::string> labels{kEmptyInterval};
    for (auto [u, v] : iv) labels.push_back(interval_label(p.label(u), p.label(v)));
    return GradedPoset(from_relation(std::move(labels), [&](std::size_t x, std::size_t y) {
        if (x == 0) return true;
        if (y == 0) return false;
        return p.leq(iv[y - 1].first, iv[x - 1].first) && p.leq(iv[x - 1].second, iv[y - 1].second);
    }));
}

PosetMultiset second_kind_transform(const GradedPoset& gp) {
    const Poset& p = gp.poset();
    const Poset ip = interval_poset(p);
    const std::size_t whole = ip.index_of(interval_label(p.label(gp.bottom()), p.label(gp.top())));
    PosetMultiset out;
    for (std::size_t x = 0; x < p.size(); ++x) {
        const std::size_t point = ip.index_of(interval_label(p.label(x), p.label(x)));
        std::vector<std::size_t> elems;
        for (std::size_t j = 0; j < ip.size(); ++j)
            if (ip.leq(point, j) && ip.leq(j, whole)) elems.push_back(j);
        out.push_back({p.label(x), GradedPoset(induced(ip, elems))});
    }
    return out;
}

PosetMultiset second_kind_via_products(const GradedPoset& p) {
    PosetMultiset out;
    for (std::size_t x = 0; x < p.size(); ++x)
        out.push_back({p.label(x), direct_product(dual(closed_interval(p, p.bottom(), x)),
                                                  closed_interval(p, x, p.top()))});
    return out;
}

bool is_eulerian(const GradedPoset& gp) {
    const Poset& p = gp.poset();
    Bitset even(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (gp.rank(x) % 2 == 0) even.set(x);
    for (std::size_t u = 0; u < p.size(); ++u)
        for (auto v = p.up_set(u).find_first(); v != Bitset::npos; v = p.up_set(u).find_next(v)) {
            if (v == u) continue;
            const Bitset interval = p.up_set(u) & p.down_set(v);
            const auto n_even = (interval & even).count();
            if (2 * n_even != interval.count()) return false;
        }
    return true;
}

std::uint64_t count_chains_with_support(const GradedPoset& gp, const std::vector<std::string>& support) {
    std::vector<std::size_t> z;
    for (const auto& l : support) z.push_back(gp.index_of(l));
    std::sort(z.begin(), z.end(), [&](std::size_t x, std::size_t y) { return gp.rank(x) < gp.rank(y); });
    for (std::size_t i = 1; i < z.size(); ++i)
        if (!gp.less(z[i - 1], z[i])) throw Error(Errc::NotAChain, "support elements are not a strict chain");
    if (z.empty() || z.front() != gp.bottom() || z.back() != gp.top())
        throw Error(Errc::EndpointsNotExtreme, "support must run from the minimum to the maximum");
    const std::size_t m = z.size();
    if (m > 20) throw Error(Errc::TooLarge, "support too long");
    const unsigned full = (1u << m) - 1;
    // chains descend from [z_0, z_{m-1}] through strictly smaller intervals
    std::function<std::uint64_t(std::size_t, std::size_t, unsigned)> rec = [&](std::size_t i, std::size_t j,
                                                                                unsigned mask) -> std::uint64_t {
        std::uint64_t total = mask == full ? 1 : 0;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) {
                if (a == i && b == j) continue;
                if (!(gp.leq(z[i], z[a]) && gp.leq(z[b], z[j]))) continue;
                total += rec(a, b, mask | (1u << a) | (1u << b));
            }
        return total;
    };
    return rec(0, m - 1, 1u | (1u << (m - 1)));
}

std::uint64_t pell(int n) {
    if (n <= 0) return 0;
    std::uint64_t a = 0, b = 1;
    for (int i = 1; i < n; ++i) {
        const std::uint64_t c = 2 * b + a;
        a = b;
        b = c;
    }
    return b;
}

}  // namespace tchebint
