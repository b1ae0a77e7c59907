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

#include "tchebint/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tchebint/error.hpp"

namespace tchebint {

std::vector<NamedPoset> base_posets() {
    std::vector<NamedPoset> out;
    for (int n = 1; n <= 4; ++n) out.push_back({"B" + std::to_string(n), generate(Family::Boolean, n)});
    for (int n = 1; n <= 4; ++n) out.push_back({"L" + std::to_string(n), generate(Family::Ladder, n)});
    for (int n = 1; n <= 4; ++n) out.push_back({"chain" + std::to_string(n), generate(Family::Chain, n)});
    for (int n = 1; n <= 3; ++n) out.push_back({"cube" + std::to_string(n), generate(Family::CubeLattice, n)});
    return out;
}

std::vector<NamedPoset> random_boolean_subposets(std::uint64_t seed, int count) {
    const GradedPoset b4 = generate(Family::Boolean, 4);
    std::mt19937_64 rng(seed);
    std::vector<NamedPoset> out;
    for (int k = 0; k < count; ++k) {
        std::set<std::size_t> keep{b4.bottom(), b4.top()};
        for (std::size_t x = 0; x < b4.size(); ++x)
            if (x != b4.bottom() && x != b4.top() && rng() % 2 == 0) keep.insert(x);
        // add elements until every induced cover climbs exactly one rank
        for (;;) {
            std::vector<std::size_t> elems(keep.begin(), keep.end());
            std::pair<std::size_t, std::size_t> gap{0, 0};
            bool found = false;
            for (auto x : elems) {
                for (auto y : elems) {
                    if (!b4.less(x, y) || b4.rank(y) - b4.rank(x) < 2) continue;
                    bool cover = true;
                    for (auto z : elems)
                        if (b4.less(x, z) && b4.less(z, y)) cover = false;
                    if (cover) {
                        gap = {x, y};
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) break;
            std::vector<std::size_t> between;
            for (std::size_t z = 0; z < b4.size(); ++z)
                if (b4.less(gap.first, z) && b4.less(z, gap.second) && b4.rank(z) == b4.rank(gap.first) + 1)
                    between.push_back(z);
            keep.insert(between[rng() % between.size()]);
        }
        std::vector<std::string> labels;
        for (auto x : keep) labels.push_back(b4.label(x));
        std::vector<Cover> covers;
        for (auto x : keep)
            for (auto y : keep)
                if (b4.less(x, y) && b4.rank(y) == b4.rank(x) + 1) covers.emplace_back(b4.label(x), b4.label(y));
        out.push_back({"rand" + std::to_string(k), build_graded(labels, covers)});
    }
    return out;
}

std::vector<NamedPoset> poset_corpus(std::uint64_t seed, std::size_t product_cap) {
    const auto base = base_posets();
    std::vector<NamedPoset> out = base;
    for (const auto& p : base) out.push_back({"dual(" + p.name + ")", dual(p.poset)});
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j)
            if (base[i].poset.size() * base[j].poset.size() <= product_cap)
                out.push_back({base[i].name + "x" + base[j].name, direct_product(base[i].poset, base[j].poset)});
    for (auto& p : random_boolean_subposets(seed)) out.push_back(std::move(p));
    return out;
}

Poset figure2_poset() {
    return Poset::from_covers({"u1", "u2", "u3", "u4"}, {{"u1", "u2"}, {"u2", "u3"}, {"u1", "u4"}});
}

SimplicialComplex figure1_complex() {
    return SimplicialComplex::from_faces({"v1", "v2", "v3", "v4"}, {{"v1", "v2", "v3"}, {"v1", "v2", "v4"}});
}

std::vector<NamedComplex> complex_corpus(std::uint64_t seed) {
    using F = SimplicialComplex::Face;
    std::vector<NamedComplex> out{
        {"fig1", figure1_complex()},
        {"point", SimplicialComplex::from_faces({"p"}, {})},
        {"edge", SimplicialComplex::from_faces({"u", "v"}, {{"u", "v"}})},
        {"path", SimplicialComplex::from_faces({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}})},
        {"two-edges", SimplicialComplex::from_faces({"p", "q", "r", "s"}, {{"p", "q"}, {"r", "s"}})},
        {"triangle", SimplicialComplex::from_faces({"x", "y", "z"}, {{"x", "y", "z"}})},
        {"triangle-boundary", SimplicialComplex::from_faces({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}})},
        {"tetrahedron-boundary",
         SimplicialComplex::from_faces({"1", "2", "3", "4"}, {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}})},
        {"tetrahedron", SimplicialComplex::from_faces({"1", "2", "3", "4"}, {{"1", "2", "3", "4"}})},
        {"fig2-order-complex", order_complex(figure2_poset())},
    };
    std::mt19937_64 rng(seed);
    const std::vector<std::string> verts{"a", "b", "c", "d", "e"};
    for (int k = 0; k < 4; ++k) {
        std::vector<F> facets;
        const int m = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < m; ++i) {
            F f;
            for (const auto& v : verts)
                if (rng() % 2 == 0) f.push_back(v);
            if (f.size() > 3) f.resize(3);
            facets.push_back(f);
        }
        out.push_back({"rand" + std::to_string(k), SimplicialComplex::from_faces(verts, facets)});
    }
    return out;
}

}  // namespace tchebint
