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
#include <deque>
#include <set>

#include "tchebint/error.hpp"
#include "tchebint/poset.hpp"

namespace tchebint {

void Poset::index_labels() {
    index_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (!index_.emplace(labels_[i], i).second) throw Error(Errc::DuplicateLabel, labels_[i]);
}

void Poset::finish_from_up() {
    const std::size_t n = labels_.size();
    down_.assign(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x)
        for (auto y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y)) down_[y].set(x);
    upper_.assign(n, {});
    lower_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
        Bitset strict = up_[x];
        strict.reset(x);
        Bitset cov = strict;
        for (auto z = strict.find_first(); z != Bitset::npos; z = strict.find_next(z)) {
            Bitset above = up_[z];
            above.reset(z);
            cov -= above;
        }
        for (auto y = cov.find_first(); y != Bitset::npos; y = cov.find_next(y)) {
            upper_[x].push_back(y);
            lower_[y].push_back(x);
        }
    }
}

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<Cover>& covers) {
    Poset p;
    p.labels_ = std::move(labels);
    p.index_labels();
    const std::size_t n = p.labels_.size();
    std::vector<std::set<std::size_t>> succ(n);
    for (const auto& [lo, hi] : covers) {
        const std::size_t x = p.index_of(lo), y = p.index_of(hi);
        if (x == y) throw Error(Errc::CycleDetected, "self cover at " + lo);
        succ[x].insert(y);
    }
    // Kahn order; leftovers mean a cycle
    std::vector<std::size_t> indeg(n, 0), order;
    for (std::size_t x = 0; x < n; ++x)
        for (auto y : succ[x]) ++indeg[y];
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x)
        if (indeg[x] == 0) queue.push_back(x);
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        order.push_back(x);
        for (auto y : succ[x])
            if (--indeg[y] == 0) queue.push_back(y);
    }
    if (order.size() != n) throw Error(Errc::CycleDetected, "cover relation has a cycle");
    p.up_.assign(n, Bitset(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto x = *it;
        p.up_[x].set(x);
        for (auto y : succ[x]) p.up_[x] |= p.up_[y];
    }
    for (std::size_t x = 0; x < n; ++x)
        for (auto y : succ[x])
            for (auto z : succ[x])
                if (z != y && p.up_[z].test(y))
                    throw Error(Errc::NotTransitivelyReduced,
                                "(" + p.labels_[x] + "," + p.labels_[y] + ") is implied via " + p.labels_[z]);
    p.finish_from_up();
    return p;
}

Poset Poset::from_order(std::vector<std::string> labels, const std::vector<Bitset>& leq) {
    Poset p;
    p.labels_ = std::move(labels);
    p.index_labels();
    const std::size_t n = p.labels_.size();
    if (leq.size() != n) throw Error(Errc::InvalidSize, "order matrix size");
    p.up_ = leq;
    for (std::size_t x = 0; x < n; ++x) {
        if (p.up_[x].size() != n) throw Error(Errc::InvalidSize, "order matrix row size");
        p.up_[x].set(x);
    }
    for (std::size_t x = 0; x < n; ++x)
        for (auto y = p.up_[x].find_first(); y != Bitset::npos; y = p.up_[x].find_next(y)) {
            if (y != x && p.up_[y].test(x)) throw Error(Errc::CycleDetected, p.labels_[x] + " ~ " + p.labels_[y]);
            if (!p.up_[y].is_subset_of(p.up_[x]))
                throw Error(Errc::NotTransitivelyReduced, "order relation is not transitive");
        }
    p.finish_from_up();
    return p;
}

std::optional<std::size_t> Poset::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Poset::index_of(std::string_view label) const {
    auto i = find(label);
    if (!i) throw Error(Errc::UnknownLabel, std::string(label));
    return *i;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x)
        for (auto y : upper_[x]) out.emplace_back(x, y);
    return out;
}

std::vector<Cover> Poset::covers() const {
    std::vector<Cover> out;
    for (auto [x, y] : cover_pairs()) out.emplace_back(labels_[x], labels_[y]);
    return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
        if (lower_[x].empty()) out.push_back(x);
    return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
        if (upper_[x].empty()) out.push_back(x);
    return out;
}

GradedPoset::GradedPoset(Poset p) : poset_(std::move(p)) {
    const auto mins = poset_.minimal_elements(), maxs = poset_.maximal_elements();
    if (mins.size() != 1 || maxs.size() != 1)
        throw Error(Errc::NotBounded, std::to_string(mins.size()) + " minimal and " + std::to_string(maxs.size()) +
                                          " maximal elements");
    bottom_ = mins[0];
    top_ = maxs[0];
    rank_.assign(poset_.size(), -1);
    rank_[bottom_] = 0;
    std::deque<std::size_t> queue{bottom_};
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (auto y : poset_.upper_covers(x)) {
            if (rank_[y] == -1) {
                rank_[y] = rank_[x] + 1;
                queue.push_back(y);
            } else if (rank_[y] != rank_[x] + 1) {
                throw Error(Errc::NotGraded, "cover (" + poset_.label(x) + "," + poset_.label(y) + ") skips a rank");
            }
        }
    }
}

std::vector<std::size_t> GradedPoset::elements_of_rank(int r) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
        if (rank_[x] == r) out.push_back(x);
    return out;
}

GradedPoset build_graded(std::vector<std::string> elements, const std::vector<Cover>& covers) {
    return GradedPoset(Poset::from_covers(std::move(elements), covers));
}

nlohmann::json to_json(const Poset& p) {
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [lo, hi] : p.covers()) covers.push_back({lo, hi});
    return {{"elements", p.labels()}, {"covers", covers}};
}

nlohmann::json to_json(const GradedPoset& p) {
    nlohmann::json j = to_json(p.poset());
    nlohmann::json rank = nlohmann::json::object();
    for (std::size_t x = 0; x < p.size(); ++x) rank[p.label(x)] = p.rank(x);
    j["rank"] = rank;
    j["bottom"] = p.label(p.bottom());
    j["top"] = p.label(p.top());
    return j;
}

Poset poset_from_json(const nlohmann::json& j) {
    try {
        std::vector<Cover> covers;
        for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
        return Poset::from_covers(j.at("elements").get<std::vector<std::string>>(), covers);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

GradedPoset graded_poset_from_json(const nlohmann::json& j) {
    GradedPoset p(poset_from_json(j));
    try {
        if (j.contains("bottom") && j.at("bottom").get<std::string>() != p.label(p.bottom()))
            throw Error(Errc::ParseError, "bottom does not match the order");
        if (j.contains("top") && j.at("top").get<std::string>() != p.label(p.top()))
            throw Error(Errc::ParseError, "top does not match the order");
        if (j.contains("rank"))
            for (const auto& [label, r] : j.at("rank").items())
                if (p.rank(p.index_of(label)) != r.get<int>())
                    throw Error(Errc::ParseError, "rank of " + label + " does not match the order");
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    return p;
}

}  // namespace tchebint
