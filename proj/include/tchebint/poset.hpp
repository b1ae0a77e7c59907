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

#ifndef TCHEBINT_POSET_HPP
#define TCHEBINT_POSET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

namespace tchebint {

using Bitset = boost::dynamic_bitset<>;
using Cover = std::pair<std::string, std::string>;

// Finite poset on opaque string labels. The full order is materialized as
// up-set bitsets at construction time.
class Poset {
   public:
    Poset() = default;

    // covers must be acyclic and transitively reduced
    static Poset from_covers(std::vector<std::string> labels, const std::vector<Cover>& covers);
    // order given by a reflexive relation matrix: leq[x][y] iff x <= y
    static Poset from_order(std::vector<std::string> labels, const std::vector<Bitset>& leq);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t x) const { return labels_.at(x); }
    std::optional<std::size_t> find(std::string_view label) const;
    std::size_t index_of(std::string_view label) const;  // throws UnknownLabel

    bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
    bool less(std::size_t x, std::size_t y) const { return x != y && up_[x].test(y); }
    bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

    const Bitset& up_set(std::size_t x) const { return up_[x]; }
    const Bitset& down_set(std::size_t x) const { return down_[x]; }
    const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }
    const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;
    std::vector<Cover> covers() const;

    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;

   private:
    void index_labels();
    void finish_from_up();

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Bitset> up_, down_;
    std::vector<std::vector<std::size_t>> upper_, lower_;
};

class GradedPoset {
   public:
    GradedPoset() = default;
    explicit GradedPoset(Poset p);  // throws NotBounded / NotGraded

    const Poset& poset() const noexcept { return poset_; }
    std::size_t size() const noexcept { return poset_.size(); }
    const std::string& label(std::size_t x) const { return poset_.label(x); }
    std::size_t index_of(std::string_view l) const { return poset_.index_of(l); }
    bool leq(std::size_t x, std::size_t y) const { return poset_.leq(x, y); }
    bool less(std::size_t x, std::size_t y) const { return poset_.less(x, y); }

    int rank(std::size_t x) const { return rank_[x]; }
    int rank() const noexcept { return rank_.empty() ? 0 : rank_[top_]; }
    std::size_t bottom() const noexcept { return bottom_; }
    std::size_t top() const noexcept { return top_; }
    std::vector<std::size_t> elements_of_rank(int r) const;

   private:
    Poset poset_;
    std::vector<int> rank_;
    std::size_t bottom_ = 0, top_ = 0;
};

GradedPoset build_graded(std::vector<std::string> elements, const std::vector<Cover>& covers);

enum class Family { Boolean, Ladder, Chain, CubeLattice, CrosspolytopeLattice };
Family family_from_name(std::string_view name);
GradedPoset generate(Family kind, int n);

GradedPoset dual(const GradedPoset& p);
GradedPoset direct_product(const GradedPoset& p, const GradedPoset& q);
Poset direct_product(const Poset& p, const Poset& q);
GradedPoset diamond_product(const GradedPoset& p, const GradedPoset& q);
// the closed interval [lo, hi] as a graded poset of its own
GradedPoset closed_interval(const GradedPoset& p, std::size_t lo, std::size_t hi);

std::string interval_label(const std::string& u, const std::string& v);
inline const std::string kEmptyInterval = "∅";

Poset interval_poset(const Poset& p);
GradedPoset graded_interval_poset(const GradedPoset& p);

struct PosetMultisetMember {
    std::string generator;  // the element x producing this member
    GradedPoset poset;
};
using PosetMultiset = std::vector<PosetMultisetMember>;

// members [[x,x],[0,1]] cut out of I(P)
PosetMultiset second_kind_transform(const GradedPoset& p);
// members dual([0,x]) x [x,1]
PosetMultiset second_kind_via_products(const GradedPoset& p);

bool is_eulerian(const GradedPoset& p);

std::uint64_t count_chains_with_support(const GradedPoset& p, const std::vector<std::string>& support);
std::uint64_t pell(int n);  // P(1)=1, P(2)=2

inline constexpr std::size_t kIsomorphismCap = 64;
bool is_isomorphic(const Poset& p, const Poset& q, std::size_t cap = kIsomorphismCap);
inline bool is_isomorphic(const GradedPoset& p, const GradedPoset& q, std::size_t cap = kIsomorphismCap) {
    return is_isomorphic(p.poset(), q.poset(), cap);
}

nlohmann::json to_json(const Poset& p);
nlohmann::json to_json(const GradedPoset& p);
GradedPoset graded_poset_from_json(const nlohmann::json& j);
Poset poset_from_json(const nlohmann::json& j);

}  // namespace tchebint

#endif
