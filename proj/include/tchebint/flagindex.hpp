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

#ifndef TCHEBINT_FLAGINDEX_HPP
#define TCHEBINT_FLAGINDEX_HPP

#include <vector>

#include <json.hpp>

#include "tchebint/ncpoly.hpp"
#include "tchebint/poset.hpp"
#include "tchebint/rational.hpp"

namespace tchebint {

// f_S for S a subset of {1..n}; bit i-1 of the mask stands for rank i
class FlagFVector {
   public:
    FlagFVector(int n, std::vector<BigInt> counts);

    int n() const noexcept { return n_; }
    const std::vector<BigInt>& counts() const noexcept { return counts_; }
    const BigInt& count(unsigned mask) const { return counts_.at(mask); }
    const BigInt& count(const std::vector<int>& ranks) const;

    friend bool operator==(const FlagFVector&, const FlagFVector&) = default;

   private:
    int n_;
    std::vector<BigInt> counts_;
};

FlagFVector flag_f_vector(const GradedPoset& p);

NCPoly upsilon_from_flags(const FlagFVector& f);
NCPoly upsilon(const GradedPoset& p);
NCPoly ab_from_upsilon(const NCPoly& ups);  // a -> a-b
NCPoly ab_index(const GradedPoset& p);
NCPoly cd_index(const GradedPoset& p);  // both conventions, cross-checked
NCPoly ce_index(const GradedPoset& p);

NCPoly total_ab_index(const PosetMultiset& m);

nlohmann::json to_json(const FlagFVector& f);

}  // namespace tchebint

#endif
