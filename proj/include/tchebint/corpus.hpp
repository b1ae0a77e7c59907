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

#ifndef TCHEBINT_CORPUS_HPP
#define TCHEBINT_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tchebint/poset.hpp"
#include "tchebint/simplicial.hpp"

namespace tchebint {

struct NamedPoset {
    std::string name;
    GradedPoset poset;
};

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

// B1-B4, L1-L4, chains of rank 1-4, cube lattices 1-3
std::vector<NamedPoset> base_posets();
// rank-respecting subposets of B4 with both bounds, repaired until graded
std::vector<NamedPoset> random_boolean_subposets(std::uint64_t seed, int count = 20);
// base posets, their duals, pairwise products up to the cap, random subposets
std::vector<NamedPoset> poset_corpus(std::uint64_t seed = 0, std::size_t product_cap = 200);

// u1 < u2 < u3 and u1 < u4
Poset figure2_poset();
// four vertices, five edges, two triangles sharing v1v2
SimplicialComplex figure1_complex();
std::vector<NamedComplex> complex_corpus(std::uint64_t seed = 0);

}  // namespace tchebint

#endif
