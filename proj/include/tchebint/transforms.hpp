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

#ifndef TCHEBINT_TRANSFORMS_HPP
#define TCHEBINT_TRANSFORMS_HPP

#include <string_view>
#include <vector>

#include <json.hpp>

#include "tchebint/ncpoly.hpp"
#include "tchebint/poset.hpp"
#include "tchebint/rational.hpp"

namespace tchebint {

NCPoly iota_ab(const Word& w);
NCPoly iota_linear(const NCPoly& p);
bool interval_upsilon_check(const GradedPoset& p);

// the ab-index of the graded interval poset, I_ab(1) = a + b
NCPoly I_ab(const NCPoly& p);
NCPoly I_cd(const NCPoly& p);

NCPoly mixing_M_def(const Word& u, const Word& v);
NCPoly mixing_M(const NCPoly& u, const NCPoly& v);     // bilinear extension of mixing_M_def
NCPoly mixing_M_cd(const NCPoly& u, const NCPoly& v);  // Ehrenborg-Fox recursions

NCPoly pyr(const NCPoly& u);   // M(1,u), in the alphabet of u
NCPoly lift(const NCPoly& u);  // (a-b)u + u(a-b)
NCPoly II_ab(const NCPoly& p);

// half the weighted Delannoy path sum; E, N weigh c and NE weighs 2d - c^2
NCPoly delannoy_M(int i, int j);
Rational mcce_coefficient(int i, int j, int r);

// c^{k_0} d c^{k_1} ... d c^{k_r}
struct KVector {
    std::vector<int> ks;

    int r() const { return static_cast<int>(ks.size()) - 1; }
    int degree() const;
    Word cd_word() const;
    Word ce_word() const;  // d replaced by e^2
    static KVector from_cd_word(const Word& w);
    static KVector from_ce_word(const Word& w);  // e must come in pairs
};

// all KVectors of the given cd-degree
std::vector<KVector> kvectors_of_degree(int degree);

BigInt ladder_cd_coefficient(const KVector& k, int n);     // in I_cd(c^n), requires degree n+1
BigInt ii_ladder_cd_coefficient(const KVector& k, int n);  // in II(c^n), requires degree n
BigInt uce_coefficient(int n, int r);                      // ce-coefficient in II(c^n)
BigInt gamma(int n);                                       // coefficient of c^n in II(c^n)

struct EigenDegree {
    int n = 0;
    std::size_t dim_sym = 0;
    std::size_t dim_asym = 0;
    std::size_t kernel_dim = 0;
    bool asym_in_kernel = false;
    bool kernel_equals_asym = false;
    std::size_t compositions = 0;
    std::size_t eigen_compositions = 0;  // compositions that are eigenvectors
    std::size_t composition_rank = 0;
    bool compositions_span_sym = false;
    bool compositions_are_eigenvectors = false;
};

struct EigenReport {
    std::vector<EigenDegree> degrees;
    std::size_t product_pairs = 0;
    bool product_law_holds = true;
};

EigenReport eigen_experiments(int max_n);
nlohmann::json to_json(const EigenReport& r);

// every composition of Pyr and lift applied to 1 with the given number of steps,
// paired with the eigenvalue 2^(1 + number of Pyr steps)
struct EigenWitness {
    std::string recipe;  // e.g. "PPL" read right to left
    NCPoly vector;
    BigInt eigenvalue;
};
std::vector<EigenWitness> eigen_witnesses(int steps);

}  // namespace tchebint

#endif
