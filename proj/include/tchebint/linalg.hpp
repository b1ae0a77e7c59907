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

#ifndef TCHEBINT_LINALG_HPP
#define TCHEBINT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tchebint/rational.hpp"

namespace tchebint::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row major

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// basis of {x : m x = 0}, cols = number of columns of m
std::vector<Vector> nullspace(Matrix m, std::size_t cols);

std::optional<Matrix> inverse(Matrix m);

// greedy choice of linearly independent rows, in order of appearance
std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t cols);

Vector multiply(const Matrix& m, const Vector& v);

}  // namespace tchebint::linalg

#endif
