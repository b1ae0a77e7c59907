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

#ifndef TCHEBINT_RATIONAL_HPP
#define TCHEBINT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include <json.hpp>

namespace tchebint {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// [num, den] with integer strings when they do not fit in 64 bits
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json bigint_to_json(const BigInt& z);
BigInt bigint_from_json(const nlohmann::json& j);

BigInt binomial(long n, long k);
BigInt pow2(long e);

}  // namespace tchebint

#endif
