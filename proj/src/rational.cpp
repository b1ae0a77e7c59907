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

#include "tchebint/rational.hpp"

#include "tchebint/error.hpp"

namespace tchebint {

namespace {

nlohmann::json int_to_json(const BigInt& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

BigInt int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_number_unsigned()) return BigInt(j.get<unsigned long>());
    if (j.is_string()) {
        BigInt z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(Errc::ParseError, "bad integer string");
        return z;
    }
    throw Error(Errc::ParseError, "expected integer");
}

}  // namespace

nlohmann::json rational_to_json(const Rational& r) {
    return nlohmann::json::array({int_to_json(r.get_num()), int_to_json(r.get_den())});
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_array() && j.size() == 2) {
        BigInt den = int_from_json(j[1]);
        if (den == 0) throw Error(Errc::ParseError, "zero denominator");
        Rational r(int_from_json(j[0]), den);
        r.canonicalize();
        return r;
    }
    return Rational(int_from_json(j));
}

nlohmann::json bigint_to_json(const BigInt& z) { return int_to_json(z); }
BigInt bigint_from_json(const nlohmann::json& j) { return int_from_json(j); }

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt pow2(long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

}  // namespace tchebint
