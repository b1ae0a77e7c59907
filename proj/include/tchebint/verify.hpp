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

#ifndef TCHEBINT_VERIFY_HPP
#define TCHEBINT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tchebint {

struct VerificationCase {
    std::string description;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool informational = false;  // reported, never counted as a failure
};

struct VerificationReport {
    std::string suite;
    std::vector<VerificationCase> cases;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

// every suite except the aggregate "all"
const std::vector<std::string>& suite_names();
VerificationReport run_suite(std::string_view name, std::uint64_t seed = 0);

nlohmann::json to_json(const VerificationReport& r);

}  // namespace tchebint

#endif
