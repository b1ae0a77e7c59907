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


#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, bool stderr_only = false) {
    const std::string cmd = std::string(TCHEBINT_CLI_PATH) + " " + args + (stderr_only ? " 2>&1 >/dev/null" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json json_of(const Run& r) {
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("tchebint_cli_" + name);
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("poset generation") {
        const auto j = json_of(run("poset gen --kind boolean --n 3"));
        CHECK(j.at("elements").size() == 8);
        CHECK(j.at("covers").size() == 12);
        CHECK(json_of(run("poset gen --kind ladder --n 2")).at("elements").size() == 6);
    }

    TEST_CASE("indices") {
        CHECK(json_of(run("index cd --kind boolean --n 3")).at("text") == "c^2 + d");
        CHECK(json_of(run("index cd --kind ladder --n 4")).at("text") == "c^4");
        CHECK(json_of(run("index ab --kind boolean --n 2")).at("text") == "a + b");
        CHECK(run("index cd --kind chain --n 2").code == 2);
    }

    TEST_CASE("chains with prescribed support") {
        const auto j = json_of(run("poset chains --kind ladder --n 2 --support \"0̂,1,1̂\""));
        CHECK(j.at("count") == 7);
    }

    TEST_CASE("transforms") {
        CHECK(json_of(run("transform Iab --expr a")).at("text") == "a^2 + ab + 2ba");
        CHECK(json_of(run("transform Icd --expr c --alphabet cd")).at("text") == "c^2 + 2d");
    }

    TEST_CASE("file input and output") {
        const auto gen = temp_file("b2.json");
        const auto out = temp_file("ib2.json");
        REQUIRE(run("poset gen --kind boolean --n 2 --out " + gen.string()).code == 0);
        REQUIRE(run("poset graded-intervals --in " + gen.string() + " --out " + out.string()).code == 0);
        std::ifstream in(out);
        const auto j = nlohmann::json::parse(in);
        CHECK(j.at("elements").size() == 10);
        std::filesystem::remove(gen);
        std::filesystem::remove(out);
    }

    TEST_CASE("simplicial complexes") {
        const auto path = temp_file("edge.json");
        {
            std::ofstream f(path);
            f << R"({"vertices":["1","2"],"facets":[["1","2"]]})";
        }
        const auto j = json_of(run("complex fvector --in " + path.string()));
        CHECK(j.at("f") == nlohmann::json::array({1, 2, 1}));
        const auto t = json_of(run("complex tcheb --in " + path.string()));
        CHECK(t.at("complex").at("facets").size() == 2);
        std::filesystem::remove(path);
    }

    TEST_CASE("verification exit codes") {
        CHECK(run("verify pell").code == 0);
        CHECK(run("verify --suite ladder").code == 0);
        const Run t = run("verify tcheb-triangulation", true);
        CHECK(t.code == 1);
        CHECK(t.out.find("half the U-transform") != std::string::npos);
        CHECK(t.out.find("2U_(n-1)") == std::string::npos);
        CHECK(t.out.find("FAIL") == t.out.rfind("FAIL"));
        CHECK(run("verify no-such-suite").code == 2);
    }

    TEST_CASE("usage errors") {
        CHECK(run("").code == 64);
        CHECK(run("bogus").code == 64);
        CHECK(run("index cd --n notanumber").code == 64);
    }

    TEST_CASE("deterministic output") {
        CHECK(run("poset gen --kind cube --n 3").out == run("poset gen --kind cube --n 3").out);
        CHECK(run("verify iota").out == run("verify iota").out);
    }
}
