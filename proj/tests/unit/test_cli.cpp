// Copyright 2026 The qtheta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../../tools/cli.hpp"
#include "../support/temp_file.hpp"

using testing_support::TempFile;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "qtheta");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = qtheta::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const char* const wrong_identity = R"(identity wrong ;
  params a ;
  require notone(a) ;
  lhs 1/(1 - a*q) ;
  rhs 1 + a*q ;
  source "truncated geometric series"
)";

} // namespace

TEST_SUITE("cli")
{
TEST_CASE("eval")
{
    const auto r = run({"eval", "1/(1-q)", "--order", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + q + q^2 + q^3 + O(q^4)\n");
    const auto p = run({"eval", "theta(a) - theta(b)", "--params", "a=2,b=2/3", "--order", "3"});
    CHECK(p.code == 0);
    CHECK(p.out == "-4/3 + 32/9*q + O(q^3)\n");
    CHECK(run({"eval", "a^q", "--order", "5"}).code == 2);
    CHECK(run({"eval", "a + 1", "--order", "5"}).code == 2);
    CHECK(run({"eval", "1/(q - q)", "--order", "5"}).code == 2);
    CHECK(run({"eval", "1 +", "--order", "5"}).code == 2);
}

TEST_CASE("express-pm")
{
    const auto r = run({"express-pm", "--m", "2", "--params", "a=2,b=3", "--order", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("theta(q,a): -2\n") != std::string::npos);
    CHECK(r.out.find("theta(q,b): 3\n") != std::string::npos);
    CHECK(r.out.find("residual zero to O(q^") != std::string::npos);
    CHECK(run({"express-pm", "--m", "2", "--params", "a=2,b=2", "--order", "10"}).code == 2);
    CHECK(run({"express-pm", "--m", "1", "--params", "a=2,b=3", "--order", "10"}).code == 2);
}

TEST_CASE("verify exit codes")
{
    const auto ok = run({"verify", "thm1.*", "--order", "10", "--trials", "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("2 passed / 0 failed") != std::string::npos);

    TempFile file(wrong_identity);
    const auto bad = run({"verify", "wrong", "--file", file.path(), "--order", "10", "--trials", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL wrong") != std::string::npos);
    CHECK(bad.out.find("0 passed / 1 failed") != std::string::npos);

    const auto none = run({"verify", "no-such-*", "--order", "10"});
    CHECK(none.code == 0);
    CHECK(none.out.find("0 passed / 0 failed") != std::string::npos);

    CHECK(run({"verify", "--order", "3"}).code == 2);
    CHECK(run({"verify", "--file", "/nonexistent.qid"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json output")
{
    TempFile file(wrong_identity);
    const std::vector<std::string> args{"verify", "*", "--file", file.path(), "--order", "10",
                                        "--trials", "2", "--seed", "42", "--json", "--no-timing"};
    auto filtered = args;
    filtered[1] = "phi65-[01]";
    const auto x = run(filtered);
    const auto y = run(filtered);
    CHECK(x.code == 0);
    CHECK(x.out == y.out);

    const auto doc = nlohmann::json::parse(x.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    for (const auto& rep : doc) {
        CHECK(rep["millis"] == 0);
        CHECK(rep["pass"] == true);
        CHECK(rep.contains("identity"));
        CHECK(rep.contains("source"));
        CHECK(rep["order"] == 10);
        for (const auto& t : rep["trials"]) {
            CHECK(t["status"] == "zero");
            CHECK(t["effective_precision"].get<int>() >= 10);
            CHECK(t["binding"].is_object());
        }
    }

    auto only_wrong = args;
    only_wrong[1] = "wrong";
    const auto w = run(only_wrong);
    CHECK(w.code == 1);
    const auto wd = nlohmann::json::parse(w.out);
    CHECK(wd[0]["pass"] == false);
    CHECK(wd[0]["trials"][0]["status"] == "nonzero");
    CHECK(wd[0]["trials"][0]["first_bad"]["exp"] == 2);

    // Text and JSON agree on the verdict.
    auto text = only_wrong;
    text.erase(std::find(text.begin(), text.end(), "--json"));
    CHECK(run(text).code == w.code);

    TempFile out("");
    auto to_file = filtered;
    to_file.push_back("--output");
    to_file.push_back(out.path());
    CHECK(run(to_file).code == 0);
    std::ifstream in(out.path());
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(written == x.out);
}

TEST_CASE("list")
{
    const auto r = run({"list"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("jacobi\t"));
    TempFile file(wrong_identity);
    const auto u = run({"list", "--file", file.path()});
    CHECK(u.out.find("wrong\ttruncated geometric series\n") != std::string::npos);
}
}
