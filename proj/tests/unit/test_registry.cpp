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
#include <set>

#include <qtheta/error.hpp>
#include <qtheta/registry.hpp>

#include "../support/temp_file.hpp"

using namespace qtheta;
using testing_support::TempFile;

namespace {

const char* const user_identity = R"(# user identity
identity user-geometric ;
  params a ;
  require notone(a) ;
  lhs 1/(1 - a*q) ;
  rhs sum(n, 0, inf, a^n*q^n, n) ;
  source "geometric series"
)";

bool has(const std::vector<IdentityDef>& defs, std::string_view name)
{
    return std::any_of(defs.begin(), defs.end(), [&](const auto& d) { return d.name == name; });
}

} // namespace

TEST_SUITE("registry")
{
TEST_CASE("built-in corpus")
{
    const auto defs = builtin_identities();
    CHECK(defs.size() >= 40);
    std::set<std::string> names;
    for (const auto& d : defs) {
        CHECK(names.insert(d.name).second);
        CHECK_FALSE(d.source.empty());
    }
    for (const char* name : {"jacobi", "phi65-0", "phi65-6", "ramanujan-p4", "ramanujan-p12", "warnaar-1.4",
                             "andrews-warnaar-1.5", "schilling-warnaar-1.6", "alladi-berkovich", "wang-ma-thm1.1-0",
                             "wang-ma-thm1.1-4", "thm1.2", "thm1.3", "thm2.1-2", "thm2.1-5", "cor2.2-2", "cor2.2-4",
                             "thm3.2", "thm3.3", "cor3.4", "thm3.5", "cor3.6", "thm3.7", "cor3.8", "prop3.9",
                             "cor3.10", "final-sum", "thm4.1", "S-relation", "thm4.2", "cor4.3", "thm4.4", "thm4.5",
                             "theta-shift"}) {
        CHECK_MESSAGE(has(defs, name), name);
    }
    CHECK(has(defs, "eq4.1"));
}

TEST_CASE("user file adds identities")
{
    TempFile file(user_identity);
    const auto base = load_registry();
    const auto defs = load_registry({file.path()});
    CHECK(defs.size() == base.size() + 1);
    CHECK(has(defs, "user-geometric"));
    const auto& d = defs.back();
    CHECK(d.params == std::vector<std::string>{"a"});
    CHECK(d.source == "geometric series");
}

TEST_CASE("duplicate names are rejected")
{
    TempFile file(R"(identity jacobi ; params x ; lhs x ; rhs x ; source "dup")");
    CHECK_THROWS_AS(load_registry({file.path()}), RegistryError);
    TempFile twice(std::string(user_identity) + user_identity);
    CHECK_THROWS_AS(load_registry({twice.path()}), RegistryError);
}

TEST_CASE("file errors name the location")
{
    try {
        (void)parse_identities("identity x ;\n  params a ;\n  lhs a + ;\n  rhs a", "f.qid");
        FAIL("expected RegistryError");
    } catch (const RegistryError& e) {
        CHECK(std::string(e.what()).starts_with("f.qid:3:"));
    }
    CHECK_THROWS_AS(parse_identities("identity x ; params a ; lhs b ; rhs a", "f"), RegistryError);
    CHECK_THROWS_AS(parse_identities("identity x ; params a ; lhs a", "f"), RegistryError);
    CHECK_THROWS_AS(parse_identities("identity x ; params a ; lhs a ; lhs a ; rhs a", "f"), RegistryError);
    CHECK_THROWS_AS(parse_identities("identity x ; params q ; lhs q ; rhs q", "f"), RegistryError);
    CHECK_THROWS_AS(parse_identities("identity x ; params a ; require odd(a) ; lhs a ; rhs a", "f"), RegistryError);
    CHECK_THROWS_AS(load_registry({"/nonexistent/file.qid"}), RegistryError);
}

TEST_CASE("filters")
{
    const auto defs = builtin_identities();
    const auto thm21 = filter_identities(defs, "thm2.1-*");
    CHECK(thm21.size() == 4);
    for (const auto& d : thm21) {
        CHECK(d.name.starts_with("thm2.1-"));
    }
    CHECK(filter_identities(defs, "no-such-*").empty());
    CHECK(filter_identities(defs, "*").size() == defs.size());
    CHECK(filter_identities(defs, "jacobi").size() == 1);
    CHECK(name_matches("phi65-?", "phi65-3"));
    CHECK_FALSE(name_matches("phi65-?", "phi65-10"));
}
}
