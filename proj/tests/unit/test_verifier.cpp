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
#include <random>

#include <qtheta/dsl/parser.hpp>
#include <qtheta/error.hpp>
#include <qtheta/registry.hpp>
#include <qtheta/report.hpp>
#include <qtheta/verifier.hpp>

#include "../support/mutation.hpp"

using namespace qtheta;

namespace {

const IdentityDef& find(const std::vector<IdentityDef>& defs, std::string_view name)
{
    const auto it = std::find_if(defs.begin(), defs.end(), [&](const auto& d) { return d.name == name; });
    REQUIRE(it != defs.end());
    return *it;
}

IdentityDef one(std::string_view text) { return parse_identities(text, "inline").front(); }

} // namespace

TEST_SUITE("verifier")
{
TEST_CASE("sampling is deterministic and admissible")
{
    const auto defs = builtin_identities();
    const auto& def = find(defs, "thm1.2");
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = sample_params(def, 42, trial, 30);
        const auto y = sample_params(def, 42, trial, 30);
        CHECK(x.values == y.values);
        REQUIRE(x.values.size() == 2);
        const Rational a = x.values[0].second;
        const Rational b = x.values[1].second;
        CHECK(abs(a) != 1);
        CHECK(abs(b) != 1);
        CHECK(a != 0);
        CHECK(a != b);
        CHECK(a != -b);
        CHECK(a * b != 1);
        CHECK(abs(a.get_num()) <= 9);
        CHECK(a.get_den() <= 9);
    }
    CHECK(sample_params(def, 42, 0, 30).values != sample_params(def, 43, 0, 30).values);
}

TEST_CASE("constraints reject bindings")
{
    const auto def = one("identity c ; params a b ; require notone(a*b), distinct(a, b) ; lhs a ; rhs a");
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = sample_params(def, 9, trial, 20);
        CHECK(s.values[0].second * s.values[1].second != 1);
    }
    const auto impossible = one("identity c ; params a ; require nonzero(a - a) ; lhs a ; rhs a");
    CHECK_THROWS_AS(sample_params(impossible, 1, 0, 20), SamplingError);
    const auto report = verify_identity(impossible, {20, 1, 1, false});
    CHECK_FALSE(report.pass);
    REQUIRE(report.trials.size() == 1);
    CHECK(report.trials[0].error.has_value());
}

TEST_CASE("derived parameters are series")
{
    const auto defs = builtin_identities();
    const auto s = sample_params(find(defs, "cor3.4"), 5, 0, 30);
    CHECK(s.values.size() == 1);
    const auto& b = s.binding.at("b");
    CHECK(b.order() == Exponent{-1});
    const auto t = sample_params(find(defs, "cor4.3"), 5, 0, 30);
    CHECK(t.binding.at("b").order() == Exponent{1});
}

TEST_CASE("guard orders")
{
    CHECK(max_negative_shift(dsl::parse("a*q^-3 + b/q^2")) == 3);
    CHECK(max_negative_shift(dsl::parse("Pm(4, a, b)")) == 4);
    CHECK(max_negative_shift(dsl::parse("theta(a)")) == 0);
    const auto def = one("identity g ; params a ; lhs a/q^2 ; rhs a*q^-2 ; source \"x\"");
    CHECK(guard_orders(def) == 2 * 2 + 8);
}

TEST_CASE("passing identities")
{
    const auto defs = builtin_identities();
    const auto r = verify_identity(find(defs, "andrews-warnaar-1.5"), {30, 3, 7, true});
    CHECK(r.pass);
    REQUIRE(r.trials.size() == 3);
    for (const auto& t : r.trials) {
        CHECK(t.zero);
        CHECK(t.effective_precision >= 30);
        CHECK_FALSE(t.first_bad.has_value());
    }

    const auto t44 = verify_identity(find(defs, "thm4.4"), {30, 3, 1, true});
    CHECK(t44.pass);
    CHECK(t44.trials[0].binding.size() == 1);

    for (const auto& d : filter_identities(defs, "cor2.2-*")) {
        CHECK_MESSAGE(verify_identity(d, {25, 2, 3, false}).pass, d.name);
    }
}

TEST_CASE("a wrong identity fails with its first bad coefficient")
{
    const auto defs = builtin_identities();
    auto bad = find(defs, "jacobi");
    bad.rhs = dsl::parse("pochinf(q, x, q/x)*(1 + q)");
    const auto r = verify_identity(bad, {20, 2, 1, false});
    CHECK_FALSE(r.pass);
    for (const auto& t : r.trials) {
        CHECK_FALSE(t.zero);
        REQUIRE(t.first_bad.has_value());
        CHECK(t.first_bad->first == 1);
    }
}

TEST_CASE("mutations are detected")
{
    const auto defs = builtin_identities();
    std::mt19937_64 gen(2718);
    const Exponent order = 20;
    for (int i = 0; i < 5; ++i) {
        const auto& def = defs[gen() % defs.size()];
        REQUIRE(verify_identity(def, {order, 1, 5, false}).pass);
        const auto r = verify_identity(testing_support::perturbed(def, order - 1), {order, 1, 5, false});
        CHECK_MESSAGE(!r.pass, def.name);
        REQUIRE(r.trials[0].first_bad.has_value());
        CHECK(r.trials[0].first_bad->first == order - 1);
    }
}

TEST_CASE("reports are reproducible")
{
    const auto defs = builtin_identities();
    const VerifyOptions opts{20, 2, 42, false};
    const auto x = verify_all(defs, opts, "phi65-*");
    const auto y = verify_all(defs, opts, "phi65-*");
    CHECK(x.reports.size() == 7);
    CHECK(x.passed == 7);
    CHECK(x.failed == 0);
    CHECK(reports_to_json(x.reports) == reports_to_json(y.reports));
    const auto j = report_to_json(x.reports.front());
    CHECK(j["millis"] == 0);
    CHECK(j["order"] == 20);
    CHECK(j["pass"] == true);
    CHECK(j["trials"].size() == 2);
    CHECK(j["trials"][0]["status"] == "zero");
    CHECK(j["trials"][0]["binding"].contains("s"));
    CHECK_FALSE(j["trials"][0]["binding"].contains("a"));

    const auto empty = verify_all(defs, opts, "none-*");
    CHECK(empty.reports.empty());
    CHECK(summary_line(empty) == "0 passed / 0 failed");
}
}
