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

#include <random>

#include <qtheta/error.hpp>
#include <qtheta/series.hpp>

#include "../support/oracle.hpp"
#include "../support/random_series.hpp"

using namespace qtheta;
using testing_support::random_series;
using testing_support::random_unit;

namespace {

LaurentSeries S(const char* text) { return parse_series(text); }

bool canonical(const LaurentSeries& x)
{
    const auto& c = x.coefficients();
    if (c.empty()) {
        return true;
    }
    return c.front() != 0 && c.back() != 0 &&
           x.min_exp() + static_cast<Exponent>(c.size()) <= x.precision();
}

// Truncating x to a lower precision loses nothing below it, so any
// operation on the truncated inputs must agree with the full result there.
LaurentSeries lower(const LaurentSeries& x, std::mt19937_64& gen)
{
    const Exponent drop = static_cast<Exponent>(gen() % 3);
    return truncate(x, x.precision() - drop);
}

bool agrees_below(const LaurentSeries& low, const LaurentSeries& high)
{
    if (high.precision() < low.precision()) {
        return false;
    }
    return static_cast<bool>(eq_to_prec(low, truncate(high, low.precision())));
}

} // namespace

TEST_SUITE("series")
{
TEST_CASE("constructors")
{
    CHECK(to_string(LaurentSeries::monomial(Rational(3, 2), -1, 10)) == "3/2*q^-1 + O(q^10)");
    const auto z = LaurentSeries::from_rational(0, 5);
    CHECK(z.is_zero());
    CHECK(z.precision() == 5);
    CHECK(z == LaurentSeries::zero(5));
    CHECK(to_string(LaurentSeries::one(4)) == "1 + O(q^4)");
    CHECK_THROWS_AS(LaurentSeries::monomial(1, 4, 4), PrecisionError);
    CHECK_THROWS_AS(LaurentSeries::monomial(0, 7, 4), PrecisionError);
    CHECK(LaurentSeries::monomial(0, 2, 4).is_zero());
}

TEST_CASE("addition keeps the joint precision")
{
    CHECK(to_string(S("1 + q + O(q^5)") + S("q^2 + O(q^5)")) == "1 + q + q^2 + O(q^5)");
    const auto x = S("2*q^-1 - 1/3 + 5*q^3 + O(q^6)");
    const auto z = x + negate(x);
    CHECK(z.is_zero());
    CHECK(z.precision() == 6);
    const auto y = S("1 + O(q^3)") + S("q^4 + O(q^10)");
    CHECK(to_string(y) == "1 + O(q^3)");
    CHECK(to_string(subtract(S("1 + q + O(q^4)"), S("1 + O(q^9)"))) == "q + O(q^4)");
}

TEST_CASE("multiplication precision rule")
{
    CHECK(to_string(S("1 + q + O(q^10)") * S("1 - q + O(q^10)")) == "1 - q^2 + O(q^10)");
    const auto p = S("q^-1 + O(q^10)") * S("q + O(q^10)");
    CHECK(p.constant_value() == Rational(1));
    CHECK(p.precision() == 9);
    const auto z = LaurentSeries::zero(5) * S("q^-2 + 1 + O(q^8)");
    CHECK(z.is_zero());
    CHECK(z.precision() == 3);
}

TEST_CASE("inversion")
{
    CHECK(to_string(invert(S("1 - q + O(q^4)"))) == "1 + q + q^2 + q^3 + O(q^4)");
    CHECK(to_string(invert(S("2*q^3 + O(q^10)"))) == "1/2*q^-3 + O(q^4)");
    CHECK(to_string(invert(S("q + q^2 + O(q^6)"))) == "q^-1 - 1 + q - q^2 + q^3 + O(q^4)");
    CHECK_THROWS_AS(invert(LaurentSeries::zero(5)), DivisionByZeroError);
    CHECK_THROWS_AS(divide(LaurentSeries::one(5), LaurentSeries::zero(5)), DivisionByZeroError);
    CHECK(to_string(divide(S("1 - q^2 + O(q^8)"), S("1 - q + O(q^8)"))) == "1 + q + O(q^8)");
}

TEST_CASE("accessors")
{
    const auto x = S("1 - q^2 + O(q^5)");
    CHECK(x.coeff_at(2) == -1);
    CHECK(x.coeff_at(1) == 0);
    CHECK(x.coeff_at(-7) == 0);
    CHECK_THROWS_AS(x.coeff_at(5), PrecisionError);
    CHECK(x.order() == Exponent{0});
    CHECK_FALSE(LaurentSeries::zero(3).order().has_value());
    CHECK(to_string(pow_int(S("1 + q + O(q^10)"), 2)) == "1 + 2*q + q^2 + O(q^10)");
    CHECK(to_string(shift(LaurentSeries::one(10), -3)) == "q^-3 + O(q^7)");
    CHECK(to_string(truncate(S("1 + q + q^2 + O(q^9)"), 2)) == "1 + q + O(q^2)");
    CHECK(eq_to_prec(pow_int(S("1 - q + O(q^8)"), -1), invert(S("1 - q + O(q^8)"))));
    CHECK(pow_int(S("3*q^2 + O(q^6)"), 0) == LaurentSeries::one(pow_int(S("3*q^2 + O(q^6)"), 0).precision()));
}

TEST_CASE("eq_to_prec reports the joint precision")
{
    const auto r = eq_to_prec(S("1 + q + O(q^3)"), S("1 + q + q^5 + O(q^9)"));
    CHECK(r.equal);
    CHECK(r.precision == 3);
    CHECK_FALSE(eq_to_prec(S("1 + O(q^3)"), S("1 + q + O(q^3)")));
}

TEST_CASE("render and parse round trip")
{
    for (const char* text : {"O(1)", "1 + O(q^4)", "3/2*q^-1 + O(q^10)", "-q^-3 + 7/11 - 2*q^2 + O(q^5)",
                             "O(q^-4)", "q + O(q^2)"}) {
        const auto x = S(text);
        CHECK(to_string(x) == text);
        CHECK(parse_series(to_string(x)) == x);
    }
    std::mt19937_64 gen(11);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_series(gen);
        CHECK(parse_series(to_string(x)) == x);
    }
}

TEST_CASE("ring laws on random series")
{
    std::mt19937_64 gen(20260101);
    int cases = 0;
    for (int i = 0; i < 1200; ++i, ++cases) {
        const auto x = random_series(gen);
        const auto y = random_series(gen);
        const auto z = random_series(gen);

        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(eq_to_prec((x + y) + z, x + (y + z)));
        CHECK(eq_to_prec((x * y) * z, x * (y * z)));
        CHECK(eq_to_prec(x * (y + z), x * y + x * z));

        const auto p = x * y;
        CHECK(p.precision() == std::min(x.precision() + y.valuation(), y.precision() + x.valuation()));
        CHECK((x + y).precision() == std::min(x.precision(), y.precision()));
        CHECK(canonical(p));
        CHECK(canonical(x + y));
        CHECK(canonical(x - y));
    }
    CHECK(cases >= 1000);
}

TEST_CASE("invert is a two-sided inverse")
{
    std::mt19937_64 gen(7);
    for (int i = 0; i < 1000; ++i) {
        const auto x = random_unit(gen);
        const auto inv = invert(x);
        CHECK(inv.precision() == x.precision() - 2 * x.valuation());
        CHECK(canonical(inv));
        const auto p = x * inv;
        CHECK(eq_to_prec(p, LaurentSeries::one(p.precision())));
        CHECK(eq_to_prec(inv * x, LaurentSeries::one(p.precision())));
    }
}

TEST_CASE("precision soundness")
{
    std::mt19937_64 gen(99);
    for (int i = 0; i < 1000; ++i) {
        const auto x = random_series(gen);
        const auto y = random_unit(gen);
        const auto xl = lower(x, gen);
        const auto yl = lower(y, gen);

        CHECK(agrees_below(xl + yl, x + y));
        CHECK(agrees_below(xl * yl, x * y));
        CHECK(agrees_below(pow_int(xl, 3), pow_int(x, 3)));
        if (!yl.is_zero()) {
            CHECK(agrees_below(invert(yl), invert(y)));
            CHECK(agrees_below(divide(xl, yl), divide(x, y)));
        }
    }
}

TEST_CASE("multiplication agrees with a schoolbook oracle")
{
    std::mt19937_64 gen(5);
    for (int i = 0; i < 500; ++i) {
        const auto x = random_series(gen);
        const auto y = random_series(gen);
        const auto p = x * y;
        const auto o = oracle::mul(oracle::from(x), oracle::from(y));
        CHECK(o.prec == p.precision());
        CHECK(oracle::agrees(p, o, p.precision()));
    }
}
}
