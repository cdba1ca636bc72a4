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
#include <qtheta/qkernels.hpp>

#include "../support/oracle.hpp"
#include "../support/random_series.hpp"

using namespace qtheta;
using testing_support::random_parameter;

namespace {

constexpr Exponent P = 40;

LaurentSeries c(const Rational& r) { return LaurentSeries::from_rational(r, P); }
LaurentSeries mono(const Rational& r, Exponent e) { return LaurentSeries::monomial(r, e, P); }
LaurentSeries S(const char* text) { return parse_series(text); }

LaurentSeries poch_list(std::initializer_list<LaurentSeries> xs, std::optional<std::int64_t> n, Exponent prec)
{
    const std::vector<LaurentSeries> v(xs);
    return qpoch_multi(v, n, prec);
}

} // namespace

TEST_SUITE("qkernels")
{
TEST_CASE("finite Pochhammer")
{
    CHECK(qpoch_finite(c(7), 0, 10) == LaurentSeries::one(10));
    CHECK(to_string(qpoch_finite(S("q + O(q^10)"), 2, 10)) == "1 - q - q^2 + q^3 + O(q^10)");
    const auto lhs = qpoch_finite(c(2), 3, 12);
    const auto rhs = scale(shift(qpoch_finite(mono(Rational(1, 2), -2), 3, 30), 3), -8);
    CHECK(eq_to_prec(lhs, rhs));
}

TEST_CASE("infinite Pochhammer")
{
    CHECK(qpoch_infinite(c(0), 10) == LaurentSeries::one(10));
    CHECK(to_string(qpoch_infinite(S("q + O(q^10)"), 6)) == "1 - q - q^2 + q^5 + O(q^6)");
    auto expect = oracle::poch_monomial(2, 0, 5, 4);
    CHECK(oracle::agrees(qpoch_infinite(c(2), 4), expect, 4));
}

TEST_CASE("Euler product matches pentagonal numbers")
{
    const Exponent n = 30;
    const auto product = qpoch_infinite(mono(1, 1), n);
    const auto brute = oracle::poch_monomial(1, 1, static_cast<int>(n), n);
    CHECK(oracle::agrees(product, brute, n));
    for (Exponent e = 0; e < n; ++e) {
        Rational expected = 0;
        for (Exponent k = -10; k <= 10; ++k) {
            if (k * (3 * k - 1) / 2 == e) {
                expected = k % 2 == 0 ? 1 : -1;
            }
        }
        CHECK(product.coeff_at(e) == expected);
    }
}

TEST_CASE("partial theta")
{
    CHECK(theta_partial(c(0), 10) == LaurentSeries::one(10));
    CHECK(to_string(theta_partial(S("q + O(q^20)"), 7)) == "1 - q + q^3 - q^6 + O(q^7)");
    CHECK(to_string(theta_partial(mono(2, -1), 3)) == "2*q^-1 - 7 + 16*q^2 + O(q^3)");
}

TEST_CASE("complete theta")
{
    CHECK(theta_full(mono(1, 1), 15).is_zero());
    CHECK(eq_to_prec(theta_full(c(2), 12), poch_list({mono(1, 1), c(2), mono(Rational(1, 2), 1)}, std::nullopt, 12)));
    const auto x = c(3);
    const auto split = theta_full(x, 12) - theta_partial(x, 12) -
                       (theta_partial(divide(mono(1, 1), x), 12) - LaurentSeries::one(12));
    CHECK(split.is_zero());
    CHECK_THROWS_AS(theta_full(LaurentSeries::zero(10), 10), DomainError);
}

TEST_CASE("Jacobi triple product at random points")
{
    std::mt19937_64 gen(17);
    for (int i = 0; i < 5; ++i) {
        const auto x = c(random_parameter(gen));
        const auto lhs = theta_full(x, 40);
        const auto rhs = poch_list({mono(1, 1), x, divide(mono(1, 1), x)}, std::nullopt, 40);
        const auto r = eq_to_prec(lhs, rhs);
        CHECK(r.equal);
        CHECK(r.precision >= 40);
    }
}

TEST_CASE("Pochhammer splice")
{
    std::mt19937_64 gen(23);
    for (int i = 0; i < 60; ++i) {
        const auto x = c(testing_support::random_rational(gen));
        const int m = static_cast<int>(gen() % 7);
        const int n = static_cast<int>(gen() % 7);
        const auto lhs = qpoch_finite(x, m + n, 30);
        const auto rhs = qpoch_finite(x, m, 30) * qpoch_finite(shift(x, m), n, 30);
        CHECK(eq_to_prec(lhs, rhs));
    }
}

TEST_CASE("Pochhammer reflection")
{
    std::mt19937_64 gen(29);
    for (int i = 0; i < 60; ++i) {
        const Rational xv = random_parameter(gen);
        const int k = static_cast<int>(gen() % 7);
        const auto x = c(xv);
        const auto lhs = qpoch_finite(x, k, 30);
        const auto reflected = qpoch_finite(divide(mono(1, 1 - k), x), k, 30 + 2 * k * k);
        Rational sign_power = k % 2 == 0 ? 1 : -1;
        for (int j = 0; j < k; ++j) {
            sign_power *= xv;
        }
        const auto rhs = scale(shift(reflected, k * (k - 1) / 2), sign_power);
        const auto r = eq_to_prec(lhs, rhs);
        CHECK(r.equal);
        CHECK(r.precision >= 30);
    }
}

TEST_CASE("theta shift-down")
{
    std::mt19937_64 gen(31);
    for (int i = 0; i < 20; ++i) {
        const auto x = c(random_parameter(gen));
        const auto lhs = theta_partial(shift(x, -1), 30);
        const auto rhs = LaurentSeries::one(30) - shift(x, -1) * theta_partial(x, 32);
        const auto r = eq_to_prec(lhs, rhs);
        CHECK(r.equal);
        CHECK(r.precision >= 30);
    }
}

TEST_CASE("basic hypergeometric series")
{
    CHECK(bhs(std::vector{c(1), c(5)}, std::vector{c(3)}, c(7), 12) == LaurentSeries::one(12));
    CHECK_THROWS_AS(bhs(std::vector{c(2), c(3)}, std::vector{c(5)}, c(7), 12), DivergenceError);
    CHECK(terminating_index(mono(1, -3)) == std::int64_t{3});
    CHECK_FALSE(terminating_index(mono(2, -3)).has_value());
}

TEST_CASE("very-well-poised 6phi5 summation")
{
    std::mt19937_64 gen(37);
    const Exponent prec = 15;
    for (int t = 0; t < 3; ++t) {
        const Rational s = random_parameter(gen);
        const Rational b = random_parameter(gen);
        const Rational cc = random_parameter(gen);
        const auto a = c(s * s);
        const auto q = mono(1, 1);
        for (int n = 0; n <= 6; ++n) {
            const std::vector<LaurentSeries> upper{a, q * c(s), q * c(-s), c(b), c(cc), mono(1, -n)};
            const std::vector<LaurentSeries> lower{c(s), c(-s), a * q / c(b), a * q / c(cc), a * shift(q, n)};
            const auto z = a * shift(q, n) / c(b * cc);
            const auto lhs = bhs(upper, lower, z, prec);
            const auto rhs = poch_list({a * q, a * q / c(b * cc)}, n, prec + 4) /
                             poch_list({a * q / c(b), a * q / c(cc)}, n, prec + 4);
            const auto r = eq_to_prec(lhs, rhs);
            CHECK(r.equal);
            CHECK(r.precision >= prec);
        }
    }
}
}
