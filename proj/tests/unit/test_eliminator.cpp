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

#include <qtheta/eliminator.hpp>
#include <qtheta/error.hpp>
#include <qtheta/qkernels.hpp>
#include <qtheta/sums.hpp>

#include "../support/random_series.hpp"

using namespace qtheta;
using testing_support::random_parameter;

namespace {

constexpr Exponent P = 60;

LaurentSeries c(const Rational& r) { return LaurentSeries::from_rational(r, P); }
const LaurentSeries q = LaurentSeries::monomial(1, 1, P);
const LaurentSeries one = LaurentSeries::one(P);

std::pair<Rational, Rational> random_pair(std::mt19937_64& gen)
{
    for (;;) {
        const Rational a = random_parameter(gen);
        const Rational b = random_parameter(gen);
        if (a != b && a != -b && a * b != 1) {
            return {a, b};
        }
    }
}

void check_equal(const LaurentSeries& x, const LaurentSeries& y, Exponent at_least)
{
    const auto r = eq_to_prec(x, y);
    CHECK(r.equal);
    CHECK(r.precision >= at_least);
}

} // namespace

TEST_SUITE("eliminator")
{
TEST_CASE("m = 2 system")
{
    const auto sys = build_system(2, c(2), c(3), 20);
    REQUIRE(sys.size() == 2);
    CHECK(sys.unknown_shifts == std::vector<std::int64_t>{0, 1});
    CHECK(sys.row_labels == std::vector<RowLabel>{{0, false}, {0, true}});
    check_equal(sys.matrix[0][0], one, 20);
    check_equal(sys.matrix[0][1], c(3), 20);
    check_equal(sys.matrix[1][0], one, 20);
    check_equal(sys.matrix[1][1], c(2), 20);
    check_equal(sys.rhs[0], theta_partial(c(2), 20), 20);
    check_equal(sys.rhs[1], theta_partial(c(3), 20), 20);
}

TEST_CASE("m = 3 system shape")
{
    const auto sys = build_system(3, c(2), c(3), 20);
    CHECK(sys.size() == 4);
    CHECK(sys.matrix.size() == 4);
    CHECK(sys.unknown_shifts == std::vector<std::int64_t>{-1, 0, 1, 2});
    CHECK_THROWS_AS(build_system(1, c(2), c(3), 20), DomainError);
}

TEST_CASE("brute-force unknowns satisfy every row")
{
    for (int m = 2; m <= 4; ++m) {
        const auto a = c(2);
        const auto b = c(-Rational(5, 3));
        const Exponent prec = 16;
        const auto sys = build_system(m, a, b, prec + 12);
        for (std::size_t r = 0; r < sys.size(); ++r) {
            LaurentSeries lhs = LaurentSeries::zero(prec + 12);
            for (std::size_t col = 0; col < sys.size(); ++col) {
                const auto t = sys.unknown_shifts[col];
                lhs = lhs + sys.matrix[r][col] * p_series(m, shift(a, t), shift(b, t), prec + 12);
            }
            check_equal(lhs, sys.rhs[r], prec);
        }
    }
}

TEST_CASE("m = 2 gives constant coefficients")
{
    const auto e = express_pm(2, 2, 3, 25);
    REQUIRE(e.combination.a_coeffs.size() == 1);
    REQUIRE(e.combination.b_coeffs.size() == 1);
    CHECK(e.combination.a_coeffs[0].constant_value() == Rational(-2));
    CHECK(e.combination.b_coeffs[0].constant_value() == Rational(3));
    CHECK(e.residual_precision >= 25);

    std::mt19937_64 gen(53);
    for (int i = 0; i < 3; ++i) {
        const auto [a, b] = random_pair(gen);
        const auto r = express_pm(2, a, b, 25);
        CHECK(r.combination.a_coeffs[0].constant_value() == Rational(a / (a - b)));
        CHECK(r.combination.b_coeffs[0].constant_value() == Rational(-b / (a - b)));
    }
}

TEST_CASE("m = 3 matches the closed-form coefficients")
{
    std::mt19937_64 gen(59);
    for (int i = 0; i < 3; ++i) {
        const auto [av, bv] = i == 0 ? std::pair<Rational, Rational>{2, 3} : random_pair(gen);
        const auto r = express_pm(3, av, bv, 20);
        CHECK(r.residual_precision >= 20);
        const auto a = c(av);
        const auto b = c(bv);
        const auto f = -(a * b * (a + b) * (one + q)) / ((a - b) * (a - b * q) * (b - a * q));
        const auto& comb = r.combination;
        REQUIRE(comb.a_coeffs.size() == 2);
        REQUIRE(comb.b_coeffs.size() == 2);
        check_equal(comb.a_coeffs[0], f * a * (b + q) / (b * (one + q)), 20);
        check_equal(comb.b_coeffs[0], -(f * b * (a + q) / (a * (one + q))), 20);
        check_equal(comb.a_coeffs[1], f * (b + q * q) / (a + b), 20);
        check_equal(comb.b_coeffs[1], -(f * (a + q * q) / (a + b)), 20);
    }
}

TEST_CASE("residual vanishes for m up to 5")
{
    std::mt19937_64 gen(61);
    for (int m = 2; m <= 5; ++m) {
        for (int i = 0; i < 3; ++i) {
            const auto [a, b] = random_pair(gen);
            const auto r = express_pm(m, a, b, 20);
            CHECK(r.residual_precision >= 20);
            const auto as = c(a);
            const auto bs = c(b);
            const auto diff = r.combination.evaluate(as, bs, 20) - p_series(m, as, bs, 30);
            CHECK(diff.is_zero());
        }
    }
}

TEST_CASE("pivot rule does not change the solution")
{
    std::mt19937_64 gen(67);
    for (int m = 2; m <= 4; ++m) {
        const auto [a, b] = random_pair(gen);
        const auto x = express_pm(m, a, b, 20, PivotRule::min_order).combination;
        const auto y = express_pm(m, a, b, 20, PivotRule::first_nonzero).combination;
        REQUIRE(x.a_coeffs.size() == y.a_coeffs.size());
        for (std::size_t k = 0; k < x.a_coeffs.size(); ++k) {
            CHECK(eq_to_prec(x.a_coeffs[k], y.a_coeffs[k]));
            CHECK(eq_to_prec(x.b_coeffs[k], y.b_coeffs[k]));
        }
    }
}

TEST_CASE("singular system reports the column")
{
    const auto sys = build_system(2, c(2), c(2), 20);
    try {
        (void)gauss_solve(sys);
        FAIL("expected SingularSystemError");
    } catch (const SingularSystemError& e) {
        CHECK(e.column() == 1);
    }
    CHECK_THROWS_AS(express_pm(2, 2, 2, 20), SingularSystemError);
}

TEST_CASE("identity matrix returns each right-hand side")
{
    SeriesLinearSystem sys;
    const std::size_t n = 4;
    sys.matrix.assign(n, std::vector<LaurentSeries>(n, LaurentSeries::zero(20)));
    for (std::size_t i = 0; i < n; ++i) {
        sys.matrix[i][i] = LaurentSeries::one(20);
        sys.rhs.push_back(theta_partial(c(Rational(static_cast<long>(i) + 2)), 20));
        sys.row_labels.push_back({static_cast<int>(i / 2), i % 2 == 1});
        sys.unknown_shifts.push_back(static_cast<std::int64_t>(i));
    }
    const auto sol = gauss_solve(sys);
    REQUIRE(sol.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& label = sys.row_labels[i];
        const auto& own = label.swapped ? sol[i].b_coeffs : sol[i].a_coeffs;
        const auto& other = label.swapped ? sol[i].a_coeffs : sol[i].b_coeffs;
        for (std::size_t k = 0; k < own.size(); ++k) {
            const auto expect = static_cast<int>(k) == label.shift ? LaurentSeries::one(20) : LaurentSeries::zero(20);
            CHECK(eq_to_prec(own[k], expect));
        }
        for (const auto& o : other) {
            CHECK(o.is_zero());
        }
    }
}
}
