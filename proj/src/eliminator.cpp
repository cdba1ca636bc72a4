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
#include <qtheta/eliminator.hpp>

#include <algorithm>
#include <optional>
#include <string>

#include <qtheta/error.hpp>
#include <qtheta/qkernels.hpp>
#include <qtheta/sums.hpp>

namespace qtheta {

LaurentSeries ThetaCombination::evaluate(const LaurentSeries& a, const LaurentSeries& b, Exponent prec) const
{
    // theta arguments a/q^k have order down to -k; give the thetas headroom.
    const auto headroom = static_cast<Exponent>(std::max(a_coeffs.size(), b_coeffs.size())) * 2 + 4;
    LaurentSeries sum = LaurentSeries::zero(prec);
    for (std::size_t k = 0; k < a_coeffs.size(); ++k) {
        const auto sk = static_cast<Exponent>(k);
        sum = add(sum, multiply(a_coeffs[k], theta_partial(shift(a, -sk), prec + headroom)));
    }
    for (std::size_t k = 0; k < b_coeffs.size(); ++k) {
        const auto sk = static_cast<Exponent>(k);
        sum = add(sum, multiply(b_coeffs[k], theta_partial(shift(b, -sk), prec + headroom)));
    }
    return truncate(sum, prec);
}

SeriesLinearSystem build_system(int m, const LaurentSeries& a, const LaurentSeries& b, Exponent prec)
{
    if (m < 2) {
        throw DomainError("eliminator needs m >= 2, got " + std::to_string(m));
    }
    const auto n = static_cast<std::size_t>(2 * (m - 1));
    SeriesLinearSystem sys;
    sys.matrix.assign(n, std::vector<LaurentSeries>(n, LaurentSeries::zero(prec)));
    for (int t = -(m - 2); t <= m - 1; ++t) {
        sys.unknown_shifts.push_back(t);
    }
    const auto column = [m](int t) { return static_cast<std::size_t>(t + m - 2); };

    for (int j = 0; j <= m - 2; ++j) {
        for (const bool swapped : {false, true}) {
            const auto row = sys.rhs.size();
            const LaurentSeries& lambda_arg = swapped ? a : b;
            const LaurentSeries& theta_arg = swapped ? b : a;
            for (int k = 0; k < m; ++k) {
                sys.matrix[row][column(k - j)] = lambda_coefficient(m, k, shift(lambda_arg, -j), prec);
            }
            sys.rhs.push_back(theta_partial(shift(theta_arg, -j), prec));
            sys.row_labels.push_back({j, swapped});
        }
    }
    return sys;
}

std::vector<ThetaCombination> gauss_solve(const SeriesLinearSystem& sys, PivotRule rule)
{
    const std::size_t n = sys.size();
    if (sys.matrix.size() != n || sys.row_labels.size() != n) {
        throw DomainError("gauss_solve: system is not square");
    }
    Exponent prec = 0;
    bool have_prec = false;
    for (const auto& row : sys.matrix) {
        if (row.size() != n) {
            throw DomainError("gauss_solve: system is not square");
        }
        for (const auto& e : row) {
            prec = have_prec ? std::min(prec, e.precision()) : e.precision();
            have_prec = true;
        }
    }

    auto left = sys.matrix;
    // Right block starts as the identity, at the matrix' working precision.
    std::vector<std::vector<LaurentSeries>> right(n, std::vector<LaurentSeries>(n, LaurentSeries::zero(prec)));
    for (std::size_t i = 0; i < n; ++i) {
        right[i][i] = LaurentSeries::one(std::max<Exponent>(prec, 1));
    }

    std::vector<bool> used(n, false);
    std::vector<std::size_t> pivot_row_of(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (used[r] || left[r][col].is_zero()) {
                continue;
            }
            if (!pivot) {
                pivot = r;
                if (rule == PivotRule::first_nonzero) {
                    break;
                }
            } else if (left[r][col].min_exp() < left[*pivot][col].min_exp()) {
                pivot = r;
            }
        }
        if (!pivot) {
            throw SingularSystemError("series linear system is singular to working precision in column "
                                          + std::to_string(col) + " (unknown P_m(aq^t,bq^t), t = "
                                          + std::to_string(sys.unknown_shifts.at(col)) + ")",
                                      col);
        }
        const std::size_t p = *pivot;
        used[p] = true;
        pivot_row_of[col] = p;

        const LaurentSeries inv = invert(left[p][col]);
        for (std::size_t c = 0; c < n; ++c) {
            left[p][c] = multiply(left[p][c], inv);
            right[p][c] = multiply(right[p][c], inv);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == p || left[r][col].is_zero()) {
                continue;
            }
            const LaurentSeries factor = left[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                if (!left[p][c].is_zero()) {
                    left[r][c] = subtract(left[r][c], multiply(factor, left[p][c]));
                }
                if (!right[p][c].is_zero()) {
                    right[r][c] = subtract(right[r][c], multiply(factor, right[p][c]));
                }
            }
            left[r][col] = LaurentSeries::zero(left[r][col].precision());
        }
    }

    int max_shift = 0;
    for (const auto& label : sys.row_labels) {
        max_shift = std::max(max_shift, label.shift);
    }
    std::vector<ThetaCombination> out;
    for (std::size_t col = 0; col < n; ++col) {
        ThetaCombination comb;
        comb.a_coeffs.assign(static_cast<std::size_t>(max_shift) + 1, LaurentSeries::zero(prec));
        comb.b_coeffs.assign(static_cast<std::size_t>(max_shift) + 1, LaurentSeries::zero(prec));
        const auto& inverse_row = right[pivot_row_of[col]];
        for (std::size_t r = 0; r < n; ++r) {
            const auto& label = sys.row_labels[r];
            auto& slot = label.swapped ? comb.b_coeffs : comb.a_coeffs;
            slot[static_cast<std::size_t>(label.shift)] = add(slot[static_cast<std::size_t>(label.shift)], inverse_row[r]);
        }
        out.push_back(std::move(comb));
    }
    return out;
}

Exponent eliminator_guard(int m)
{
    return 2 * m + 8;
}

PmExpression express_pm(int m, const Rational& a, const Rational& b, Exponent prec, PivotRule rule)
{
    const Exponent work = prec + eliminator_guard(m);
    // Exact parameters: give them enough precision that they never limit work.
    const Exponent param_prec = work + 4 * m;
    const LaurentSeries as = LaurentSeries::from_rational(a, param_prec);
    const LaurentSeries bs = LaurentSeries::from_rational(b, param_prec);

    const SeriesLinearSystem sys = build_system(m, as, bs, work);
    auto solutions = gauss_solve(sys, rule);
    const auto zero_column = static_cast<std::size_t>(m - 2);
    ThetaCombination comb = std::move(solutions[zero_column]);

    const LaurentSeries residual = subtract(comb.evaluate(as, bs, work), p_series(m, as, bs, work));
    if (!residual.is_zero()) {
        throw Error("express_pm(" + std::to_string(m) + "): residual does not vanish, first nonzero term at q^"
                    + std::to_string(residual.min_exp()));
    }
    if (residual.precision() < prec) {
        throw PrecisionError("express_pm(" + std::to_string(m) + "): residual only verified to O(q^"
                             + std::to_string(residual.precision()) + "), wanted O(q^" + std::to_string(prec) + ")");
    }
    return {std::move(comb), residual.precision()};
}

} // namespace qtheta
