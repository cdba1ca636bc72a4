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
#pragma once

#include <cstdint>
#include <vector>

#include <qtheta/series.hpp>

namespace qtheta {

/// sum_k a_coeffs[k] theta(q, a/q^k) + sum_k b_coeffs[k] theta(q, b/q^k).
struct ThetaCombination {
    std::vector<LaurentSeries> a_coeffs;
    std::vector<LaurentSeries> b_coeffs;

    LaurentSeries evaluate(const LaurentSeries& a, const LaurentSeries& b, Exponent prec) const;
};

/// Which right-hand side a row of the system carries: theta(q, a/q^shift)
/// for an original row, theta(q, b/q^shift) for a swapped one.
struct RowLabel {
    int shift = 0;
    bool swapped = false;

    friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

/// Square system over the field of truncated Laurent series. Column c is the
/// unknown P_m(aq^t, bq^t) with t = unknown_shifts[c].
struct SeriesLinearSystem {
    std::vector<std::vector<LaurentSeries>> matrix;
    std::vector<LaurentSeries> rhs;
    std::vector<std::int64_t> unknown_shifts;
    std::vector<RowLabel> row_labels;

    std::size_t size() const noexcept { return rhs.size(); }
};

enum class PivotRule {
    min_order,     ///< entry of least q-order in the column (loses the least precision)
    first_nonzero, ///< first row that is not zero to precision
};

/// The 2(m-1) equations obtained from the lambda expansion of theta(q, a/q^j)
/// and theta(q, b/q^j), j = 0..m-2, in the unknowns P_m(aq^t, bq^t),
/// t = -(m-2)..m-1.
SeriesLinearSystem build_system(int m, const LaurentSeries& a, const LaurentSeries& b, Exponent prec);

/// Gauss-Jordan elimination of [matrix | I]. Returns, for every unknown, its
/// expression as a combination of the right-hand-side thetas (the rows of
/// the inverse matrix, keyed by row label). Throws SingularSystemError naming
/// the first column without a usable pivot.
std::vector<ThetaCombination> gauss_solve(const SeriesLinearSystem& sys, PivotRule rule = PivotRule::min_order);

struct PmExpression {
    ThetaCombination combination;
    /// Precision to which combination - P_m(a,b) was verified to vanish.
    Exponent residual_precision = 0;
};

/// Extra orders of working precision used by express_pm for a given m.
Exponent eliminator_guard(int m);

/// P_m(a,b) as a theta combination, at working precision prec +
/// eliminator_guard(m). The result is checked against a direct evaluation
/// of P_m; a nonzero residual raises Error, a residual known to less than
/// prec raises PrecisionError.
PmExpression express_pm(int m, const Rational& a, const Rational& b, Exponent prec,
                        PivotRule rule = PivotRule::min_order);

} // namespace qtheta
