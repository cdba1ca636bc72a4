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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <qtheta/series.hpp>

namespace qtheta {

/// coef * q^exp.
struct QMonomial {
    Rational coef;
    Exponent exp = 0;

    /// Throws PrecisionError when exp >= prec and coef != 0.
    LaurentSeries to_series(Exponent prec) const;
};

/// Certified lower bound on the q-order of the n-th term of a formal sum.
/// bound(n) must be nondecreasing for n >= monotone_from; summation stops at
/// the first such n with bound(n) >= prec.
struct SumBound {
    std::function<Exponent(std::int64_t)> bound;
    std::int64_t monotone_from = 0;

    /// First index whose term (and every later one) is O(q^prec). Throws
    /// DivergenceError if none is found up to cap.
    std::int64_t stop_index(Exponent prec, std::int64_t cap) const;
    /// min(0, bound(n)) over first <= n < stop.
    Exponent min_before(std::int64_t first, std::int64_t stop) const;
};

/// Iteration cap used by the kernels' formal sums.
std::int64_t default_term_cap(Exponent prec);

/// Exact q-order of (y;q)_n as a function of n. Factors 1 - y*q^i with
/// ord(y) + i > 0 have order exactly zero, so only finitely many factors are
/// inspected. For a denominator profile a factor that is zero to precision
/// raises DegenerateParameterError; for a numerator its precision is used as
/// a lower bound.
class PochhammerOrder {
public:
    PochhammerOrder(const LaurentSeries& y, bool denominator);

    Exponent operator()(std::int64_t n) const;
    /// Every factor with index >= regular_from() has order 0.
    std::int64_t regular_from() const noexcept { return static_cast<std::int64_t>(prefix_.size()) - 1; }

private:
    std::vector<Exponent> prefix_; // prefix_[i] = order of the first i factors
};

/// 1 - y, with the constant placed at y's precision.
LaurentSeries one_minus(const LaurentSeries& y);

/// (x;q)_n = prod_{i<n} (1 - x q^i); (x;q)_0 = 1.
LaurentSeries qpoch_finite(const LaurentSeries& x, std::int64_t n, Exponent prec);
/// (x;q)_oo truncated soundly at prec.
LaurentSeries qpoch_infinite(const LaurentSeries& x, Exponent prec);
/// prod_j (x_j;q)_n, or prod_j (x_j;q)_oo when n is empty.
LaurentSeries qpoch_multi(std::span<const LaurentSeries> xs, std::optional<std::int64_t> n, Exponent prec);

/// Partial theta function sum_{n>=0} (-1)^n q^{n(n-1)/2} x^n.
LaurentSeries theta_partial(const LaurentSeries& x, Exponent prec);
/// Bound n(n-1)/2 + n*ord(x) used by theta_partial.
SumBound theta_partial_bound(const LaurentSeries& x);
/// Lower bound on ord(theta_partial(x)) given only ord(x).
Exponent theta_partial_order_bound(Exponent order_of_x);

/// Two-sided sum over all integers n of (-1)^n q^{n(n-1)/2} x^n. Throws
/// DomainError when x is zero to precision.
LaurentSeries theta_full(const LaurentSeries& x, Exponent prec);

/// Basic hypergeometric series 1+r phi s with upper = (a_0..a_r), lower =
/// (b_1..b_s). Terminates when an upper parameter is exactly q^{-n}.
/// Throws DivergenceError when the term orders cannot be certified to grow
/// and DegenerateParameterError for a singular lower parameter.
LaurentSeries bhs(std::span<const LaurentSeries> upper, std::span<const LaurentSeries> lower, const LaurentSeries& z,
                  Exponent prec);

/// n such that x is exactly q^{-n} (coefficient 1, exponent <= 0).
std::optional<std::int64_t> terminating_index(const LaurentSeries& x);

} // namespace qtheta
