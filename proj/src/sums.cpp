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
#include <qtheta/sums.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include <qtheta/error.hpp>
#include <qtheta/qkernels.hpp>

namespace qtheta {

namespace {

constexpr Exponent binom2(std::int64_t n) { return n * (n - 1) / 2; }

LaurentSeries q_power(Exponent e, Exponent prec)
{
    return LaurentSeries::monomial(Rational(1), e, std::max(prec, e + 1));
}

LaurentSeries constant(const Rational& c, Exponent prec)
{
    return LaurentSeries::from_rational(c, std::max<Exponent>(prec, 1));
}

// Sum of the given exact polynomial terms c_i q^{e_i}.
LaurentSeries polynomial(std::initializer_list<std::pair<int, int>> terms, Exponent prec)
{
    LaurentSeries r = LaurentSeries::zero(std::max<Exponent>(prec, 1));
    for (const auto& [c, e] : terms) {
        r = add(r, scale(q_power(e, prec), Rational(c)));
    }
    return r;
}

LaurentSeries divide_by_denominator(const LaurentSeries& x, const LaurentSeries& den, const char* what)
{
    if (den.is_zero()) {
        throw DegenerateParameterError(std::string(what) + " vanishes to precision " + std::to_string(den.precision()));
    }
    return divide(x, den);
}

void require_nonzero(const LaurentSeries& x, const char* what)
{
    if (x.is_zero()) {
        throw DegenerateParameterError(std::string(what) + " is zero to precision " + std::to_string(x.precision()));
    }
}

void check_m(int m, int min, const char* fn)
{
    if (m < min) {
        throw DomainError(std::string(fn) + ": m must be >= " + std::to_string(min) + ", got " + std::to_string(m));
    }
}

// (q,a,b;q)_oo sum_n (A;q)_{2n} / (q,a,b,A;q)_n q^{weight*n} with A = ab/q^m.
LaurentSeries andrews_warnaar_sum(int m, int weight, const LaurentSeries& a, const LaurentSeries& b, Exponent prec)
{
    const LaurentSeries big_a = shift(multiply(a, b), -m);
    const LaurentSeries qs = q_power(1, prec + 2);

    const PochhammerOrder num_a(big_a, false);
    const PochhammerOrder den_q(qs, true);
    const PochhammerOrder den_a(a, true);
    const PochhammerOrder den_b(b, true);
    const PochhammerOrder den_big(big_a, true);
    const auto order_of_term = [&, weight](std::int64_t n) {
        return num_a(2 * n) - den_q(n) - den_a(n) - den_b(n) - den_big(n) + weight * n;
    };
    std::int64_t regular = std::max({(num_a.regular_from() + 1) / 2, den_a.regular_from(), den_b.regular_from(),
                                     den_big.regular_from(), std::int64_t{1}});
    const SumBound bound{order_of_term, regular};

    // Lower bound on the order of the (q,a,b;q)_oo prefactor.
    Exponent pre_low = 0;
    for (const auto* x : {&a, &b}) {
        for (std::int64_t i = 0; x->valuation() + i < 0; ++i) {
            pre_low += x->valuation() + i;
        }
    }
    const Exponent sum_prec = prec - pre_low;
    const auto stop = bound.stop_index(sum_prec, default_term_cap(sum_prec) + regular);
    const Exponent sum_low = bound.min_before(0, stop);

    LaurentSeries term = LaurentSeries::one(std::max<Exponent>(sum_prec - sum_low, 1));
    LaurentSeries sum = term;
    for (std::int64_t n = 0; n + 1 < stop; ++n) {
        term = multiply(term, one_minus(shift(big_a, 2 * n)));
        term = multiply(term, one_minus(shift(big_a, 2 * n + 1)));
        term = divide(term, one_minus(shift(qs, n)));
        term = divide(term, one_minus(shift(a, n)));
        term = divide(term, one_minus(shift(b, n)));
        term = divide(term, one_minus(shift(big_a, n)));
        term = shift(term, weight);
        sum = add(sum, term);
    }
    sum = truncate(sum, sum_prec);
    const std::vector<LaurentSeries> pre{qs, a, b};
    return truncate(multiply(qpoch_multi(pre, std::nullopt, prec - sum_low), sum), prec);
}

} // namespace

LaurentSeries u_series(int m, const LaurentSeries& b, Exponent prec)
{
    check_m(m, 0, "U");
    const Exponent vb = b.valuation();
    if (m == 0) {
        const SumBound bound{[vb](std::int64_t k) { return 2 * k * k - k + 2 * k * vb + std::min<Exponent>(0, vb + 2 * k); },
                             std::max<std::int64_t>(0, -vb) + 1};
        const auto stop = bound.stop_index(prec, default_term_cap(prec) + std::max<Exponent>(0, -vb));
        const Exponent work = prec - bound.min_before(0, stop);
        const LaurentSeries b2 = multiply(b, b);
        LaurentSeries power = LaurentSeries::one(std::max<Exponent>(work, 1)); // b^{2k} q^{2k^2-k}
        LaurentSeries sum = LaurentSeries::zero(work);
        for (std::int64_t k = 0; k < stop; ++k) {
            if (k > 0) {
                power = shift(multiply(power, b2), 4 * k - 3);
            }
            sum = add(sum, multiply(power, one_minus(shift(b, 2 * k))));
        }
        return truncate(sum, prec);
    }

    const LaurentSeries lead = q_power(1 - m, prec + 1);
    const Exponent work = prec + m * m + 8;
    LaurentSeries sum = LaurentSeries::zero(work);
    for (int k = 0; k < m; ++k) {
        LaurentSeries term = qpoch_finite(lead, k, work);
        term = divide(term, qpoch_finite(q_power(1, work), k, work));
        term = divide_by_denominator(term, qpoch_finite(shift(b, k), m, work), "U: (bq^k;q)_m");
        term = multiply(term, one_minus(shift(b, 2 * k)));
        term = multiply(term, pow_int(b, 2 * k));
        sum = add(sum, shift(term, 2 * k * k - k + m * k));
    }
    return truncate(sum, prec);
}

LaurentSeries v_series(int m, int n, const LaurentSeries& a, const LaurentSeries& b, Exponent prec)
{
    check_m(m, 0, "V");
    if (n < 0) {
        throw DomainError("V: n must be >= 0, got " + std::to_string(n));
    }
    const Exponent work = prec + m + n + 8;
    const std::vector<LaurentSeries> upper{q_power(-m, work), q_power(-n, work)};
    const std::vector<LaurentSeries> lower{shift(multiply(a, b), n - 1)};
    return bhs(upper, lower, shift(b, m + n), prec);
}

LaurentSeries q_normalizer(int m, const LaurentSeries& b, Exponent prec)
{
    check_m(m, 2, "Q");
    const Exponent vb = std::min<Exponent>(b.valuation(), 0);
    // Terms can reach order about -2(m-1)^2 |ord b| before cancelling.
    const Exponent work = prec + 2 * (m + 1) * (m + 1) * (1 - vb) + 8;
    const LaurentSeries lead = q_power(2 - m, work);
    LaurentSeries sum = LaurentSeries::zero(work);
    for (int i = 0; i <= m - 2; ++i) {
        LaurentSeries term = qpoch_finite(lead, i, work);
        term = divide(term, qpoch_finite(q_power(1, work), i, work));
        term = divide_by_denominator(term, qpoch_finite(shift(b, i), m - 1, work), "Q: (bq^i;q)_{m-1}");
        term = multiply(term, one_minus(shift(b, 2 * i)));
        term = multiply(term, pow_int(b, 2 * i));
        sum = add(sum, shift(term, static_cast<Exponent>(2 * i - 2 + m) * i));
    }
    return truncate(sum, prec);
}

LaurentSeries lambda_coefficient(int m, int k, const LaurentSeries& b, Exponent prec)
{
    check_m(m, 2, "lambda");
    if (k < 0 || k >= m) {
        throw DomainError("lambda: k must lie in [0, m), got " + std::to_string(k));
    }
    const Exponent vb = std::min<Exponent>(b.valuation(), 0);
    const Exponent work = prec + 4 * m * (1 - vb) + 8;
    const LaurentSeries normalizer = q_normalizer(m, shift(b, 1 - m), work);
    if (normalizer.is_zero()) {
        throw DegenerateParameterError("Q_" + std::to_string(m) + "(b q^" + std::to_string(1 - m)
                                       + ") vanishes to precision; lambda is undefined");
    }
    LaurentSeries top = qpoch_finite(q_power(m - k, work), k, work);
    top = multiply(top, pow_int(shift(b, k - m + 1), k));
    top = divide(top, qpoch_finite(q_power(1, work), k, work));
    return truncate(divide(top, normalizer), prec);
}

LaurentSeries p_series(int m, const LaurentSeries& a, const LaurentSeries& b, Exponent prec)
{
    check_m(m, 2, "P");
    return andrews_warnaar_sum(m, 1, a, b, prec);
}

LaurentSeries s_series(const LaurentSeries& a, const LaurentSeries& b, Exponent prec)
{
    return andrews_warnaar_sum(3, 2, a, b, prec);
}

LaurentSeries omega_sum(const LaurentSeries& a, const LaurentSeries& b, Exponent prec)
{
    const Exponent va = a.valuation();
    const Exponent vb = b.valuation();
    const SumBound bound{[va, vb](std::int64_t n) { return binom2(n) + n * vb + theta_partial_order_bound(va + n); },
                         std::max<std::int64_t>(0, -vb)};
    const auto stop = bound.stop_index(prec, default_term_cap(prec) + std::max<Exponent>(0, -vb) + std::max<Exponent>(0, -va));
    const Exponent work = prec - bound.min_before(0, stop);

    LaurentSeries prefactor = LaurentSeries::one(std::max<Exponent>(work, 1)); // (-1)^n q^{C(n,2)} b^n
    LaurentSeries sum = LaurentSeries::zero(work);
    for (std::int64_t n = 0; n < stop; ++n) {
        if (n > 0) {
            prefactor = -shift(multiply(prefactor, b), n - 1);
        }
        const Exponent pre_order = binom2(n) + n * vb;
        sum = add(sum, multiply(prefactor, theta_partial(shift(a, n), prec - pre_order)));
    }
    return truncate(sum, prec);
}

LaurentSeries theta_k_combination(int k, const LaurentSeries& a, const LaurentSeries& b, Exponent prec)
{
    if (k < 0) {
        throw DomainError("ThetaK: k must be >= 0, got " + std::to_string(k));
    }
    require_nonzero(a, "ThetaK: a");
    require_nonzero(b, "ThetaK: b");
    const LaurentSeries a_plus_b = add(a, b);
    require_nonzero(a_plus_b, "ThetaK: a + b");

    const Exponent headroom = k + 1 + 2 * std::max<Exponent>(0, -std::min(a.valuation(), b.valuation()))
                              + 2 * std::max<Exponent>(0, a_plus_b.valuation()) + 4;
    const Exponent work = prec + headroom;
    const LaurentSeries one = constant(1, work);
    const LaurentSeries one_plus_q = polynomial({{1, 0}, {1, 1}}, work);

    const LaurentSeries c1 = divide(multiply(b, add(one, shift(a, k + 1))), multiply(a, one_plus_q));
    const LaurentSeries c2 = divide(multiply(a, add(one, shift(b, k + 1))), multiply(b, one_plus_q));
    const LaurentSeries c3 = divide(add(one, shift(a, k)), shift(a_plus_b, k + 1));
    const LaurentSeries c4 = divide(add(one, shift(b, k)), shift(a_plus_b, k + 1));

    LaurentSeries r = multiply(c1, theta_partial(shift(b, k + 2), work));
    r = subtract(r, multiply(c2, theta_partial(shift(a, k + 2), work)));
    r = add(r, multiply(c3, theta_partial(shift(b, k + 1), work)));
    r = subtract(r, multiply(c4, theta_partial(shift(a, k + 1), work)));
    return truncate(r, prec);
}

LaurentSeries t_combination(const LaurentSeries& a, Exponent prec)
{
    require_nonzero(a, "T: a");
    const Exponent work = prec + 4 + 2 * std::max<Exponent>(0, a.valuation()) + 2 * std::max<Exponent>(0, -a.valuation());
    const LaurentSeries a2 = multiply(a, a);
    // (a - a^2 + aq - q^2) / (1 + q + q^2)
    LaurentSeries c1 = add(a, shift(a, 1));
    c1 = subtract(c1, a2);
    c1 = subtract(c1, q_power(2, work));
    c1 = divide(c1, polynomial({{1, 0}, {1, 1}, {1, 2}}, work));
    // (aq - a^2 + aq^2 - q^4) / (aq)
    LaurentSeries c2 = add(shift(a, 1), shift(a, 2));
    c2 = subtract(c2, a2);
    c2 = subtract(c2, q_power(4, work));
    c2 = divide(c2, shift(a, 1));

    LaurentSeries r = multiply(c1, theta_partial(a, work));
    r = add(r, multiply(c2, theta_partial(shift(a, -1), work)));
    return truncate(r, prec);
}

} // namespace qtheta
