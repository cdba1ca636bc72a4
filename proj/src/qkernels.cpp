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
#include <qtheta/qkernels.hpp>

#include <algorithm>
#include <limits>
#include <string>

#include <qtheta/error.hpp>

namespace qtheta {

namespace {

constexpr Exponent binom2(std::int64_t n) { return n * (n - 1) / 2; }

// Exact 1 at a precision high enough not to limit anything computed below p.
LaurentSeries exact_one(Exponent p) { return LaurentSeries::one(std::max<Exponent>(p, 1)); }

} // namespace

LaurentSeries QMonomial::to_series(Exponent prec) const
{
    if (sgn(coef) == 0) {
        return LaurentSeries::zero(prec);
    }
    return LaurentSeries::monomial(coef, exp, prec);
}

std::int64_t default_term_cap(Exponent prec)
{
    return 10 * std::max<std::int64_t>(prec, 0) + 100;
}

std::int64_t SumBound::stop_index(Exponent prec, std::int64_t cap) const
{
    for (std::int64_t n = std::max<std::int64_t>(monotone_from, 0); n <= cap; ++n) {
        if (bound(n) >= prec) {
            return n;
        }
    }
    throw DivergenceError("term order bound does not reach precision " + std::to_string(prec) + " within "
                          + std::to_string(cap) + " terms");
}

Exponent SumBound::min_before(std::int64_t first, std::int64_t stop) const
{
    Exponent m = 0;
    for (std::int64_t n = first; n < stop; ++n) {
        m = std::min(m, bound(n));
    }
    return m;
}

PochhammerOrder::PochhammerOrder(const LaurentSeries& y, bool denominator)
{
    prefix_.push_back(0);
    const Exponent v = y.valuation();
    for (std::int64_t i = 0; v + i <= 0; ++i) {
        const auto f = one_minus(shift(y, i));
        Exponent order;
        if (!f.is_zero()) {
            order = f.min_exp();
        } else if (denominator) {
            throw DegenerateParameterError("Pochhammer denominator factor 1 - y*q^" + std::to_string(i)
                                           + " vanishes to precision");
        } else {
            order = f.precision();
        }
        prefix_.push_back(prefix_.back() + order);
    }
}

Exponent PochhammerOrder::operator()(std::int64_t n) const
{
    const auto i = std::min<std::int64_t>(n, static_cast<std::int64_t>(prefix_.size()) - 1);
    return prefix_[static_cast<std::size_t>(std::max<std::int64_t>(i, 0))];
}

LaurentSeries one_minus(const LaurentSeries& y)
{
    if (y.precision() <= 0) {
        return -y;
    }
    return subtract(LaurentSeries::one(y.precision()), y);
}

namespace {

// Lower bound on ord(1 - y q^i).
Exponent factor_order_bound(Exponent v, std::int64_t i) { return std::min<Exponent>(0, v + i); }

} // namespace

LaurentSeries qpoch_finite(const LaurentSeries& x, std::int64_t n, Exponent prec)
{
    if (n < 0) {
        throw DomainError("negative Pochhammer length " + std::to_string(n));
    }
    const Exponent v = x.valuation();
    // remaining[i] = lower bound on the order of factors i..n-1
    std::vector<Exponent> remaining(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = n - 1; i >= 0; --i) {
        remaining[static_cast<std::size_t>(i)] = remaining[static_cast<std::size_t>(i) + 1] + factor_order_bound(v, i);
    }
    LaurentSeries product = exact_one(prec - remaining[0]);
    for (std::int64_t i = 0; i < n; ++i) {
        product = multiply(product, one_minus(shift(x, i)));
        product = truncate(product, prec - remaining[static_cast<std::size_t>(i) + 1]);
    }
    return truncate(product, prec);
}

LaurentSeries qpoch_infinite(const LaurentSeries& x, Exponent prec)
{
    const Exponent v = x.valuation();
    Exponent negative_total = 0;
    for (std::int64_t i = 0; v + i < 0; ++i) {
        negative_total += v + i;
    }
    LaurentSeries product = exact_one(prec - negative_total);
    Exponent negative_left = negative_total;
    for (std::int64_t i = 0;; ++i) {
        // The omitted tail prod_{j>=i} (1 - x q^j) is 1 + O(q^{v+i}) once v+i > 0.
        if (v + i > 0 && product.valuation() + v + i >= prec) {
            const Exponent known = product.valuation() + v + i;
            return truncate(product, std::min(prec, known));
        }
        if (i > default_term_cap(prec) - v) {
            throw DivergenceError("infinite q-Pochhammer product did not converge");
        }
        product = multiply(product, one_minus(shift(x, i)));
        negative_left -= factor_order_bound(v, i);
        product = truncate(product, prec - negative_left);
    }
}

LaurentSeries qpoch_multi(std::span<const LaurentSeries> xs, std::optional<std::int64_t> n, Exponent prec)
{
    // Each factor is computed with enough headroom for the negative orders of
    // the others.
    std::vector<Exponent> lows;
    Exponent total_low = 0;
    for (const auto& x : xs) {
        const Exponent v = x.valuation();
        Exponent low = 0;
        const std::int64_t limit = n ? *n : std::numeric_limits<std::int64_t>::max();
        for (std::int64_t i = 0; i < limit && v + i < 0; ++i) {
            low += v + i;
        }
        lows.push_back(low);
        total_low += low;
    }
    LaurentSeries product = exact_one(prec - total_low);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const Exponent p = prec - (total_low - lows[j]);
        product = multiply(product, n ? qpoch_finite(xs[j], *n, p) : qpoch_infinite(xs[j], p));
    }
    return truncate(product, prec);
}

Exponent theta_partial_order_bound(Exponent order_of_x)
{
    Exponent best = 0;
    for (std::int64_t n = 1; n <= std::max<Exponent>(1, 1 - order_of_x); ++n) {
        best = std::min(best, binom2(n) + n * order_of_x);
    }
    return best;
}

SumBound theta_partial_bound(const LaurentSeries& x)
{
    const Exponent v = x.valuation();
    return SumBound{[v](std::int64_t n) { return binom2(n) + n * v; }, std::max<std::int64_t>(0, -v)};
}

LaurentSeries theta_partial(const LaurentSeries& x, Exponent prec)
{
    const SumBound bound = theta_partial_bound(x);
    const auto stop = bound.stop_index(prec, default_term_cap(prec) + std::max<Exponent>(0, -x.valuation()) * 4);
    LaurentSeries term = exact_one(prec - bound.min_before(0, stop));
    LaurentSeries sum = term;
    for (std::int64_t n = 1; n < stop; ++n) {
        term = -shift(multiply(term, x), n - 1);
        sum = add(sum, term);
    }
    return truncate(sum, prec);
}

LaurentSeries theta_full(const LaurentSeries& x, Exponent prec)
{
    if (x.is_zero()) {
        throw DomainError("jtheta argument is zero to precision " + std::to_string(x.precision()));
    }
    const Exponent v = x.min_exp();
    const SumBound forward{[v](std::int64_t n) { return binom2(n) + n * v; }, std::max<std::int64_t>(0, -v)};
    // term for n = -j is (-1)^j q^{j(j+1)/2} x^{-j}
    const SumBound backward{[v](std::int64_t j) { return binom2(j + 1) - j * v; }, std::max<std::int64_t>(0, v)};
    const auto cap = default_term_cap(prec) + 4 * (v < 0 ? -v : v);
    const auto stop_fwd = forward.stop_index(prec, cap);
    const auto stop_bwd = backward.stop_index(prec, cap);
    const Exponent low = std::min(forward.min_before(0, stop_fwd), backward.min_before(0, stop_bwd));

    const LaurentSeries start = exact_one(prec - low);
    LaurentSeries sum = start;
    LaurentSeries term = start;
    for (std::int64_t n = 1; n < stop_fwd; ++n) {
        term = -shift(multiply(term, x), n - 1);
        sum = add(sum, term);
    }
    const LaurentSeries y = invert(x);
    term = start;
    for (std::int64_t j = 1; j < stop_bwd; ++j) {
        term = -shift(multiply(term, y), j);
        sum = add(sum, term);
    }
    return truncate(sum, prec);
}

std::optional<std::int64_t> terminating_index(const LaurentSeries& x)
{
    if (x.is_monomial() && x.min_exp() <= 0 && x.coefficients().front() == 1) {
        return -x.min_exp();
    }
    return std::nullopt;
}

LaurentSeries bhs(std::span<const LaurentSeries> upper, std::span<const LaurentSeries> lower, const LaurentSeries& z,
                  Exponent prec)
{
    const auto r = static_cast<std::int64_t>(upper.size()) - 1;
    const auto s = static_cast<std::int64_t>(lower.size());
    const std::int64_t excess = s - r;

    std::optional<std::int64_t> last;
    for (const auto& u : upper) {
        if (const auto n = terminating_index(u)) {
            last = last ? std::min(*last, *n) : *n;
        }
    }

    std::vector<PochhammerOrder> num;
    std::vector<PochhammerOrder> den;
    for (const auto& u : upper) {
        num.emplace_back(u, false);
    }
    for (const auto& l : lower) {
        den.emplace_back(l, true);
    }
    const Exponent vz = z.valuation();
    const auto order_of_term = [&, excess, vz](std::int64_t k) {
        Exponent o = k * vz + excess * binom2(k);
        for (const auto& p : num) {
            o += p(k);
        }
        for (const auto& p : den) {
            o -= p(k);
        }
        return o;
    };

    std::int64_t stop = 0;
    Exponent low = 0;
    if (last) {
        stop = *last + 1;
        for (std::int64_t k = 0; k < stop; ++k) {
            low = std::min(low, order_of_term(k));
        }
    } else {
        if (!z.is_zero() && (excess < 0 || (excess == 0 && vz <= 0))) {
            throw DivergenceError("non-terminating basic hypergeometric series does not converge formally (s - r = "
                                  + std::to_string(excess) + ", ord(z) = " + std::to_string(vz) + ")");
        }
        std::int64_t regular = 1;
        for (const auto& p : num) {
            regular = std::max(regular, p.regular_from());
        }
        for (const auto& p : den) {
            regular = std::max(regular, p.regular_from());
        }
        if (excess > 0 && vz < 0) {
            regular = std::max<std::int64_t>(regular, (-vz + excess - 1) / excess);
        }
        const SumBound bound{order_of_term, regular};
        stop = bound.stop_index(prec, default_term_cap(prec) + regular);
        low = bound.min_before(0, stop);
    }

    const Exponent work = prec - low;
    LaurentSeries term = exact_one(work);
    LaurentSeries sum = term;
    const LaurentSeries q_power_one = LaurentSeries::monomial(Rational(1), 1, std::max<Exponent>(work, 2));
    for (std::int64_t k = 0; k + 1 < stop; ++k) {
        for (const auto& u : upper) {
            term = multiply(term, one_minus(shift(u, k)));
        }
        term = divide(term, one_minus(shift(q_power_one, k)));
        for (const auto& l : lower) {
            term = divide(term, one_minus(shift(l, k)));
        }
        term = shift(multiply(term, z), excess * k);
        if (excess % 2 != 0) {
            term = -term;
        }
        sum = add(sum, term);
    }
    return truncate(sum, prec);
}

} // namespace qtheta
