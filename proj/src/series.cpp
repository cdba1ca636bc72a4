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
#include <qtheta/series.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>

#include <qtheta/detail/mul_kernels.hpp>
#include <qtheta/error.hpp>

namespace qtheta {

LaurentSeries::LaurentSeries(Exponent min_exp, std::vector<Rational> coeffs, Exponent prec)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)), prec_(prec)
{
    canonicalize();
}

void LaurentSeries::canonicalize()
{
    if (min_exp_ >= prec_) {
        coeffs_.clear();
    } else if (static_cast<Exponent>(coeffs_.size()) > prec_ - min_exp_) {
        coeffs_.resize(static_cast<std::size_t>(prec_ - min_exp_));
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) {
        ++lead;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        min_exp_ += static_cast<Exponent>(lead);
    }
    if (coeffs_.empty()) {
        min_exp_ = 0;
    }
}

LaurentSeries LaurentSeries::zero(Exponent prec)
{
    return LaurentSeries(0, {}, prec);
}

LaurentSeries LaurentSeries::one(Exponent prec)
{
    return monomial(Rational(1), 0, prec);
}

LaurentSeries LaurentSeries::from_rational(const Rational& c, Exponent prec)
{
    if (sgn(c) == 0) {
        return zero(prec);
    }
    return monomial(c, 0, prec);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, Exponent e, Exponent prec)
{
    if (e >= prec) {
        throw PrecisionError("monomial q^" + std::to_string(e) + " is not representable below precision "
                             + std::to_string(prec));
    }
    return LaurentSeries(e, {c}, prec);
}

LaurentSeries LaurentSeries::from_coefficients(Exponent min_exp, std::vector<Rational> coeffs, Exponent prec)
{
    return LaurentSeries(min_exp, std::move(coeffs), prec);
}

std::optional<Exponent> LaurentSeries::order() const noexcept
{
    if (is_zero()) {
        return std::nullopt;
    }
    return min_exp_;
}

const Rational& LaurentSeries::bottom_coefficient() const
{
    if (is_zero()) {
        throw DivisionByZeroError("series is zero to precision " + std::to_string(prec_));
    }
    return coeffs_.front();
}

Rational LaurentSeries::coeff_at(Exponent e) const
{
    if (e >= prec_) {
        throw PrecisionError("coefficient of q^" + std::to_string(e) + " requested beyond precision "
                             + std::to_string(prec_));
    }
    if (is_zero() || e < min_exp_ || e >= min_exp_ + static_cast<Exponent>(coeffs_.size())) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

std::optional<Rational> LaurentSeries::constant_value() const
{
    if (is_zero()) {
        return Rational(0);
    }
    if (coeffs_.size() == 1 && min_exp_ == 0) {
        return coeffs_.front();
    }
    return std::nullopt;
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other)
{
    return *this = add(*this, other);
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other)
{
    return *this = subtract(*this, other);
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& other)
{
    return *this = multiply(*this, other);
}

LaurentSeries& LaurentSeries::operator/=(const LaurentSeries& other)
{
    return *this = divide(*this, other);
}

namespace {

LaurentSeries combine(const LaurentSeries& x, const LaurentSeries& y, bool subtract_y)
{
    const Exponent prec = std::min(x.precision(), y.precision());
    if (x.is_zero() && y.is_zero()) {
        return LaurentSeries::zero(prec);
    }
    Exponent lo = std::numeric_limits<Exponent>::max();
    Exponent hi = std::numeric_limits<Exponent>::min();
    for (const auto* s : {&x, &y}) {
        if (!s->is_zero()) {
            lo = std::min(lo, s->min_exp());
            hi = std::max(hi, s->min_exp() + static_cast<Exponent>(s->coefficients().size()));
        }
    }
    hi = std::min(hi, prec);
    if (lo >= hi) {
        return LaurentSeries::zero(prec);
    }
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo));
    const auto accumulate = [&](const LaurentSeries& s, bool negative) {
        const auto& c = s.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Exponent e = s.min_exp() + static_cast<Exponent>(i);
            if (e >= hi) {
                break;
            }
            auto& slot = out[static_cast<std::size_t>(e - lo)];
            if (negative) {
                slot -= c[i];
            } else {
                slot += c[i];
            }
        }
    };
    accumulate(x, false);
    accumulate(y, subtract_y);
    return LaurentSeries::from_coefficients(lo, std::move(out), prec);
}

} // namespace

LaurentSeries add(const LaurentSeries& x, const LaurentSeries& y)
{
    return combine(x, y, false);
}

LaurentSeries subtract(const LaurentSeries& x, const LaurentSeries& y)
{
    return combine(x, y, true);
}

LaurentSeries negate(const LaurentSeries& x)
{
    return -x;
}

LaurentSeries multiply(const LaurentSeries& x, const LaurentSeries& y, MulKernel kernel)
{
    const Exponent prec = std::min(x.precision() + y.valuation(), y.precision() + x.valuation());
    if (x.is_zero() || y.is_zero()) {
        return LaurentSeries::zero(prec);
    }
    const Exponent lo = x.min_exp() + y.min_exp();
    if (lo >= prec) {
        return LaurentSeries::zero(prec);
    }
    const auto len = static_cast<std::size_t>(prec - lo);
    const std::span<const Rational> xs(x.coefficients());
    const std::span<const Rational> ys(y.coefficients());
    if (kernel == MulKernel::automatic) {
        kernel = detail::select_mul_kernel(xs, ys, len);
    }
    auto coeffs = kernel == MulKernel::cleared ? detail::mul_cleared(xs, ys, len) : detail::mul_reference(xs, ys, len);
    return LaurentSeries::from_coefficients(lo, std::move(coeffs), prec);
}

LaurentSeries scale(const LaurentSeries& x, const Rational& c)
{
    if (sgn(c) == 0) {
        return LaurentSeries::zero(x.precision());
    }
    std::vector<Rational> coeffs(x.coefficients());
    for (auto& v : coeffs) {
        v *= c;
    }
    return LaurentSeries::from_coefficients(x.min_exp(), std::move(coeffs), x.precision());
}

namespace {

// Coefficients g[0..len) of num / den where den[0] != 0, i.e. the solution
// of sum_i den[i] * g[j - i] = num[j]. Only nonzero den terms are visited.
std::vector<Rational> long_division(const std::vector<Rational>& num, const std::vector<Rational>& den, std::size_t len)
{
    std::vector<std::pair<std::size_t, const Rational*>> tail;
    for (std::size_t i = 1; i < den.size() && i < len; ++i) {
        if (sgn(den[i]) != 0) {
            tail.emplace_back(i, &den[i]);
        }
    }
    const Rational inv_lead = 1 / den.front();
    std::vector<Rational> g(len);
    Rational acc;
    Rational t;
    for (std::size_t j = 0; j < len; ++j) {
        acc = j < num.size() ? num[j] : Rational(0);
        for (const auto& [i, d] : tail) {
            if (i > j) {
                break;
            }
            if (sgn(g[j - i]) != 0) {
                mpq_mul(t.get_mpq_t(), d->get_mpq_t(), g[j - i].get_mpq_t());
                mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
            }
        }
        if (sgn(acc) != 0) {
            mpq_mul(g[j].get_mpq_t(), acc.get_mpq_t(), inv_lead.get_mpq_t());
        }
    }
    return g;
}

} // namespace

LaurentSeries invert(const LaurentSeries& x)
{
    if (x.is_zero()) {
        throw DivisionByZeroError("cannot invert a series that is zero to precision " + std::to_string(x.precision()));
    }
    const Exponent d = x.min_exp();
    const Exponent prec = x.precision() - 2 * d;
    const auto len = static_cast<std::size_t>(x.precision() - d);
    auto coeffs = long_division({Rational(1)}, x.coefficients(), len);
    return LaurentSeries::from_coefficients(-d, std::move(coeffs), prec);
}

LaurentSeries divide(const LaurentSeries& x, const LaurentSeries& y)
{
    if (y.is_zero()) {
        throw DivisionByZeroError("division by a series that is zero to precision " + std::to_string(y.precision()));
    }
    const Exponent d = y.min_exp();
    const Exponent prec = std::min(x.precision() - d, y.precision() - 2 * d + x.valuation());
    if (x.is_zero()) {
        return LaurentSeries::zero(prec);
    }
    const Exponent lo = x.min_exp() - d;
    if (lo >= prec) {
        return LaurentSeries::zero(prec);
    }
    const auto len = static_cast<std::size_t>(prec - lo);
    auto coeffs = long_division(x.coefficients(), y.coefficients(), len);
    return LaurentSeries::from_coefficients(lo, std::move(coeffs), prec);
}

LaurentSeries shift(const LaurentSeries& x, Exponent k)
{
    if (x.is_zero()) {
        return LaurentSeries::zero(x.precision() + k);
    }
    return LaurentSeries::from_coefficients(x.min_exp() + k, x.coefficients(), x.precision() + k);
}

LaurentSeries truncate(const LaurentSeries& x, Exponent p)
{
    if (p >= x.precision()) {
        return x;
    }
    return LaurentSeries::from_coefficients(x.min_exp(), x.coefficients(), p);
}

LaurentSeries pow_int(const LaurentSeries& x, std::int64_t n)
{
    if (n == 0) {
        return LaurentSeries::one(std::max<Exponent>(x.precision(), 1));
    }
    LaurentSeries base = n < 0 ? invert(x) : x;
    // Negating INT64_MIN is not an issue in practice: no exponent gets near it.
    auto e = static_cast<std::uint64_t>(n < 0 ? -n : n);
    std::optional<LaurentSeries> result;
    while (true) {
        if (e & 1u) {
            result = result ? multiply(*result, base) : base;
        }
        e >>= 1u;
        if (e == 0) {
            break;
        }
        base = multiply(base, base);
    }
    return *result;
}

PrecisionEquality eq_to_prec(const LaurentSeries& x, const LaurentSeries& y)
{
    const auto d = subtract(x, y);
    return {d.is_zero(), d.precision()};
}

namespace {

std::string render_power(Exponent e)
{
    if (e == 0) {
        return "";
    }
    if (e == 1) {
        return "q";
    }
    return "q^" + std::to_string(e);
}

} // namespace

std::string to_string(const LaurentSeries& x)
{
    std::string out;
    const auto& c = x.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) {
            continue;
        }
        const Exponent e = x.min_exp() + static_cast<Exponent>(i);
        const bool negative = sgn(c[i]) < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(c[i]);
        const std::string power = render_power(e);
        if (power.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += power;
        } else {
            out += to_string(mag) + "*" + power;
        }
    }
    out += out.empty() ? "" : " + ";
    const std::string tail = render_power(x.precision());
    out += "O(" + (tail.empty() ? std::string("1") : tail) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& x)
{
    return os << to_string(x);
}

namespace {

[[noreturn]] void bad_series(std::string_view text, const std::string& why)
{
    throw std::invalid_argument("cannot parse series '" + std::string(text) + "': " + why);
}

// Parses "q", "q^k", "q^-k" (already stripped of spaces); returns exponent.
Exponent parse_power(std::string_view text, std::string_view whole)
{
    if (text == "1") {
        return 0;
    }
    if (text.empty() || text.front() != 'q') {
        bad_series(whole, "expected a power of q, got '" + std::string(text) + "'");
    }
    if (text.size() == 1) {
        return 1;
    }
    if (text[1] != '^' || text.size() == 2) {
        bad_series(whole, "malformed power '" + std::string(text) + "'");
    }
    try {
        std::size_t used = 0;
        const std::string digits(text.substr(2));
        const long long e = std::stoll(digits, &used);
        if (used != digits.size()) {
            bad_series(whole, "malformed exponent '" + digits + "'");
        }
        return e;
    } catch (const std::logic_error&) {
        bad_series(whole, "malformed exponent in '" + std::string(text) + "'");
    }
}

} // namespace

LaurentSeries parse_series(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    // Split into signed terms at '+'/'-' not following '^' or '('.
    std::vector<std::pair<bool, std::string>> terms;
    bool negative = false;
    std::string current;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        const bool sign = (ch == '+' || ch == '-') && !(i > 0 && (s[i - 1] == '^' || s[i - 1] == '('));
        if (sign) {
            if (!current.empty()) {
                terms.emplace_back(negative, current);
                current.clear();
                negative = false;
            }
            negative = negative != (ch == '-');
            continue;
        }
        current.push_back(ch);
    }
    if (!current.empty()) {
        terms.emplace_back(negative, current);
    }
    if (terms.empty() || terms.back().second.rfind("O(", 0) != 0 || terms.back().second.back() != ')') {
        bad_series(text, "missing trailing O(q^p) term");
    }
    const auto& big_o = terms.back().second;
    const Exponent prec = parse_power(std::string_view(big_o).substr(2, big_o.size() - 3), text);
    terms.pop_back();

    std::map<Exponent, Rational> acc;
    for (const auto& [neg, term] : terms) {
        Rational coeff(1);
        Exponent e = 0;
        const auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = parse_rational(term.substr(0, star));
            e = parse_power(std::string_view(term).substr(star + 1), text);
        } else if (term.front() == 'q') {
            e = parse_power(term, text);
        } else {
            coeff = parse_rational(term);
        }
        if (e >= prec) {
            bad_series(text, "term q^" + std::to_string(e) + " at or beyond the precision");
        }
        acc[e] += neg ? Rational(-coeff) : coeff;
    }
    if (acc.empty()) {
        return LaurentSeries::zero(prec);
    }
    const Exponent lo = acc.begin()->first;
    std::vector<Rational> coeffs(static_cast<std::size_t>(acc.rbegin()->first - lo + 1));
    for (const auto& [e, c] : acc) {
        coeffs[static_cast<std::size_t>(e - lo)] = c;
    }
    return LaurentSeries::from_coefficients(lo, std::move(coeffs), prec);
}

} // namespace qtheta
