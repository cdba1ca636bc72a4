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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qtheta/rational.hpp>

namespace qtheta {

using Exponent = std::int64_t;

/// Selects the Cauchy-product kernel used by multiply(). The kernels are
/// bit-identical; automatic picks by operand density.
enum class MulKernel { automatic, reference, cleared };

/// Truncated formal Laurent series in q over the rationals with an absolute
/// precision: every coefficient of q^e with e < precision() is exact, nothing
/// is known at or above it.
///
/// Storage is dense from min_exp(). Canonical form: no stored leading or
/// trailing zeros, nothing stored at or above the precision; the series that
/// is zero to its precision stores no coefficients at all.
class LaurentSeries {
public:
    /// O(q^0).
    LaurentSeries() = default;

    static LaurentSeries zero(Exponent prec);
    static LaurentSeries one(Exponent prec);
    static LaurentSeries from_rational(const Rational& c, Exponent prec);
    /// c*q^e + O(q^prec). Throws PrecisionError when e >= prec.
    static LaurentSeries monomial(const Rational& c, Exponent e, Exponent prec);
    /// Builds from raw coefficients starting at min_exp; anything at or
    /// beyond prec is dropped and the result is trimmed.
    static LaurentSeries from_coefficients(Exponent min_exp, std::vector<Rational> coeffs, Exponent prec);

    Exponent precision() const noexcept { return prec_; }
    Exponent min_exp() const noexcept { return min_exp_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// True when the series is zero to its precision.
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Exponent of the lowest nonzero coefficient; empty for zero.
    std::optional<Exponent> order() const noexcept;
    /// order(), or precision() for the zero series. This is the value used
    /// by the precision formulas of multiply() and invert().
    Exponent valuation() const noexcept { return is_zero() ? prec_ : min_exp_; }
    /// Coefficient at order(). Throws DivisionByZeroError for zero.
    const Rational& bottom_coefficient() const;
    /// Throws PrecisionError for e >= precision().
    Rational coeff_at(Exponent e) const;

    /// Single stored coefficient (c*q^e up to precision).
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }
    /// The value when nothing but a constant term is stored.
    std::optional<Rational> constant_value() const;

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& other);
    LaurentSeries& operator-=(const LaurentSeries& other);
    LaurentSeries& operator*=(const LaurentSeries& other);
    LaurentSeries& operator/=(const LaurentSeries& other);

    /// Structural identity: same precision and same stored coefficients.
    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    LaurentSeries(Exponent min_exp, std::vector<Rational> coeffs, Exponent prec);
    void canonicalize();

    Exponent min_exp_ = 0;
    std::vector<Rational> coeffs_;
    Exponent prec_ = 0;
};

LaurentSeries add(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries subtract(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries negate(const LaurentSeries& x);
/// Precision min(x.prec + val(y), y.prec + val(x)).
LaurentSeries multiply(const LaurentSeries& x, const LaurentSeries& y, MulKernel kernel = MulKernel::automatic);
/// Multiplies by an exact rational; precision is unchanged.
LaurentSeries scale(const LaurentSeries& x, const Rational& c);
/// Precision x.prec - 2*ord(x). Throws DivisionByZeroError for zero.
LaurentSeries invert(const LaurentSeries& x);
/// Same value and precision as multiply(x, invert(y)), computed by long
/// division (cost proportional to the number of nonzero terms of y).
LaurentSeries divide(const LaurentSeries& x, const LaurentSeries& y);
/// Multiplies by q^k exactly.
LaurentSeries shift(const LaurentSeries& x, Exponent k);
/// Lowers the precision to min(x.prec, p).
LaurentSeries truncate(const LaurentSeries& x, Exponent p);
/// Binary exponentiation; negative n inverts first.
LaurentSeries pow_int(const LaurentSeries& x, std::int64_t n);

inline LaurentSeries operator+(LaurentSeries x, const LaurentSeries& y) { return x += y; }
inline LaurentSeries operator-(LaurentSeries x, const LaurentSeries& y) { return x -= y; }
inline LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) { return multiply(x, y); }
inline LaurentSeries operator/(const LaurentSeries& x, const LaurentSeries& y) { return divide(x, y); }

struct PrecisionEquality {
    bool equal;
    Exponent precision; ///< joint precision min(x.prec, y.prec)

    explicit operator bool() const noexcept { return equal; }
};

/// True iff x - y is zero to the joint precision.
PrecisionEquality eq_to_prec(const LaurentSeries& x, const LaurentSeries& y);

/// "c_m*q^m + ... + O(q^p)" with exact rationals.
std::string to_string(const LaurentSeries& x);
/// Inverse of to_string(). Throws std::invalid_argument.
LaurentSeries parse_series(std::string_view text);
std::ostream& operator<<(std::ostream& os, const LaurentSeries& x);

} // namespace qtheta
