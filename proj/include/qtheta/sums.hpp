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

#include <map>
#include <string>

#include <qtheta/series.hpp>

namespace qtheta {

/// Parameter name -> value. Rational parameters are embedded as constant
/// series; derived parameters may be genuine Laurent series in q.
using ParamBinding = std::map<std::string, LaurentSeries, std::less<>>;

// The composite q-series of the partial theta identities. All take series
// arguments and return a series truncated at prec (or lower, when the inputs'
// precision does not support prec). Denominators are checked before summing
// and raise DegenerateParameterError when they vanish.

/// U_m(b) = sum_k (q^{1-m};q)_k / ((q;q)_k (bq^k;q)_m) (1 - bq^{2k}) b^{2k} q^{2k^2-k+mk}.
/// Terminates at k = m-1 for m >= 1; infinite for m = 0.
LaurentSeries u_series(int m, const LaurentSeries& b, Exponent prec);

/// V_{m,n}(a,b) = 2phi1(q^{-m}, q^{-n}; abq^{n-1}; q, bq^{m+n}).
LaurentSeries v_series(int m, int n, const LaurentSeries& a, const LaurentSeries& b, Exponent prec);

/// Q_m(b) = sum_{i=0}^{m-2} (q^{2-m};q)_i / ((q;q)_i (bq^i;q)_{m-1}) (1 - bq^{2i}) b^{2i} q^{(2i-2+m)i}, m >= 2.
LaurentSeries q_normalizer(int m, const LaurentSeries& b, Exponent prec);

/// lambda_k(m,b) = (q^{m-k};q)_k (bq^{k-m+1})^k / ((q;q)_k Q_m(bq^{1-m})), 0 <= k < m.
/// Throws DegenerateParameterError when Q_m(bq^{1-m}) is zero to precision.
LaurentSeries lambda_coefficient(int m, int k, const LaurentSeries& b, Exponent prec);

/// P_m(a,b) = (q,a,b;q)_oo sum_n (ab/q^m;q)_{2n} / (q,a,b,ab/q^m;q)_n q^n, m >= 2.
LaurentSeries p_series(int m, const LaurentSeries& a, const LaurentSeries& b, Exponent prec);

/// S(a,b) = (q,a,b;q)_oo sum_n (ab/q^3;q)_{2n} / (q,a,b,ab/q^3;q)_n q^{2n}.
LaurentSeries s_series(const LaurentSeries& a, const LaurentSeries& b, Exponent prec);

/// Omega(a,b) = sum_n (-1)^n q^{n(n-1)/2} b^n theta(q, aq^n).
LaurentSeries omega_sum(const LaurentSeries& a, const LaurentSeries& b, Exponent prec);

/// The four-term theta combination Theta_k(q,a,b); needs a, b, a+b nonzero.
LaurentSeries theta_k_combination(int k, const LaurentSeries& a, const LaurentSeries& b, Exponent prec);

/// T(a) = (a - a^2 + aq - q^2)/(1+q+q^2) theta(q,a) + (aq - a^2 + aq^2 - q^4)/(aq) theta(q,a/q); a nonzero.
LaurentSeries t_combination(const LaurentSeries& a, Exponent prec);

} // namespace qtheta
