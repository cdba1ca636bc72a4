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
#include <qtheta/detail/mul_kernels.hpp>

#include <algorithm>

namespace qtheta::detail {

namespace {

// Below this many nonzero terms in either operand the per-coefficient
// denominator clearing costs more than it saves.
constexpr std::size_t cleared_min_terms = 6;

std::size_t count_nonzero(std::span<const Rational> v, std::size_t limit)
{
    const auto n = std::min(v.size(), limit);
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n), [](const Rational& c) { return sgn(c) != 0; }));
}

// Scales v[0..n) to integers over a common denominator; returns the lcm.
Integer clear_denominators(std::span<const Rational> v, std::size_t n, std::vector<Integer>& out)
{
    Integer lcm = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(v[i]) != 0) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v[i].get_den_mpz_t());
        }
    }
    out.assign(n, Integer(0));
    Integer factor;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(v[i]) != 0) {
            mpz_divexact(factor.get_mpz_t(), lcm.get_mpz_t(), v[i].get_den_mpz_t());
            mpz_mul(out[i].get_mpz_t(), factor.get_mpz_t(), v[i].get_num_mpz_t());
        }
    }
    return lcm;
}

} // namespace

std::vector<Rational> mul_reference(std::span<const Rational> x, std::span<const Rational> y, std::size_t len)
{
    std::vector<Rational> out(len);
    Rational t;
    const auto nx = std::min(x.size(), len);
    for (std::size_t i = 0; i < nx; ++i) {
        if (sgn(x[i]) == 0) {
            continue;
        }
        const auto ny = std::min(y.size(), len - i);
        for (std::size_t j = 0; j < ny; ++j) {
            if (sgn(y[j]) == 0) {
                continue;
            }
            mpq_mul(t.get_mpq_t(), x[i].get_mpq_t(), y[j].get_mpq_t());
            mpq_add(out[i + j].get_mpq_t(), out[i + j].get_mpq_t(), t.get_mpq_t());
        }
    }
    return out;
}

std::vector<Rational> mul_cleared(std::span<const Rational> x, std::span<const Rational> y, std::size_t len)
{
    const auto nx = std::min(x.size(), len);
    const auto ny = std::min(y.size(), len);
    std::vector<Integer> xi;
    std::vector<Integer> yi;
    const Integer lx = clear_denominators(x, nx, xi);
    const Integer ly = clear_denominators(y, ny, yi);

    std::vector<Integer> acc(len);
    for (std::size_t i = 0; i < nx; ++i) {
        if (sgn(xi[i]) == 0) {
            continue;
        }
        const auto m = std::min(ny, len - i);
        for (std::size_t j = 0; j < m; ++j) {
            if (sgn(yi[j]) != 0) {
                mpz_addmul(acc[i + j].get_mpz_t(), xi[i].get_mpz_t(), yi[j].get_mpz_t());
            }
        }
    }

    const Integer den = lx * ly;
    std::vector<Rational> out(len);
    for (std::size_t k = 0; k < len; ++k) {
        if (sgn(acc[k]) != 0) {
            out[k] = Rational(acc[k], den);
            out[k].canonicalize();
        }
    }
    return out;
}

MulKernel select_mul_kernel(std::span<const Rational> x, std::span<const Rational> y, std::size_t len)
{
    if (count_nonzero(x, len) < cleared_min_terms || count_nonzero(y, len) < cleared_min_terms) {
        return MulKernel::reference;
    }
    return MulKernel::cleared;
}

} // namespace qtheta::detail
