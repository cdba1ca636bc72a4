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

#include <cstddef>
#include <span>
#include <vector>

#include <qtheta/rational.hpp>
#include <qtheta/series.hpp>

namespace qtheta::detail {

// Both kernels return the first len coefficients of the Cauchy product of
// two dense coefficient arrays (index i holds the coefficient of the i-th
// stored exponent).

/// Schoolbook product over mpq, skipping zero operands. This is the
/// reference every other kernel is tested against.
std::vector<Rational> mul_reference(std::span<const Rational> x, std::span<const Rational> y, std::size_t len);

/// Clears denominators, accumulates the product over mpz and divides back
/// once per output coefficient.
std::vector<Rational> mul_cleared(std::span<const Rational> x, std::span<const Rational> y, std::size_t len);

/// Runtime kernel choice for a product of the given shape.
MulKernel select_mul_kernel(std::span<const Rational> x, std::span<const Rational> y, std::size_t len);

} // namespace qtheta::detail
