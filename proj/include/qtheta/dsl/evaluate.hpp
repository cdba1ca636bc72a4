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

#include <qtheta/dsl/ast.hpp>
#include <qtheta/series.hpp>
#include <qtheta/sums.hpp>

namespace qtheta::dsl {

/// Evaluates a series expression with every constant built to precision
/// prec. The result may carry less precision when negative orders are
/// divided out; callers add guard orders. Errors are EvalError carrying the
/// position of the failing node.
LaurentSeries evaluate(const Expr& e, const ParamBinding& binding, Exponent prec);

/// Evaluates an integer-sort expression without free variables.
std::int64_t evaluate_integer(const Expr& e);

/// Iteration cap for infinite sums at precision prec.
std::int64_t sum_iteration_cap(Exponent prec);

} // namespace qtheta::dsl
