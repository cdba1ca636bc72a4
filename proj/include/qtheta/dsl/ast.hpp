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
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace qtheta::dsl {

enum class Sort { integer, series };

enum class NodeKind {
    literal,  ///< nonnegative integer literal
    variable, ///< summation index (integer sort)
    param,    ///< free parameter (series sort)
    q,
    negate,
    add,
    subtract,
    multiply,
    divide,
    power,
    call,
    sum,
};

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::literal;
    Sort sort = Sort::series;
    std::size_t pos = 0;
    std::int64_t value = 0;
    /// Identifier of a variable, param or call; index name of a sum.
    std::string name;
    /// Operands. For phi the upper list, then the lower list, then z. For a
    /// sum: lower limit, upper limit (null for inf), body, orderbound (may
    /// be null).
    std::vector<Expr> children;
    /// phi only: how many of the children are upper parameters.
    std::size_t upper_count = 0;
};

Expr make_literal(std::int64_t value, std::size_t pos);
Expr make_variable(std::string name, std::size_t pos);
Expr make_param(std::string name, std::size_t pos);
Expr make_q(std::size_t pos);
Expr make_negate(Expr operand, std::size_t pos);
/// Binary node; sort is integer only when both operands are (divide is
/// always series). Throws SortError for a series exponent.
Expr make_binary(NodeKind kind, Expr lhs, Expr rhs, std::size_t pos);

/// Structural equality ignoring positions.
bool same_structure(const Expr& x, const Expr& y);

/// Text that parses back to a structurally identical tree.
std::string render(const Expr& e);

/// Names of the free parameters referenced by e.
std::set<std::string> free_parameters(const Expr& e);

} // namespace qtheta::dsl
