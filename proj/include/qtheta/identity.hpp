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

#include <string>
#include <string_view>
#include <vector>

#include <qtheta/dsl/ast.hpp>

namespace qtheta {

enum class ConstraintKind { nonzero, notone, distinct, invertible };

/// An admissibility condition checked at a sampled binding.
///   nonzero(e)     e is not zero to precision
///   notone(e)      e - 1 is not zero to precision
///   distinct(x, y) x - y is not zero to precision
///   invertible(e)  e evaluates without error and is not zero to precision
struct Constraint {
    ConstraintKind kind = ConstraintKind::nonzero;
    std::vector<dsl::Expr> args;
};

/// name := expr, evaluated after the base parameters are sampled.
struct DerivedParam {
    std::string name;
    dsl::Expr expr;
};

struct IdentityDef {
    std::string name;
    std::vector<std::string> params;
    std::vector<Constraint> constraints;
    std::vector<DerivedParam> derived;
    dsl::Expr lhs;
    dsl::Expr rhs;
    std::string source;
};

/// Parses identity records:
///
///   identity <name> ; params <p1 p2 ...> ; require <c1, c2, ...> ;
///   derive <p> := <expr> ; lhs <expr> ; rhs <expr> ; source "<tag>"
///
/// Clauses are separated by ';' outside parentheses and quotes; a record
/// ends where the next one starts. require and derive are optional, derive
/// may repeat. Lines whose first non-blank character is '#' are comments.
/// Errors are RegistryError with "origin:line:col: " prefixed.
std::vector<IdentityDef> parse_identities(std::string_view text, std::string_view origin);

/// Record text that parse_identities reads back to the same definition.
std::string render_identity(const IdentityDef& def);

std::string_view constraint_name(ConstraintKind kind);

} // namespace qtheta
