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
#include <string_view>

#include <qtheta/dsl/ast.hpp>

namespace qtheta::dsl {

/// Parses and sort-checks an expression. Throws LexError, SyntaxError,
/// SortError or UnknownNameError carrying the offending offset (plus base).
Expr parse(std::string_view text, std::size_t base = 0);

/// True when name is a builtin function of the language.
bool is_builtin(std::string_view name);

} // namespace qtheta::dsl
