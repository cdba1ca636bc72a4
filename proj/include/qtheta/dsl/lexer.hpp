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
#include <string>
#include <string_view>
#include <vector>

namespace qtheta::dsl {

enum class TokenKind { number, name, op, punct, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    std::size_t pos = 0; ///< byte offset of the first character

    friend bool operator==(const Token&, const Token&) = default;
};

/// Splits text into tokens. Whitespace separates tokens and is dropped, so
/// text.substr(t.pos, t.text.size()) == t.text for every token. The last
/// token has kind end. Offsets are shifted by base (used when the text is a
/// slice of a larger file).
std::vector<Token> tokenize(std::string_view text, std::size_t base = 0);

} // namespace qtheta::dsl
