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
#include <qtheta/dsl/lexer.hpp>

#include <cctype>

#include <qtheta/error.hpp>

namespace qtheta::dsl {

namespace {

bool is_name_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

} // namespace

std::vector<Token> tokenize(std::string_view text, std::size_t base)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        TokenKind kind;
        if (is_digit(c)) {
            while (i < text.size() && is_digit(text[i])) {
                ++i;
            }
            if (i < text.size() && is_name_char(text[i])) {
                throw LexError("malformed number '" + std::string(text.substr(start, i + 1 - start)) + "'",
                               base + start);
            }
            kind = TokenKind::number;
        } else if (is_name_start(c)) {
            while (i < text.size() && is_name_char(text[i])) {
                ++i;
            }
            kind = TokenKind::name;
        } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            ++i;
            kind = TokenKind::op;
        } else if (c == '(' || c == ')' || c == ',' || c == ';') {
            ++i;
            kind = TokenKind::punct;
        } else {
            throw LexError(std::string("unexpected character '") + c + "'", base + start);
        }
        out.push_back({kind, std::string(text.substr(start, i - start)), base + start});
    }
    out.push_back({TokenKind::end, "", base + text.size()});
    return out;
}

} // namespace qtheta::dsl
