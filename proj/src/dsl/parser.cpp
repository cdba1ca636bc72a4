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
#include <qtheta/dsl/parser.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include <qtheta/dsl/lexer.hpp>
#include <qtheta/error.hpp>

namespace qtheta::dsl {

namespace {

// 'i' integer argument, 's' series argument.
struct Signature {
    std::string_view name;
    std::string_view args;
    Sort result = Sort::series;
};

constexpr std::array<Signature, 12> fixed_builtins{{
    {"theta", "s"},
    {"jtheta", "s"},
    {"Pm", "iss"},
    {"U", "is"},
    {"V", "iiss"},
    {"Q", "is"},
    {"lam", "iis"},
    {"S", "ss"},
    {"Omega", "ss"},
    {"ThetaK", "iss"},
    {"T", "s"},
    {"binom2", "i", Sort::integer},
}};

const Signature* find_fixed(std::string_view name)
{
    for (const auto& s : fixed_builtins) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

bool is_parameter_name(std::string_view name)
{
    if (name.empty() || name.front() < 'a' || name.front() > 'z') {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Expr parse_all()
    {
        Expr e = expression();
        if (peek().kind != TokenKind::end) {
            throw SyntaxError("unexpected '" + peek().text + "' after expression", peek().pos);
        }
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;
    std::vector<std::string> scope_;

    const Token& peek() const { return toks_[at_]; }
    const Token& next() { return toks_[at_++]; }

    bool accept(std::string_view text)
    {
        if ((peek().kind == TokenKind::op || peek().kind == TokenKind::punct) && peek().text == text) {
            ++at_;
            return true;
        }
        return false;
    }

    const Token& expect(std::string_view text)
    {
        if (!accept(text)) {
            const Token& t = peek();
            throw SyntaxError("expected '" + std::string(text) + "' but found "
                                  + (t.kind == TokenKind::end ? std::string("end of input") : "'" + t.text + "'"),
                              t.pos);
        }
        return toks_[at_ - 1];
    }

    Expr expression()
    {
        Expr lhs = term();
        for (;;) {
            const std::size_t pos = peek().pos;
            if (accept("+")) {
                lhs = make_binary(NodeKind::add, lhs, term(), pos);
            } else if (accept("-")) {
                lhs = make_binary(NodeKind::subtract, lhs, term(), pos);
            } else {
                return lhs;
            }
        }
    }

    Expr term()
    {
        Expr lhs = unary();
        for (;;) {
            const std::size_t pos = peek().pos;
            if (accept("*")) {
                lhs = make_binary(NodeKind::multiply, lhs, unary(), pos);
            } else if (accept("/")) {
                lhs = make_binary(NodeKind::divide, lhs, unary(), pos);
            } else {
                return lhs;
            }
        }
    }

    Expr unary()
    {
        const std::size_t pos = peek().pos;
        if (accept("-")) {
            return make_negate(unary(), pos);
        }
        return power();
    }

    Expr power()
    {
        Expr base = primary();
        const std::size_t pos = peek().pos;
        if (accept("^")) {
            return make_binary(NodeKind::power, base, unary(), pos);
        }
        return base;
    }

    Expr primary()
    {
        const Token& t = next();
        switch (t.kind) {
        case TokenKind::number: {
            std::int64_t v = 0;
            const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
                throw LexError("integer literal out of range", t.pos);
            }
            return make_literal(v, t.pos);
        }
        case TokenKind::name:
            return name(t);
        case TokenKind::punct:
            if (t.text == "(") {
                Expr e = expression();
                expect(")");
                return e;
            }
            break;
        default:
            break;
        }
        if (t.kind == TokenKind::end) {
            throw SyntaxError("unexpected end of input", t.pos);
        }
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }

    Expr name(const Token& t)
    {
        const bool is_call = peek().kind == TokenKind::punct && peek().text == "(";
        if (is_call) {
            if (t.text == "sum") {
                return sum(t);
            }
            if (t.text == "phi") {
                return phi(t);
            }
            if (t.text == "poch" || t.text == "pochinf") {
                return poch(t);
            }
            if (const Signature* sig = find_fixed(t.text)) {
                return fixed_call(t, *sig);
            }
            throw UnknownNameError("unknown function '" + t.text + "'", t.pos);
        }
        if (t.text == "q") {
            return make_q(t.pos);
        }
        if (t.text == "inf") {
            throw SyntaxError("'inf' is only allowed as the upper limit of a sum", t.pos);
        }
        if (std::find(scope_.rbegin(), scope_.rend(), t.text) != scope_.rend()) {
            return make_variable(t.text, t.pos);
        }
        if (is_builtin(t.text)) {
            throw SyntaxError("'" + t.text + "' must be called with arguments", t.pos);
        }
        if (!is_parameter_name(t.text)) {
            throw UnknownNameError("unknown name '" + t.text + "'", t.pos);
        }
        return make_param(t.text, t.pos);
    }

    std::vector<Expr> argument_list()
    {
        std::vector<Expr> args;
        if (peek().kind == TokenKind::punct && (peek().text == ")" || peek().text == ";")) {
            return args;
        }
        args.push_back(expression());
        while (accept(",")) {
            args.push_back(expression());
        }
        return args;
    }

    static Expr call_node(const Token& t, std::vector<Expr> args, Sort sort, std::size_t upper_count = 0)
    {
        Node n;
        n.kind = NodeKind::call;
        n.sort = sort;
        n.pos = t.pos;
        n.name = t.text;
        n.children = std::move(args);
        n.upper_count = upper_count;
        return std::make_shared<const Node>(std::move(n));
    }

    static void require_integer(const Expr& e, std::string_view what)
    {
        if (e->sort != Sort::integer) {
            throw SortError(std::string(what) + " must be an integer expression", e->pos);
        }
    }

    Expr fixed_call(const Token& t, const Signature& sig)
    {
        expect("(");
        auto args = argument_list();
        const Token& close = expect(")");
        if (args.size() != sig.args.size()) {
            throw SyntaxError(t.text + " takes " + std::to_string(sig.args.size()) + " argument(s), got "
                                  + std::to_string(args.size()),
                              close.pos);
        }
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (sig.args[i] == 'i') {
                require_integer(args[i], "argument " + std::to_string(i + 1) + " of " + t.text);
            }
        }
        return call_node(t, std::move(args), sig.result);
    }

    Expr poch(const Token& t)
    {
        expect("(");
        auto args = argument_list();
        const Token& close = expect(")");
        const bool finite = t.text == "poch";
        const std::size_t min_args = finite ? 2 : 1;
        if (args.size() < min_args) {
            throw SyntaxError(t.text + " needs at least " + std::to_string(min_args) + " argument(s)", close.pos);
        }
        if (finite) {
            require_integer(args.back(), "the length of poch");
        }
        return call_node(t, std::move(args), Sort::series);
    }

    Expr phi(const Token& t)
    {
        expect("(");
        auto upper = argument_list();
        expect(";");
        auto lower = argument_list();
        expect(";");
        Expr z = expression();
        expect(")");
        if (upper.empty()) {
            throw SyntaxError("phi needs at least one upper parameter", t.pos);
        }
        const std::size_t upper_count = upper.size();
        std::vector<Expr> args = std::move(upper);
        args.insert(args.end(), lower.begin(), lower.end());
        args.push_back(std::move(z));
        return call_node(t, std::move(args), Sort::series, upper_count);
    }

    Expr sum(const Token& t)
    {
        expect("(");
        const Token& var = next();
        if (var.kind != TokenKind::name || !is_parameter_name(var.text) || var.text == "q" || var.text == "inf"
            || is_builtin(var.text)) {
            throw SyntaxError("sum needs an index variable name", var.pos);
        }
        expect(",");
        Expr lo = expression();
        require_integer(lo, "lower sum limit");
        expect(",");
        Expr hi;
        if (peek().kind == TokenKind::name && peek().text == "inf") {
            next();
        } else {
            hi = expression();
            require_integer(hi, "upper sum limit");
        }
        expect(",");
        scope_.push_back(var.text);
        Expr body = expression();
        Expr bound;
        if (accept(",")) {
            bound = expression();
            require_integer(bound, "orderbound");
        }
        scope_.pop_back();
        expect(")");
        if (!hi && !bound) {
            throw SyntaxError("infinite sum needs an orderbound", t.pos);
        }
        Node n;
        n.kind = NodeKind::sum;
        n.sort = Sort::series;
        n.pos = t.pos;
        n.name = var.text;
        n.children = {std::move(lo), std::move(hi), std::move(body), std::move(bound)};
        return std::make_shared<const Node>(std::move(n));
    }
};

} // namespace

bool is_builtin(std::string_view name)
{
    return find_fixed(name) != nullptr || name == "sum" || name == "phi" || name == "poch" || name == "pochinf";
}

Expr parse(std::string_view text, std::size_t base)
{
    return Parser(tokenize(text, base)).parse_all();
}

} // namespace qtheta::dsl
