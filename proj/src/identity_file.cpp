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
#include <qtheta/identity.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include <qtheta/dsl/parser.hpp>
#include <qtheta/error.hpp>

namespace qtheta {

std::string_view constraint_name(ConstraintKind kind)
{
    switch (kind) {
    case ConstraintKind::nonzero:
        return "nonzero";
    case ConstraintKind::notone:
        return "notone";
    case ConstraintKind::distinct:
        return "distinct";
    case ConstraintKind::invertible:
        return "invertible";
    }
    return "";
}

namespace {

struct Slice {
    std::size_t begin = 0;
    std::size_t end = 0;
};

bool is_space(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

class FileParser {
public:
    FileParser(std::string_view text, std::string_view origin) : origin_(origin), text_(blank_comments(text)) {}

    std::vector<IdentityDef> run()
    {
        std::vector<IdentityDef> out;
        std::optional<IdentityDef> current;
        std::set<std::string> seen_clauses;
        for (const Slice& clause : clauses()) {
            Slice s = trim(clause);
            if (s.begin == s.end) {
                continue;
            }
            const Slice kw = word(s);
            const std::string keyword(view(kw));
            const Slice rest = trim({kw.end, s.end});
            if (keyword == "identity") {
                if (current) {
                    out.push_back(finish(std::move(*current), s.begin));
                }
                current.emplace();
                current->name = identity_name(rest);
                seen_clauses = {"identity"};
                continue;
            }
            if (!current) {
                fail("expected 'identity' to start a record", s.begin);
            }
            if (keyword != "derive" && !seen_clauses.insert(keyword).second) {
                fail("duplicate '" + keyword + "' clause", s.begin);
            }
            if (keyword == "params") {
                current->params = param_list(rest);
            } else if (keyword == "require") {
                current->constraints = constraint_list(rest);
            } else if (keyword == "derive") {
                current->derived.push_back(derive(rest));
            } else if (keyword == "lhs") {
                current->lhs = expr(rest);
            } else if (keyword == "rhs") {
                current->rhs = expr(rest);
            } else if (keyword == "source") {
                current->source = quoted(rest);
            } else {
                fail("unknown clause '" + keyword + "'", s.begin);
            }
        }
        if (current) {
            out.push_back(finish(std::move(*current), text_.size()));
        }
        return out;
    }

private:
    std::string origin_;
    std::string text_;

    static std::string blank_comments(std::string_view text)
    {
        std::string out(text);
        std::size_t line = 0;
        while (line < out.size()) {
            std::size_t eol = out.find('\n', line);
            if (eol == std::string::npos) {
                eol = out.size();
            }
            std::size_t first = line;
            while (first < eol && is_space(out[first])) {
                ++first;
            }
            if (first < eol && out[first] == '#') {
                std::fill(out.begin() + static_cast<std::ptrdiff_t>(first),
                          out.begin() + static_cast<std::ptrdiff_t>(eol), ' ');
            }
            line = eol + 1;
        }
        return out;
    }

    [[noreturn]] void fail(const std::string& why, std::size_t offset) const
    {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw RegistryError(origin_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + why);
    }

    std::string_view view(Slice s) const { return std::string_view(text_).substr(s.begin, s.end - s.begin); }

    Slice trim(Slice s) const
    {
        while (s.begin < s.end && is_space(text_[s.begin])) {
            ++s.begin;
        }
        while (s.end > s.begin && is_space(text_[s.end - 1])) {
            --s.end;
        }
        return s;
    }

    Slice word(Slice s) const
    {
        std::size_t e = s.begin;
        while (e < s.end && !is_space(text_[e])) {
            ++e;
        }
        return {s.begin, e};
    }

    // Splits on ';' at depth zero outside quotes. A source clause is closed
    // by its string, so "source \"x\" identity next" yields two clauses.
    std::vector<Slice> clauses() const
    {
        std::vector<Slice> out;
        std::size_t start = 0;
        int depth = 0;
        bool in_quote = false;
        std::size_t quote_start = 0;
        for (std::size_t i = 0; i < text_.size(); ++i) {
            const char c = text_[i];
            if (in_quote) {
                if (c == '"') {
                    in_quote = false;
                    if (view(trim({start, i})).starts_with("source")) {
                        out.push_back({start, i + 1});
                        start = i + 1;
                    }
                }
                continue;
            }
            if (c == '"') {
                in_quote = true;
                quote_start = i;
            } else if (c == '(') {
                ++depth;
            } else if (c == ')') {
                if (--depth < 0) {
                    fail("unbalanced ')'", i);
                }
            } else if (c == ';' && depth == 0) {
                out.push_back({start, i});
                start = i + 1;
            }
        }
        if (in_quote) {
            fail("unterminated string", quote_start);
        }
        if (depth != 0) {
            fail("unbalanced '('", text_.size());
        }
        out.push_back({start, text_.size()});
        return out;
    }

    std::string identity_name(Slice s) const
    {
        const std::string_view name = view(s);
        const bool ok = !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '-' || c == '_';
        });
        if (!ok) {
            fail("bad identity name '" + std::string(name) + "'", s.begin);
        }
        return std::string(name);
    }

    static bool is_param_name(std::string_view n)
    {
        if (n.empty() || n == "q" || n == "inf" || n.front() < 'a' || n.front() > 'z' || dsl::is_builtin(n)) {
            return false;
        }
        return std::all_of(n.begin(), n.end(), [](char c) {
            return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
        });
    }

    std::vector<std::string> param_list(Slice s) const
    {
        std::vector<std::string> out;
        std::size_t i = s.begin;
        while (i < s.end) {
            while (i < s.end && (is_space(text_[i]) || text_[i] == ',')) {
                ++i;
            }
            const std::size_t b = i;
            while (i < s.end && !is_space(text_[i]) && text_[i] != ',') {
                ++i;
            }
            if (b == i) {
                break;
            }
            const std::string name(view({b, i}));
            if (!is_param_name(name)) {
                fail("bad parameter name '" + name + "'", b);
            }
            if (std::find(out.begin(), out.end(), name) != out.end()) {
                fail("parameter '" + name + "' declared twice", b);
            }
            out.push_back(name);
        }
        return out;
    }

    dsl::Expr expr(Slice s) const
    {
        s = trim(s);
        if (s.begin == s.end) {
            fail("missing expression", s.begin);
        }
        try {
            return dsl::parse(view(s), s.begin);
        } catch (const DslError& e) {
            fail(e.message(), e.position());
        }
    }

    // Splits s on ',' at parenthesis depth zero.
    std::vector<Slice> split_commas(Slice s) const
    {
        std::vector<Slice> out;
        int depth = 0;
        std::size_t start = s.begin;
        for (std::size_t i = s.begin; i < s.end; ++i) {
            if (text_[i] == '(') {
                ++depth;
            } else if (text_[i] == ')') {
                --depth;
            } else if (text_[i] == ',' && depth == 0) {
                out.push_back({start, i});
                start = i + 1;
            }
        }
        out.push_back({start, s.end});
        return out;
    }

    std::vector<Constraint> constraint_list(Slice s) const
    {
        std::vector<Constraint> out;
        if (trim(s).begin == trim(s).end) {
            return out;
        }
        for (Slice item : split_commas(s)) {
            item = trim(item);
            const std::string_view t = view(item);
            const auto open = t.find('(');
            if (open == std::string_view::npos || t.back() != ')') {
                fail("expected constraint of the form kind(args)", item.begin);
            }
            const std::string kind(t.substr(0, open));
            Constraint c;
            std::size_t arity = 1;
            if (kind == "nonzero") {
                c.kind = ConstraintKind::nonzero;
            } else if (kind == "notone") {
                c.kind = ConstraintKind::notone;
            } else if (kind == "invertible") {
                c.kind = ConstraintKind::invertible;
            } else if (kind == "distinct") {
                c.kind = ConstraintKind::distinct;
                arity = 2;
            } else {
                fail("unknown constraint '" + kind + "'", item.begin);
            }
            const Slice inner{item.begin + open + 1, item.end - 1};
            const auto parts = split_commas(inner);
            if (parts.size() != arity) {
                fail(kind + " takes " + std::to_string(arity) + " argument(s)", item.begin);
            }
            for (const Slice& p : parts) {
                c.args.push_back(expr(p));
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    DerivedParam derive(Slice s) const
    {
        const std::string_view t = view(s);
        const auto assign = t.find(":=");
        if (assign == std::string_view::npos) {
            fail("expected 'derive name := expr'", s.begin);
        }
        const Slice name_slice = trim({s.begin, s.begin + assign});
        const std::string name(view(name_slice));
        if (!is_param_name(name)) {
            fail("bad derived parameter name '" + name + "'", name_slice.begin);
        }
        return {name, expr({s.begin + assign + 2, s.end})};
    }

    std::string quoted(Slice s) const
    {
        const std::string_view t = view(s);
        if (t.size() < 2 || t.front() != '"' || t.back() != '"') {
            fail("expected a quoted string", s.begin);
        }
        return std::string(t.substr(1, t.size() - 2));
    }

    IdentityDef finish(IdentityDef def, std::size_t offset) const
    {
        if (!def.lhs || !def.rhs) {
            fail("identity '" + def.name + "' needs both lhs and rhs", offset);
        }
        std::set<std::string> known(def.params.begin(), def.params.end());
        const auto check = [&](const dsl::Expr& e) {
            for (const auto& p : dsl::free_parameters(e)) {
                if (!known.count(p)) {
                    fail("identity '" + def.name + "' uses undeclared parameter '" + p + "'", e->pos);
                }
            }
        };
        for (const auto& d : def.derived) {
            if (known.count(d.name)) {
                fail("identity '" + def.name + "' derives '" + d.name + "' twice or over a parameter", d.expr->pos);
            }
            check(d.expr);
            known.insert(d.name);
        }
        for (const auto& c : def.constraints) {
            for (const auto& a : c.args) {
                check(a);
            }
        }
        check(def.lhs);
        check(def.rhs);
        return def;
    }
};

} // namespace

std::vector<IdentityDef> parse_identities(std::string_view text, std::string_view origin)
{
    return FileParser(text, origin).run();
}

std::string render_identity(const IdentityDef& def)
{
    std::string out = "identity " + def.name + " ;\n  params";
    for (const auto& p : def.params) {
        out += " " + p;
    }
    out += " ;\n";
    if (!def.constraints.empty()) {
        out += "  require ";
        for (std::size_t i = 0; i < def.constraints.size(); ++i) {
            const auto& c = def.constraints[i];
            out += (i ? ", " : "") + std::string(constraint_name(c.kind)) + "(";
            for (std::size_t j = 0; j < c.args.size(); ++j) {
                out += (j ? ", " : "") + dsl::render(c.args[j]);
            }
            out += ")";
        }
        out += " ;\n";
    }
    for (const auto& d : def.derived) {
        out += "  derive " + d.name + " := " + dsl::render(d.expr) + " ;\n";
    }
    out += "  lhs " + dsl::render(def.lhs) + " ;\n";
    out += "  rhs " + dsl::render(def.rhs) + " ;\n";
    out += "  source \"" + def.source + "\"\n";
    return out;
}

} // namespace qtheta
