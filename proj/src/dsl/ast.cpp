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
#include <qtheta/dsl/ast.hpp>

#include <qtheta/error.hpp>

namespace qtheta::dsl {

namespace {

Node node(NodeKind kind, Sort sort, std::size_t pos)
{
    Node n;
    n.kind = kind;
    n.sort = sort;
    n.pos = pos;
    return n;
}

Expr finish(Node n)
{
    return std::make_shared<const Node>(std::move(n));
}

} // namespace

Expr make_literal(std::int64_t value, std::size_t pos)
{
    Node n = node(NodeKind::literal, Sort::integer, pos);
    n.value = value;
    return finish(std::move(n));
}

Expr make_variable(std::string name, std::size_t pos)
{
    Node n = node(NodeKind::variable, Sort::integer, pos);
    n.name = std::move(name);
    return finish(std::move(n));
}

Expr make_param(std::string name, std::size_t pos)
{
    Node n = node(NodeKind::param, Sort::series, pos);
    n.name = std::move(name);
    return finish(std::move(n));
}

Expr make_q(std::size_t pos)
{
    Node n = node(NodeKind::q, Sort::series, pos);
    n.name = "q";
    return finish(std::move(n));
}

Expr make_negate(Expr operand, std::size_t pos)
{
    Node n = node(NodeKind::negate, operand->sort, pos);
    n.children = {std::move(operand)};
    return finish(std::move(n));
}

Expr make_binary(NodeKind kind, Expr lhs, Expr rhs, std::size_t pos)
{
    Sort s = Sort::series;
    switch (kind) {
    case NodeKind::add:
    case NodeKind::subtract:
    case NodeKind::multiply:
        s = (lhs->sort == Sort::integer && rhs->sort == Sort::integer) ? Sort::integer : Sort::series;
        break;
    case NodeKind::divide:
        s = Sort::series;
        break;
    case NodeKind::power:
        if (rhs->sort != Sort::integer) {
            throw SortError("exponent must be an integer expression", rhs->pos);
        }
        s = lhs->sort;
        break;
    default:
        throw Error("make_binary: not a binary operator");
    }
    Node n = node(kind, s, pos);
    n.children = {std::move(lhs), std::move(rhs)};
    return finish(std::move(n));
}

bool same_structure(const Expr& x, const Expr& y)
{
    if (!x || !y) {
        return !x && !y;
    }
    if (x->kind != y->kind || x->sort != y->sort || x->value != y->value || x->name != y->name
        || x->upper_count != y->upper_count || x->children.size() != y->children.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x->children.size(); ++i) {
        if (!same_structure(x->children[i], y->children[i])) {
            return false;
        }
    }
    return true;
}

namespace {

int level(const Node& n)
{
    switch (n.kind) {
    case NodeKind::add:
    case NodeKind::subtract:
        return 1;
    case NodeKind::multiply:
    case NodeKind::divide:
        return 2;
    case NodeKind::negate:
        return 3;
    case NodeKind::power:
        return 4;
    default:
        return 5;
    }
}

std::string render_at(const Expr& e, int min_level)
{
    std::string s = render(e);
    return level(*e) < min_level ? "(" + s + ")" : s;
}

std::string join(const std::vector<Expr>& xs, std::size_t from, std::size_t to)
{
    std::string out;
    for (std::size_t i = from; i < to; ++i) {
        out += (i == from ? "" : ", ") + render(xs[i]);
    }
    return out;
}

} // namespace

std::string render(const Expr& e)
{
    const Node& n = *e;
    const auto& c = n.children;
    switch (n.kind) {
    case NodeKind::literal:
        return std::to_string(n.value);
    case NodeKind::variable:
    case NodeKind::param:
    case NodeKind::q:
        return n.name;
    case NodeKind::negate:
        return "-" + render_at(c[0], 3);
    case NodeKind::add:
        return render_at(c[0], 1) + " + " + render_at(c[1], 2);
    case NodeKind::subtract:
        return render_at(c[0], 1) + " - " + render_at(c[1], 2);
    case NodeKind::multiply:
        return render_at(c[0], 2) + "*" + render_at(c[1], 3);
    case NodeKind::divide:
        return render_at(c[0], 2) + "/" + render_at(c[1], 3);
    case NodeKind::power:
        return render_at(c[0], 5) + "^" + render_at(c[1], 3);
    case NodeKind::call:
        if (n.name == "phi") {
            return "phi(" + join(c, 0, n.upper_count) + "; " + join(c, n.upper_count, c.size() - 1) + "; "
                   + render(c.back()) + ")";
        }
        return n.name + "(" + join(c, 0, c.size()) + ")";
    case NodeKind::sum: {
        std::string out = "sum(" + n.name + ", " + render(c[0]) + ", " + (c[1] ? render(c[1]) : "inf") + ", "
                          + render(c[2]);
        if (c[3]) {
            out += ", " + render(c[3]);
        }
        return out + ")";
    }
    }
    return {};
}

namespace {

void collect(const Expr& e, std::set<std::string>& out)
{
    if (!e) {
        return;
    }
    if (e->kind == NodeKind::param) {
        out.insert(e->name);
    }
    for (const auto& c : e->children) {
        collect(c, out);
    }
}

} // namespace

std::set<std::string> free_parameters(const Expr& e)
{
    std::set<std::string> out;
    collect(e, out);
    return out;
}

} // namespace qtheta::dsl
