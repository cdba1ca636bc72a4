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
#include <qtheta/dsl/evaluate.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qtheta/error.hpp>
#include <qtheta/qkernels.hpp>

namespace qtheta::dsl {

std::int64_t sum_iteration_cap(Exponent prec)
{
    return default_term_cap(prec);
}

namespace {

class Evaluator {
public:
    Evaluator(const ParamBinding& binding, Exponent prec) : binding_(binding), prec_(prec) {}

    LaurentSeries eval(const Node& n)
    {
        try {
            return eval_node(n);
        } catch (const DslError&) {
            throw;
        } catch (const Error& e) {
            throw EvalError(e.what(), n.pos);
        }
    }

    std::int64_t eval_int(const Node& n)
    {
        switch (n.kind) {
        case NodeKind::literal:
            return n.value;
        case NodeKind::variable:
            for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
                if (it->first == n.name) {
                    return it->second;
                }
            }
            throw EvalError("unbound index '" + n.name + "'", n.pos);
        case NodeKind::negate:
            return checked(n, 0, eval_int(*n.children[0]), '-');
        case NodeKind::add:
            return checked(n, eval_int(*n.children[0]), eval_int(*n.children[1]), '+');
        case NodeKind::subtract:
            return checked(n, eval_int(*n.children[0]), eval_int(*n.children[1]), '-');
        case NodeKind::multiply:
            return checked(n, eval_int(*n.children[0]), eval_int(*n.children[1]), '*');
        case NodeKind::power: {
            const std::int64_t base = eval_int(*n.children[0]);
            std::int64_t e = eval_int(*n.children[1]);
            if (e < 0) {
                throw EvalError("negative exponent in an integer power", n.children[1]->pos);
            }
            std::int64_t r = 1;
            while (e-- > 0) {
                r = checked(n, r, base, '*');
            }
            return r;
        }
        case NodeKind::call:
            if (n.name == "binom2") {
                const std::int64_t k = eval_int(*n.children[0]);
                return checked(n, k, checked(n, k, 1, '-'), '*') / 2;
            }
            break;
        default:
            break;
        }
        throw EvalError("expected an integer expression", n.pos);
    }

private:
    const ParamBinding& binding_;
    Exponent prec_;
    std::vector<std::pair<std::string, std::int64_t>> env_;

    static std::int64_t checked(const Node& n, std::int64_t x, std::int64_t y, char op)
    {
        std::int64_t r = 0;
        bool overflow = false;
        switch (op) {
        case '+':
            overflow = __builtin_add_overflow(x, y, &r);
            break;
        case '-':
            overflow = __builtin_sub_overflow(x, y, &r);
            break;
        default:
            overflow = __builtin_mul_overflow(x, y, &r);
            break;
        }
        if (overflow) {
            throw EvalError("integer overflow", n.pos);
        }
        return r;
    }

    LaurentSeries q_power(std::int64_t e) const
    {
        return e < prec_ ? LaurentSeries::monomial(Rational(1), e, prec_) : LaurentSeries::zero(prec_);
    }

    LaurentSeries constant(std::int64_t c, Exponent prec) const
    {
        return LaurentSeries::from_rational(Rational(static_cast<long>(c)), prec);
    }

    /// e when n is literally q or q^e.
    std::optional<std::int64_t> q_exponent(const Node& n)
    {
        if (n.kind == NodeKind::q) {
            return 1;
        }
        if (n.kind == NodeKind::power && n.children[0]->kind == NodeKind::q) {
            return eval_int(*n.children[1]);
        }
        return std::nullopt;
    }

    std::vector<LaurentSeries> eval_all(const std::vector<Expr>& xs, std::size_t from, std::size_t to)
    {
        std::vector<LaurentSeries> out;
        for (std::size_t i = from; i < to; ++i) {
            out.push_back(eval(*xs[i]));
        }
        return out;
    }

    LaurentSeries eval_node(const Node& n)
    {
        if (n.sort == Sort::integer) {
            return constant(eval_int(n), prec_);
        }
        const auto& c = n.children;
        switch (n.kind) {
        case NodeKind::q:
            return q_power(1);
        case NodeKind::param: {
            const auto it = binding_.find(n.name);
            if (it == binding_.end()) {
                throw EvalError("unbound parameter '" + n.name + "'", n.pos);
            }
            return it->second;
        }
        case NodeKind::negate:
            return negate(eval(*c[0]));
        case NodeKind::add:
        case NodeKind::subtract: {
            LaurentSeries x = c[0]->sort == Sort::integer ? LaurentSeries() : eval(*c[0]);
            LaurentSeries y = c[1]->sort == Sort::integer ? LaurentSeries() : eval(*c[1]);
            if (c[0]->sort == Sort::integer) {
                x = constant(eval_int(*c[0]), y.precision());
            }
            if (c[1]->sort == Sort::integer) {
                y = constant(eval_int(*c[1]), x.precision());
            }
            return n.kind == NodeKind::add ? add(x, y) : subtract(x, y);
        }
        case NodeKind::multiply:
            return product(*c[0], *c[1]);
        case NodeKind::divide:
            return quotient(n, *c[0], *c[1]);
        case NodeKind::power: {
            const std::int64_t e = eval_int(*c[1]);
            if (c[0]->kind == NodeKind::q) {
                return q_power(e);
            }
            return pow_int(eval(*c[0]), e);
        }
        case NodeKind::call:
            return call(n);
        case NodeKind::sum:
            return sum(n);
        default:
            break;
        }
        throw EvalError("cannot evaluate node", n.pos);
    }

    LaurentSeries product(const Node& x, const Node& y)
    {
        if (const auto e = q_exponent(x)) {
            if (const auto f = q_exponent(y)) {
                return q_power(*e + *f);
            }
            return shift(eval(y), *e);
        }
        if (const auto e = q_exponent(y)) {
            return shift(eval(x), *e);
        }
        if (x.sort == Sort::integer) {
            return scale(eval(y), Rational(static_cast<long>(eval_int(x))));
        }
        if (y.sort == Sort::integer) {
            return scale(eval(x), Rational(static_cast<long>(eval_int(y))));
        }
        return multiply(eval(x), eval(y));
    }

    LaurentSeries quotient(const Node& n, const Node& x, const Node& y)
    {
        if (const auto e = q_exponent(y)) {
            return shift(eval(x), -*e);
        }
        if (y.sort == Sort::integer) {
            const std::int64_t d = eval_int(y);
            if (d == 0) {
                throw EvalError("division by zero", n.pos);
            }
            return scale(eval(x), Rational(1, 1) / Rational(static_cast<long>(d)));
        }
        const LaurentSeries den = eval(y);
        if (den.is_zero()) {
            throw EvalError("division by a series that is zero to precision " + std::to_string(den.precision()),
                            n.pos);
        }
        return divide(eval(x), den);
    }

    int small_int(const Node& n)
    {
        const std::int64_t v = eval_int(n);
        if (v < -100000 || v > 100000) {
            throw EvalError("integer argument out of range", n.pos);
        }
        return static_cast<int>(v);
    }

    LaurentSeries call(const Node& n)
    {
        const auto& c = n.children;
        const std::string& f = n.name;
        if (f == "theta") {
            return theta_partial(eval(*c[0]), prec_);
        }
        if (f == "jtheta") {
            return theta_full(eval(*c[0]), prec_);
        }
        if (f == "poch") {
            const std::int64_t len = eval_int(*c.back());
            if (len < 0) {
                throw EvalError("negative Pochhammer length " + std::to_string(len), c.back()->pos);
            }
            const auto xs = eval_all(c, 0, c.size() - 1);
            return qpoch_multi(xs, len, prec_);
        }
        if (f == "pochinf") {
            const auto xs = eval_all(c, 0, c.size());
            return qpoch_multi(xs, std::nullopt, prec_);
        }
        if (f == "phi") {
            const auto upper = eval_all(c, 0, n.upper_count);
            const auto lower = eval_all(c, n.upper_count, c.size() - 1);
            return bhs(upper, lower, eval(*c.back()), prec_);
        }
        if (f == "Pm") {
            return p_series(small_int(*c[0]), eval(*c[1]), eval(*c[2]), prec_);
        }
        if (f == "U") {
            return u_series(small_int(*c[0]), eval(*c[1]), prec_);
        }
        if (f == "V") {
            return v_series(small_int(*c[0]), small_int(*c[1]), eval(*c[2]), eval(*c[3]), prec_);
        }
        if (f == "Q") {
            return q_normalizer(small_int(*c[0]), eval(*c[1]), prec_);
        }
        if (f == "lam") {
            return lambda_coefficient(small_int(*c[0]), small_int(*c[1]), eval(*c[2]), prec_);
        }
        if (f == "S") {
            return s_series(eval(*c[0]), eval(*c[1]), prec_);
        }
        if (f == "Omega") {
            return omega_sum(eval(*c[0]), eval(*c[1]), prec_);
        }
        if (f == "ThetaK") {
            return theta_k_combination(small_int(*c[0]), eval(*c[1]), eval(*c[2]), prec_);
        }
        if (f == "T") {
            return t_combination(eval(*c[0]), prec_);
        }
        throw EvalError("unknown function '" + f + "'", n.pos);
    }

    LaurentSeries term(const Node& n, const Node* bound, std::int64_t index, std::int64_t declared)
    {
        LaurentSeries t = eval(*n.children[2]);
        if (bound != nullptr && !t.is_zero() && t.min_exp() < declared) {
            throw EvalError("term " + n.name + " = " + std::to_string(index) + " has order "
                                + std::to_string(t.min_exp()) + ", below its orderbound "
                                + std::to_string(declared),
                            bound->pos);
        }
        return t;
    }

    LaurentSeries sum(const Node& n)
    {
        const auto& c = n.children;
        const std::int64_t lo = eval_int(*c[0]);
        const Node* bound = c[3].get();
        LaurentSeries acc = LaurentSeries::zero(prec_);

        const auto bound_at = [&](std::int64_t k) {
            env_.back().second = k;
            return eval_int(*bound);
        };

        env_.emplace_back(n.name, lo);
        struct Pop {
            std::vector<std::pair<std::string, std::int64_t>>& env;
            ~Pop() { env.pop_back(); }
        } pop{env_};

        if (c[1]) {
            const std::int64_t hi = eval_int(*c[1]);
            for (std::int64_t k = lo; k <= hi; ++k) {
                const std::int64_t declared = bound ? bound_at(k) : 0;
                if (bound && declared >= prec_) {
                    continue;
                }
                env_.back().second = k;
                acc = add(acc, term(n, bound, k, declared));
            }
            return acc;
        }

        const std::int64_t cap = sum_iteration_cap(prec_);
        for (std::int64_t k = lo;; ++k) {
            if (k - lo > cap) {
                throw EvalError("orderbound of sum over " + n.name + " does not reach precision "
                                    + std::to_string(prec_) + " within " + std::to_string(cap) + " terms",
                                n.pos);
            }
            const std::int64_t declared = bound_at(k);
            if (declared >= prec_ && bound_at(k + 1) >= declared) {
                break;
            }
            env_.back().second = k;
            acc = add(acc, term(n, bound, k, declared));
        }
        return acc;
    }
};

} // namespace

LaurentSeries evaluate(const Expr& e, const ParamBinding& binding, Exponent prec)
{
    LaurentSeries r = Evaluator(binding, prec).eval(*e);
    return r.precision() > prec ? truncate(r, prec) : r;
}

std::int64_t evaluate_integer(const Expr& e)
{
    const ParamBinding none;
    return Evaluator(none, 0).eval_int(*e);
}

} // namespace qtheta::dsl
