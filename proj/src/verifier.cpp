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
#include <qtheta/verifier.hpp>

#include <algorithm>
#include <chrono>
#include <random>

#include <qtheta/dsl/evaluate.hpp>
#include <qtheta/error.hpp>
#include <qtheta/registry.hpp>

namespace qtheta {

namespace {

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

Rational draw(std::mt19937_64& gen)
{
    for (;;) {
        const auto n = static_cast<long>(gen() % 19) - 9;
        const auto d = static_cast<long>(gen() % 9) + 1;
        Rational r(n, d);
        r.canonicalize();
        if (sgn(r) != 0 && abs(r) != 1) {
            return r;
        }
    }
}

bool constraint_holds(const Constraint& c, const ParamBinding& binding)
{
    const Exponent p = constraint_check_precision;
    try {
        const LaurentSeries x = dsl::evaluate(c.args[0], binding, p);
        switch (c.kind) {
        case ConstraintKind::nonzero:
        case ConstraintKind::invertible:
            return !x.is_zero();
        case ConstraintKind::notone:
            return !subtract(x, LaurentSeries::one(p)).is_zero();
        case ConstraintKind::distinct:
            return !subtract(x, dsl::evaluate(c.args[1], binding, p)).is_zero();
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

} // namespace

SampledBinding sample_params(const IdentityDef& def, std::uint64_t seed, int trial, Exponent prec)
{
    const std::uint64_t h = fnv1a(def.name);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(h),
                      static_cast<std::uint32_t>(h >> 32)};
    std::mt19937_64 gen(seq);

    for (int attempt = 0; attempt < max_sampling_attempts; ++attempt) {
        SampledBinding out;
        for (const auto& p : def.params) {
            out.values.emplace_back(p, draw(gen));
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < out.values.size(); ++i) {
            for (std::size_t j = i + 1; ok && j < out.values.size(); ++j) {
                ok = out.values[i].second != out.values[j].second && out.values[i].second != -out.values[j].second;
            }
        }
        if (!ok) {
            continue;
        }
        for (const auto& [name, value] : out.values) {
            out.binding.emplace(name, LaurentSeries::from_rational(value, prec));
        }
        try {
            for (const auto& d : def.derived) {
                out.binding.emplace(d.name, dsl::evaluate(d.expr, out.binding, prec));
            }
        } catch (const Error&) {
            continue;
        }
        ok = std::all_of(def.constraints.begin(), def.constraints.end(),
                         [&](const Constraint& c) { return constraint_holds(c, out.binding); });
        if (ok) {
            return out;
        }
    }
    throw SamplingError("no admissible binding for '" + def.name + "' within "
                        + std::to_string(max_sampling_attempts) + " attempts");
}

namespace {

std::optional<std::int64_t> constant_int(const dsl::Expr& e)
{
    try {
        return dsl::evaluate_integer(e);
    } catch (const Error&) {
        return std::nullopt;
    }
}

void scan_shifts(const dsl::Expr& e, Exponent& worst)
{
    using dsl::NodeKind;
    if (!e) {
        return;
    }
    const auto& c = e->children;
    const auto note = [&worst](std::int64_t v) { worst = std::max<Exponent>(worst, v); };
    switch (e->kind) {
    case NodeKind::power:
        if (c[0]->kind == NodeKind::q) {
            if (const auto k = constant_int(c[1]); k && *k < 0) {
                note(-*k);
            }
        }
        break;
    case NodeKind::divide:
        if (c[1]->kind == NodeKind::q) {
            note(1);
        } else if (c[1]->kind == NodeKind::power && c[1]->children[0]->kind == NodeKind::q) {
            if (const auto k = constant_int(c[1]->children[1]); k && *k > 0) {
                note(*k);
            }
        }
        break;
    case NodeKind::call:
        if (e->name == "Pm") {
            note(constant_int(c[0]).value_or(0));
        } else if (e->name == "S") {
            note(3);
        } else if (e->name == "lam") {
            note(constant_int(c[0]).value_or(1) - 1);
        } else if (e->name == "ThetaK") {
            note(constant_int(c[0]).value_or(0) + 1);
        } else if (e->name == "T") {
            note(1);
        }
        break;
    default:
        break;
    }
    for (const auto& child : c) {
        scan_shifts(child, worst);
    }
}

} // namespace

Exponent max_negative_shift(const dsl::Expr& e)
{
    Exponent worst = 0;
    scan_shifts(e, worst);
    return worst;
}

Exponent max_negative_shift(const IdentityDef& def)
{
    Exponent worst = 0;
    scan_shifts(def.lhs, worst);
    scan_shifts(def.rhs, worst);
    for (const auto& d : def.derived) {
        scan_shifts(d.expr, worst);
    }
    return worst;
}

Exponent guard_orders(const IdentityDef& def)
{
    return 2 * max_negative_shift(def) + 8;
}

VerificationReport verify_identity(const IdentityDef& def, const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = def.name;
    report.source = def.source;
    report.order = options.order;
    report.pass = true;

    const Exponent work = options.order + guard_orders(def);
    for (int t = 0; t < options.trials; ++t) {
        TrialResult trial;
        try {
            const SampledBinding sample = sample_params(def, options.seed, t, work);
            trial.binding = sample.values;
            const LaurentSeries lhs = dsl::evaluate(def.lhs, sample.binding, work);
            const LaurentSeries rhs = dsl::evaluate(def.rhs, sample.binding, work);
            const LaurentSeries residual = subtract(lhs, rhs);
            trial.effective_precision = residual.precision();
            trial.zero = residual.is_zero();
            if (!trial.zero) {
                trial.first_bad.emplace(residual.min_exp(), residual.bottom_coefficient());
            }
        } catch (const std::exception& e) {
            trial.error = e.what();
        }
        if (!trial.zero || trial.error || trial.effective_precision < options.order) {
            report.pass = false;
        }
        report.trials.push_back(std::move(trial));
    }
    if (options.timing) {
        report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                            .count();
    }
    return report;
}

VerifySummary verify_all(const std::vector<IdentityDef>& defs, const VerifyOptions& options, std::string_view pattern)
{
    VerifySummary summary;
    for (const auto& def : defs) {
        if (!name_matches(pattern, def.name)) {
            continue;
        }
        summary.reports.push_back(verify_identity(def, options));
        ++(summary.reports.back().pass ? summary.passed : summary.failed);
    }
    return summary;
}

} // namespace qtheta
