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
#include "cli.hpp"

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qtheta/dsl/evaluate.hpp>
#include <qtheta/dsl/parser.hpp>
#include <qtheta/eliminator.hpp>
#include <qtheta/error.hpp>
#include <qtheta/registry.hpp>
#include <qtheta/report.hpp>
#include <qtheta/verifier.hpp>

namespace qtheta::cli {

namespace {

struct CliConfig {
    Exponent order = 30;
    int trials = 3;
    std::uint64_t seed = 0;
    std::string params;
    std::string filter = "*";
    std::vector<std::string> files;
    bool json = false;
    bool no_timing = false;
    std::string output;
    std::string expression;
    int m = 2;
    std::string pivot = "min-order";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::pair<std::string, Rational>> parse_params(const std::string& text)
{
    std::vector<std::pair<std::string, Rational>> out;
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const std::string item = text.substr(start, comma - start);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("bad parameter '" + item + "', expected name=rational");
        }
        try {
            out.emplace_back(item.substr(0, eq), parse_rational(item.substr(eq + 1)));
        } catch (const std::invalid_argument&) {
            throw UsageError("bad rational in '" + item + "'");
        }
        start = comma + 1;
    }
    return out;
}

int cmd_list(const CliConfig& cfg, std::ostream& out)
{
    for (const auto& d : load_registry(cfg.files)) {
        out << d.name << "\t" << d.source << "\n";
    }
    return 0;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto defs = load_registry(cfg.files);
    VerifyOptions options;
    options.order = cfg.order;
    options.trials = cfg.trials;
    options.seed = cfg.seed;
    options.timing = !cfg.no_timing;

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output, std::ios::binary);
        if (!file) {
            throw UsageError("cannot write '" + cfg.output + "'");
        }
    }
    std::ostream& sink = cfg.output.empty() ? out : file;

    VerifySummary summary;
    for (const auto& def : defs) {
        if (!name_matches(cfg.filter, def.name)) {
            continue;
        }
        summary.reports.push_back(verify_identity(def, options));
        const auto& r = summary.reports.back();
        ++(r.pass ? summary.passed : summary.failed);
        if (!cfg.json) {
            sink << report_to_text(r) << std::flush;
        }
    }
    if (cfg.json) {
        sink << reports_to_json(summary.reports);
        err << summary_line(summary) << "\n";
    } else {
        sink << summary_line(summary) << "\n";
    }
    return summary.failed == 0 ? 0 : 1;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    const dsl::Expr e = dsl::parse(cfg.expression);
    const Exponent work = cfg.order + 2 * max_negative_shift(e) + 8;
    ParamBinding binding;
    for (const auto& [name, value] : parse_params(cfg.params)) {
        binding.insert_or_assign(name, LaurentSeries::from_rational(value, work));
    }
    const LaurentSeries r = dsl::evaluate(e, binding, work);
    if (r.precision() < cfg.order) {
        err << "warning: result only known to O(q^" << r.precision() << ")\n";
        out << r << "\n";
    } else {
        out << truncate(r, cfg.order) << "\n";
    }
    return 0;
}

std::string coefficient_text(const LaurentSeries& c, Exponent order)
{
    if (const auto v = c.constant_value()) {
        return to_string(*v);
    }
    return to_string(c.precision() > order ? truncate(c, order) : c);
}

int cmd_express_pm(const CliConfig& cfg, std::ostream& out)
{
    std::map<std::string, Rational> values;
    for (const auto& [name, value] : parse_params(cfg.params)) {
        values.insert_or_assign(name, value);
    }
    if (!values.count("a") || !values.count("b")) {
        throw UsageError("express-pm needs --params a=...,b=...");
    }
    if (cfg.m < 2) {
        throw UsageError("--m must be at least 2");
    }
    const PivotRule rule = cfg.pivot == "first-nonzero" ? PivotRule::first_nonzero : PivotRule::min_order;
    const PmExpression ex = express_pm(cfg.m, values["a"], values["b"], cfg.order, rule);
    out << "P_" << cfg.m << "(a,b) at a=" << to_string(values["a"]) << ", b=" << to_string(values["b"]) << "\n";
    const auto print = [&](const std::vector<LaurentSeries>& coeffs, const char* p) {
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            out << "  theta(q," << p << (k == 0 ? "" : "/q^" + std::to_string(k)) << "): "
                << coefficient_text(coeffs[k], cfg.order) << "\n";
        }
    };
    print(ex.combination.a_coeffs, "a");
    print(ex.combination.b_coeffs, "b");
    out << "residual zero to O(q^" << ex.residual_precision << ")\n";
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CliConfig cfg;
    CLI::App app{"Exact q-series identity verifier", "qtheta"};
    app.require_subcommand(1);

    // verify needs N >= 5; eval and express-pm accept any positive order.
    const auto add_order = [&cfg](CLI::App* sub, Exponent least) {
        sub->add_option("--order,-N", cfg.order, "target order N: results are exact below q^N")
            ->check(CLI::Range(least, Exponent{100000}));
    };
    const auto add_files = [&cfg](CLI::App* sub) {
        sub->add_option("--file,-f", cfg.files, "extra identity file (repeatable)")->check(CLI::ExistingFile);
    };

    CLI::App* list = app.add_subcommand("list", "print identity names and source tags");
    add_files(list);

    CLI::App* verify = app.add_subcommand("verify", "verify identities at random rational points");
    verify->add_option("filter", cfg.filter, "glob on identity names");
    add_order(verify, 5);
    verify->add_option("--trials,-t", cfg.trials, "trials per identity")->check(CLI::Range(1, 1000));
    verify->add_option("--seed,-s", cfg.seed, "sampling seed");
    add_files(verify);
    verify->add_flag("--json", cfg.json, "write the JSON report array");
    verify->add_option("--output,-o", cfg.output, "write reports to this path");
    verify->add_flag("--no-timing", cfg.no_timing, "report millis as 0");

    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expression", cfg.expression, "expression")->required();
    add_order(eval, 1);
    eval->add_option("--params,-p", cfg.params, "bindings, e.g. a=2,b=1/3");

    CLI::App* express = app.add_subcommand("express-pm", "write P_m(a,b) as a theta combination");
    express->add_option("--m", cfg.m, "m >= 2")->required();
    express->add_option("--params,-p", cfg.params, "a=...,b=...")->required();
    add_order(express, 1);
    express->add_option("--pivot", cfg.pivot, "pivot rule")
        ->check(CLI::IsMember({"min-order", "first-nonzero"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*list) {
            return cmd_list(cfg, out);
        }
        if (*verify) {
            return cmd_verify(cfg, out, err);
        }
        if (*eval) {
            return cmd_eval(cfg, out, err);
        }
        return cmd_express_pm(cfg, out);
    } catch (const std::exception& e) {
        err << "qtheta: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qtheta::cli
