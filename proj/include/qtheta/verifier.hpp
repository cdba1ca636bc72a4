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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qtheta/identity.hpp>
#include <qtheta/rational.hpp>
#include <qtheta/series.hpp>
#include <qtheta/sums.hpp>

namespace qtheta {

struct SampledBinding {
    /// Base parameters in declaration order.
    std::vector<std::pair<std::string, Rational>> values;
    /// Base and derived parameters as series.
    ParamBinding binding;
};

/// Precision at which constraints are checked.
inline constexpr Exponent constraint_check_precision = 24;
inline constexpr int max_sampling_attempts = 1000;

/// Deterministic in (seed, trial, identity name). Each base parameter is
/// n/d with 0 < |n| <= 9, 1 <= d <= 9, never 0 or +-1, no two parameters
/// equal or opposite; the identity's constraints must hold. Series are built
/// to precision prec. Throws SamplingError after max_sampling_attempts.
SampledBinding sample_params(const IdentityDef& def, std::uint64_t seed, int trial, Exponent prec);

/// Most negative power of q injected by an expression: constant negative
/// powers of q, divisions by q^k, and the builtins P_m (m), S (3), lam (m-1),
/// ThetaK (k+1) and T (1).
Exponent max_negative_shift(const dsl::Expr& e);
Exponent max_negative_shift(const IdentityDef& def);

/// Extra orders G used for evaluation: 2 * max_negative_shift + 8.
Exponent guard_orders(const IdentityDef& def);

struct TrialResult {
    std::vector<std::pair<std::string, Rational>> binding;
    Exponent effective_precision = 0;
    bool zero = false;
    std::optional<std::pair<Exponent, Rational>> first_bad;
    std::optional<std::string> error;
};

struct VerificationReport {
    std::string identity;
    std::string source;
    Exponent order = 0;
    std::vector<TrialResult> trials;
    bool pass = false;
    std::int64_t millis = 0;
};

struct VerifyOptions {
    Exponent order = 30;
    int trials = 3;
    std::uint64_t seed = 0;
    /// When false millis is reported as 0, making output byte-reproducible.
    bool timing = true;
};

/// Evaluates lhs - rhs at order + guard_orders(def) for each trial. A trial
/// passes when the residual is zero to its precision and that precision is
/// at least order. Evaluation errors fail the trial, they are not thrown.
VerificationReport verify_identity(const IdentityDef& def, const VerifyOptions& options);

struct VerifySummary {
    std::vector<VerificationReport> reports;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

VerifySummary verify_all(const std::vector<IdentityDef>& defs, const VerifyOptions& options,
                         std::string_view pattern = "*");

} // namespace qtheta
