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

#include <string>
#include <vector>

namespace testing_support {

// A builtin called directly next to a transcription of its defining sum or
// formula in the expression language.
struct Agreement {
    std::string builtin;
    std::string native;
    std::string transcription;
};

const std::vector<Agreement>& builtin_agreements();

} // namespace testing_support
