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
#include <string_view>
#include <vector>

#include <qtheta/identity.hpp>

namespace qtheta {

/// Record text of the built-in corpus.
std::string_view builtin_corpus_text();

std::vector<IdentityDef> builtin_identities();

/// Built-ins followed by the identities of each file, in order. Throws
/// RegistryError on unreadable files, parse errors and duplicate names.
std::vector<IdentityDef> load_registry(const std::vector<std::string>& files = {});

/// Appends extra to defs, rejecting a name already present.
void append_identities(std::vector<IdentityDef>& defs, std::vector<IdentityDef> extra);

/// Shell-style glob (* ? [...]) match of an identity name.
bool name_matches(std::string_view pattern, std::string_view name);

std::vector<IdentityDef> filter_identities(const std::vector<IdentityDef>& defs, std::string_view pattern);

} // namespace qtheta
