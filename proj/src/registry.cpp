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
#include <qtheta/registry.hpp>

#include <fnmatch.h>

#include <fstream>
#include <set>
#include <sstream>

#include <qtheta/error.hpp>

namespace qtheta {

std::vector<IdentityDef> builtin_identities()
{
    return parse_identities(builtin_corpus_text(), "<builtin>");
}

void append_identities(std::vector<IdentityDef>& defs, std::vector<IdentityDef> extra)
{
    std::set<std::string> names;
    for (const auto& d : defs) {
        names.insert(d.name);
    }
    for (auto& d : extra) {
        if (!names.insert(d.name).second) {
            throw RegistryError("duplicate identity name '" + d.name + "'");
        }
        defs.push_back(std::move(d));
    }
}

std::vector<IdentityDef> load_registry(const std::vector<std::string>& files)
{
    std::vector<IdentityDef> defs;
    append_identities(defs, builtin_identities());
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw RegistryError("cannot read identity file '" + path + "'");
        }
        std::ostringstream text;
        text << in.rdbuf();
        append_identities(defs, parse_identities(text.str(), path));
    }
    return defs;
}

bool name_matches(std::string_view pattern, std::string_view name)
{
    return fnmatch(std::string(pattern).c_str(), std::string(name).c_str(), 0) == 0;
}

std::vector<IdentityDef> filter_identities(const std::vector<IdentityDef>& defs, std::string_view pattern)
{
    std::vector<IdentityDef> out;
    for (const auto& d : defs) {
        if (name_matches(pattern, d.name)) {
            out.push_back(d);
        }
    }
    return out;
}

} // namespace qtheta
