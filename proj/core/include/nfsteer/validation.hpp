// SPDX-License-Identifier: Apache-2.0
//
// nfsteer: near-field beam steering for planar antenna arrays
// Copyright (C) 2026 The nfsteer authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nfsteer
{

struct CheckResult
{
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ValidationOptions
{
    // Subset of available_checks(); unset runs everything, an empty list is an error.
    std::optional<std::vector<std::string>> checks;
    // Added to every solver distance before comparison. Sensitivity hook.
    double inject_distance_error = 0.0;
    int oracle_cases = 200;
    std::uint64_t seed = 20240611;
};

std::vector<std::string> available_checks();

// Runs the invariant suites. Throws InvalidArgument for an empty or unknown
// check list.
std::vector<CheckResult> run_validation(const ValidationOptions &options = {});

} // namespace nfsteer
