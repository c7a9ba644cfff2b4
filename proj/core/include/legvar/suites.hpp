/*
 * Copyright 2026 The legvar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "legvar/geometry.hpp"

namespace legvar {

struct SuiteResult {
    std::string suite;
    int m = 0;
    uint64_t seed = 0;
    std::vector<Certificate> certificates;

    bool all_passed() const;
    bool any_failed() const;
    bool any_inconclusive() const;
    std::string overall() const; // PASS | FAIL | INCONCLUSIVE
};

const std::vector<std::string>& suite_names();

/// Runs one verification suite at a given size. Deterministic in (name, m, seed).
SuiteResult run_suite(const std::string& name, int m, uint64_t seed);

/// Closed-form generator counts for the main equation families at size m.
Json generator_count_table(int m);

/// Full report for a suite run (deterministic, byte-stable).
Json suite_report(const SuiteResult& result);

} // namespace legvar
