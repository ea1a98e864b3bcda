// Copyright 2026 The semiring-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Golden suite: fixed reference values from the literature plus the
// acceptance gate, replayed against the library.

#include "semiring_lab/sweep.hpp"

#include <string>
#include <vector>

namespace slab {

struct GoldenRow {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct GoldenOptions {
    bool parallel = false;
    unsigned threads = 0;
};

/// Row ids in execution order. Criterion rows are named "criterion.N".
std::vector<std::string> golden_row_ids();

/// Runs rows whose id starts with any entry of `only` (all rows when empty).
/// Throws BadParams when a filter matches nothing.
std::vector<GoldenRow> run_golden_suite(const std::vector<std::string>& only = {},
                                        const GoldenOptions& options = {});

} // namespace slab
