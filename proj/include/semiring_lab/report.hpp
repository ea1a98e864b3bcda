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

#include "semiring_lab/json_io.hpp"
#include "semiring_lab/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slab {

inline constexpr const char* kReportSchema = "semiring-lab/report/v1";

struct ClassifyOptions {
    unsigned degree_bound = 3;
    std::size_t lattice_cap = kDefaultLatticeCap;
    bool parallel = false;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    bool timing = false;
    std::uint64_t budget = kDefaultSweepBudget;
};

struct InputDescriptor {
    /// "catalog" or "tables".
    std::string kind = "tables";
    std::string name;
};

/// One verdict. `mode` is "exact", "bounded" or "skipped"; skipped verdicts
/// carry the reason in `detail` and a null value.
struct Verdict {
    std::string name;
    Json value;
    std::string mode = "exact";
    std::optional<unsigned> bound;
    std::string detail;
    Json witness;
};

struct LatticeSummary {
    std::optional<std::size_t> ideal_count;
    std::vector<ElementSet> ideals, primes, minimal_primes, maximal_ideals;
    /// Set when the lattice could not be enumerated.
    std::string error;
};

struct ClassificationReport {
    InputDescriptor input;
    ClassifyOptions options;
    FiniteSemiring semiring;
    StructuralFlags flags;
    LatticeSummary lattice;
    ElementSet nil, zset, units;
    /// subtractive, weak_gaussian, gaussian, content_semialgebra,
    /// property_A, primal, very_few, zd_degree in this order.
    std::vector<Verdict> verdicts;
    std::optional<double> seconds;

    const Verdict& verdict(const std::string& name) const;
};

ClassificationReport classify(const FiniteSemiring& s, const InputDescriptor& input,
                              const ClassifyOptions& options = {});

/// Stable key order.
Json to_json(const ClassificationReport& r);
std::string to_text(const ClassificationReport& r);

/// Re-runs the classification recorded in a JSON report (schema, input,
/// options and the embedded tables). Throws ParseError on a foreign schema.
ClassificationReport replay_report(const Json& report);

/// Witness encoders shared with the golden suite.
Json witness_json(const PairWitness& w);
Json polynomial_witness_json(const Polynomial& p);

} // namespace slab
