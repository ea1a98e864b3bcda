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

#include "semiring_lab/semiring.hpp"

#include <optional>

namespace slab {

struct StructuralFlags {
    bool zerosumfree = false;
    bool additively_idempotent = false;
    bool multiplicatively_idempotent = false;
    /// Both operations idempotent and a + ab = a = a(a + b) for all a, b.
    bool bounded_distributive_lattice = false;
    bool is_local = false;
    /// Set when is_local.
    std::optional<ElementSet> maximal_ideal;
    /// m^2 = (0) for the unique maximal ideal m; false when S is not local.
    bool maximal_ideal_squared_zero = false;
};

StructuralFlags structural_flags(const FiniteSemiring& s);

/// Elements with a multiplicative inverse.
ElementSet units(const FiniteSemiring& s);

} // namespace slab
