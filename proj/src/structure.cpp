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

#include "semiring_lab/structure.hpp"

namespace slab {

ElementSet units(const FiniteSemiring& s) {
    ElementSet out;
    for (Elem a = 0; a < s.size(); ++a)
        for (Elem b = 0; b < s.size(); ++b)
            if (s.mul(a, b) == s.one()) {
                out.insert(a);
                break;
            }
    return out;
}

StructuralFlags structural_flags(const FiniteSemiring& s) {
    const auto n = static_cast<Elem>(s.size());
    StructuralFlags f;
    f.zerosumfree = true;
    f.additively_idempotent = true;
    f.multiplicatively_idempotent = true;
    bool absorption = true;
    for (Elem a = 0; a < n; ++a) {
        if (s.add(a, a) != a) f.additively_idempotent = false;
        if (s.mul(a, a) != a) f.multiplicatively_idempotent = false;
        for (Elem b = 0; b < n; ++b) {
            if (s.add(a, b) == s.zero() && (a != s.zero() || b != s.zero())) f.zerosumfree = false;
            if (s.add(a, s.mul(a, b)) != a || s.mul(a, s.add(a, b)) != a) absorption = false;
        }
    }
    f.bounded_distributive_lattice =
        f.additively_idempotent && f.multiplicatively_idempotent && absorption;

    // Local iff the non-units are closed under addition; they then form the
    // unique maximal ideal.
    const ElementSet m = s.all() - units(s);
    bool closed = true;
    for (Elem a : m) {
        for (Elem b : m) {
            if (!m.contains(s.add(a, b))) {
                closed = false;
                break;
            }
        }
        if (!closed) break;
    }
    f.is_local = closed;
    if (closed) {
        f.maximal_ideal = m;
        bool sq_zero = true;
        for (Elem a : m)
            for (Elem b : m)
                if (s.mul(a, b) != s.zero()) sq_zero = false;
        f.maximal_ideal_squared_zero = sq_zero;
    }
    return f;
}

} // namespace slab
