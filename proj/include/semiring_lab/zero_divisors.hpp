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

#include "semiring_lab/gaussian.hpp"

#include <optional>
#include <vector>

namespace slab {

/// {s : s * t = 0 for some t != 0}. Contains 0 whenever |S| > 1.
ElementSet zero_divisors(const FiniteSemiring& s);

/// Prime ideals of the form Ann(a), a != 0, sorted and without repeats.
std::vector<ElementSet> ass_primes(const FiniteSemiring& s);

/// Z(S) is covered by the associated primes.
bool very_few_zero_divisors(const FiniteSemiring& s);

struct PropertyAVerdict {
    bool holds = true;
    /// An ideal inside Z(S) whose annihilator is (0).
    std::optional<ElementSet> witness;
    std::size_t ideals_checked = 0;
};

/// Every ideal contained in Z(S) has a nonzero annihilator. Ideals inside
/// Z(S) are reached by adding one generator at a time; throws CapExceeded
/// after `visit_cap` ideals.
PropertyAVerdict property_A(const FiniteSemiring& s, std::size_t visit_cap = 1u << 20);

/// Z(S) is closed under addition (it always absorbs products).
bool is_primal(const FiniteSemiring& s);

/// Every set of primes inside Z(S) whose union is Z(S) and none of which is
/// covered by the others. Throws CapExceeded past 20 such primes.
std::vector<std::vector<ElementSet>> irredundant_prime_covers(const FiniteSemiring& s,
                                                              std::size_t lattice_cap = kDefaultLatticeCap);

struct ZdDegree {
    std::optional<unsigned> degree;
    /// Maximal primes inside Z(S).
    std::vector<ElementSet> maximal_primes;
    /// The irredundant cover is unique and equals maximal_primes.
    bool unique = false;
};

/// Throws NotWeakGaussian or CapExceeded.
ZdDegree zd_degree(const FiniteSemiring& s, std::size_t lattice_cap = kDefaultLatticeCap);

struct ZeroDivisorProfile {
    ElementSet zset;
    std::vector<ElementSet> ass_primes;
    std::vector<ElementSet> maximal_primes_of_z;
    bool very_few = false;
    bool property_a = false;
    bool primal = false;
    /// Z(S) is a union of primes.
    bool few = false;
    /// Set only for weak Gaussian S.
    std::optional<unsigned> zd_degree;
};

ZeroDivisorProfile zero_divisor_profile(const FiniteSemiring& s,
                                        std::size_t lattice_cap = kDefaultLatticeCap);

struct PolyTransferCheck {
    bool subtractive = false;
    unsigned degree = 0;
    std::uint64_t polynomials = 0;
    /// f in the window that kill some nonzero g in the window.
    std::uint64_t zero_divisors_found = 0;
    /// (i) each such f has c(f) inside a maximal prime of Z(S).
    bool covered = true;
    /// (ii) f kills some nonzero g iff c(f) lies in a maximal prime of Z(S).
    bool matches = true;
    /// (iii) checked only for primal S with Property (A).
    bool primal_case = false;
    /// Zero-divisors are closed under sums and scalars and equal Z(S)[X] on the window.
    bool primal_ideal = true;
    std::optional<unsigned> zd_base;
    /// Maximal members of {p[X] restricted to the window}, all of them zero-divisor sets.
    unsigned zd_window = 0;
    std::optional<Polynomial> witness;
    bool holds() const { return covered && matches && primal_ideal; }
};

/// Bounded zero-divisor transfer to S[X] over polynomials of degree <= D.
PolyTransferCheck poly_transfer_check(const FiniteSemiring& s, unsigned degree,
                                      const SweepOptions& options = {},
                                      std::size_t lattice_cap = kDefaultLatticeCap);

} // namespace slab
