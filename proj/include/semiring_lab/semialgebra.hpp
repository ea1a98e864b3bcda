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

// Content-semialgebra conditions checked at B = S[X].

#include "semiring_lab/gaussian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slab {

struct AxiomCheck {
    bool holds = true;
    unsigned bound = 0;
    std::optional<PairWitness> pair;
    std::optional<Polynomial> poly;
    std::optional<ElementSet> ideal;
    std::optional<Elem> scalar;
};

struct MinPrimeExtension {
    ElementSet prime;
    /// p is a subtractive prime, so p[X] is prime.
    bool extension_prime = false;
    /// No bounded pair outside p[X] multiplies into it.
    bool extension_prime_bounded = false;
    /// p[X] meet S = p.
    bool contraction = false;
};

struct MinPrimeCorrespondence {
    bool subtractive = false;
    std::vector<MinPrimeExtension> primes;
    /// Extensions of distinct minimal primes are pairwise incomparable.
    bool injective = true;
    bool holds = true;
    /// Onto Min(S[X]) is not decidable on a finite window.
    static constexpr const char* surjectivity = "theorem-backed";
};

MinPrimeCorrespondence min_prime_correspondence(const FiniteSemiring& s, unsigned degree = 2,
                                                const SweepOptions& options = {},
                                                std::size_t lattice_cap = kDefaultLatticeCap);

struct SemialgebraVerdict {
    /// f in I[X] iff c(f) <= I.
    AxiomCheck axiom1;
    /// c(sf) = s c(f) and c(1) = S.
    AxiomCheck axiom2;
    /// Dedekind-Mertens with m <= deg g.
    AxiomCheck axiom3;
    AxiomCheck min_prime_bijection;
    AxiomCheck nil_extension;
    bool overall = true;
    bool subtractive = true;
    /// overall == subtractive.
    bool agrees = true;
};

/// Throws CapExceeded or BudgetExceeded.
SemialgebraVerdict verify_content_semialgebra(const FiniteSemiring& s, unsigned degree,
                                              const SweepOptions& options = {},
                                              std::size_t lattice_cap = kDefaultLatticeCap);

struct ReducedTransferCheck {
    bool reduced = true;
    /// No nonzero f in the window has f^k = 0 for k <= K.
    bool poly_reduced = true;
    bool agrees = true;
    unsigned max_power = 0;
    std::optional<Polynomial> witness;
};

/// K = 0 picks a K that suffices for every polynomial in the window.
ReducedTransferCheck reduced_transfer_check(const FiniteSemiring& s, unsigned degree,
                                            unsigned max_power = 0, const SweepOptions& options = {});

} // namespace slab
