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

#include "semiring_lab/polynomial.hpp"
#include "semiring_lab/sweep.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace slab {

/// A pair of polynomials together with the contents a verdict was based on.
struct PairWitness {
    Polynomial f;
    Polynomial g;
    Polynomial fg;
    ElementSet cf, cg, cfg;
};

/// Builds a witness from two polynomials, computing fg and all contents.
PairWitness make_pair_witness(const Polynomial& f, const Polynomial& g);

// ---- Gaussian -------------------------------------------------------------

enum class GaussianCertificate {
    LocalNilMax,    // local, subtractive, m^2 = (0)
    SumGeneration,  // (a, b) = (a + b) for all a, b
    BDL,            // bounded distributive lattice
    Cancelation,    // subtractive, every nonzero ideal is cancelation
    RadicalFixed,   // weak Gaussian and sqrt(I) = I for every ideal
    None,
};

const char* to_string(GaussianCertificate c);

/// (a, b) with (a, b) != (a + b), or nullopt when sum generation holds.
std::optional<std::pair<Elem, Elem>> sum_generation_witness(const FiniteSemiring& s);

/// IJ = IK implies J = K for every nonzero ideal I. Throws CapExceeded.
bool every_nonzero_ideal_cancelation(const FiniteSemiring& s,
                                     std::size_t lattice_cap = kDefaultLatticeCap);

/// Every certificate that applies, in the order of the enum. Certificates
/// that need the ideal lattice are skipped when |S| exceeds the cap.
std::vector<GaussianCertificate> gaussian_certificates(const FiniteSemiring& s,
                                                       std::size_t lattice_cap = kDefaultLatticeCap);
/// First applicable certificate, or None.
GaussianCertificate gaussian_sufficient(const FiniteSemiring& s,
                                        std::size_t lattice_cap = kDefaultLatticeCap);

struct GaussianSweep {
    bool holds = true;
    unsigned degree = 0;
    std::uint64_t space = 0;
    std::optional<PairWitness> witness;
};

/// c(fg) = c(f)c(g) for every pair of univariate polynomials of degree <= D.
GaussianSweep is_gaussian_up_to(const FiniteSemiring& s, unsigned degree,
                                const SweepOptions& options = {});

// ---- weak Gaussian --------------------------------------------------------

struct WeakGaussianVerdict {
    bool holds = true;
    /// A prime ideal that is not subtractive.
    std::optional<ElementSet> prime;
    /// (a, b) with a, a + b in the prime and b outside it.
    std::optional<std::pair<Elem, Elem>> prime_witness;
    /// f = b + (a+b)X, g = a + bX with c(f)c(g) not inside sqrt(c(fg)).
    std::optional<PairWitness> witness;
    ElementSet cfcg;
    ElementSet radical_cfg;
};

/// Exact: every prime ideal is subtractive. Throws CapExceeded.
WeakGaussianVerdict is_weak_gaussian(const FiniteSemiring& s,
                                     std::size_t lattice_cap = kDefaultLatticeCap);

struct WeakGaussianSweep {
    bool holds = true;
    /// c(fg) = c(f)c(g) on every visited pair.
    bool gaussian_on_window = true;
    std::uint64_t space = 0;
    std::optional<PairWitness> witness;
    /// Which containment failed: "c(fg) <= c(f)c(g)" or "c(f)c(g) <= sqrt(c(fg))".
    std::string failed;
};

/// c(fg) <= c(f)c(g) <= sqrt(c(fg)) for every pair in the window.
WeakGaussianSweep weak_gaussian_sweep(const FiniteSemiring& s, const SweepWindow& window,
                                      const SweepOptions& options = {});

// ---- Dedekind-Mertens -----------------------------------------------------

struct DMSweep {
    bool holds = true;
    std::uint64_t space = 0;
    std::optional<PairWitness> witness;
    std::optional<DMReport> report;
};

/// For every pair in the window, some m <= deg g satisfies the DM formula.
/// deg g is the exponent spread for one indeterminate and the folded degree
/// (see fold_pair) for several.
DMSweep dm_sweep(const FiniteSemiring& s, const SweepWindow& window,
                 const SweepOptions& options = {});

struct DMProbe {
    ElementSet ideal;
    Elem a = 0, b = 0;  // a, a+b in ideal, b outside
    Polynomial f, g;
    DMReport report;
};

struct DMEquivalence {
    bool subtractive = true;
    bool dm_holds = true;
    /// subtractive == dm_holds, and every probe refutes DM.
    bool agrees = true;
    DMSweep sweep;
    std::vector<DMProbe> probes;
};

/// Compares is_subtractive_semiring with the DM sweep of degree <= D, and
/// replays f = 1 + X, g = a + bX + aX^2 for each non-subtractive 2-generated ideal.
DMEquivalence dm_semiring_equivalence(const FiniteSemiring& s, unsigned degree,
                                      const SweepOptions& options = {});

// ---- extensions -----------------------------------------------------------

struct PrimeExtensionCheck {
    bool proper = true;
    /// No pair f, g outside P[X] with fg in P[X] was found.
    bool extension_prime_bounded = false;
    bool prime = false;
    bool subtractive = false;
    bool agrees = false;
    std::optional<PairWitness> witness;
};

PrimeExtensionCheck prime_extension_check(const FiniteSemiring& s, ElementSet p,
                                          const SweepWindow& window,
                                          const SweepOptions& options = {});

struct McCoyCheck {
    bool holds = true;
    std::uint64_t zero_products = 0;
    /// fg = 0 with g != 0 and no nonzero scalar killing f.
    std::optional<PairWitness> witness;
    /// Some nonzero f with fg = 0 for a nonzero g, and a scalar s != 0 with sf = 0.
    std::optional<std::pair<Polynomial, Elem>> example;
};

McCoyCheck mccoy_check(const FiniteSemiring& s, unsigned degree, const SweepOptions& options = {});

struct NilExtensionCheck {
    bool holds = true;
    /// S is not subtractive, so the equality is not backed by a theorem.
    bool advisory = false;
    ElementSet nil;
    unsigned max_power = 0;
    std::uint64_t nilpotent_found = 0;
    std::optional<Polynomial> witness;
};

/// f has all coefficients in Nil(S) iff f^k = 0 for some k <= K. K = 0 picks
/// a K large enough for every polynomial in the window.
NilExtensionCheck nil_extension_check(const FiniteSemiring& s, unsigned degree, unsigned max_power = 0,
                                      const SweepOptions& options = {});

} // namespace slab
