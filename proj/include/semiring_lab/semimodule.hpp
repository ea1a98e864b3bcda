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

#include "semiring_lab/ideals.hpp"
#include "semiring_lab/polynomial.hpp"
#include "semiring_lab/sweep.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slab {

/// Unvalidated semimodule tables. scalar[s][m] is s*m.
struct RawSemimodule {
    std::vector<std::string> elements;
    std::vector<std::vector<long long>> add;
    std::vector<std::vector<long long>> scalar;
    long long zero = 0;
};

/// Every violated semimodule axiom; empty means valid.
std::vector<AxiomViolation> validate_semimodule(const FiniteSemiring& s, const RawSemimodule& raw);

/// A validated finite semimodule over a finite semiring.
class FiniteSemimodule {
public:
    /// Throws ValidationError.
    static FiniteSemimodule create(const FiniteSemiring& s, const RawSemimodule& raw);
    /// S as a module over itself.
    static FiniteSemimodule regular(const FiniteSemiring& s);
    /// Elements are pairs labelled "(x,y)". Throws MixedSemirings.
    static FiniteSemimodule direct_sum(const FiniteSemimodule& a, const FiniteSemimodule& b);

    const FiniteSemiring& semiring() const { return impl_->s; }
    std::size_t size() const { return impl_->n; }
    Elem zero() const { return impl_->zero; }
    Elem add(Elem x, Elem y) const { return impl_->add[x * impl_->n + y]; }
    Elem act(Elem s, Elem x) const { return impl_->scalar[s * impl_->n + x]; }
    const std::string& label(Elem x) const { return impl_->labels[x]; }
    const std::vector<std::string>& labels() const { return impl_->labels; }
    std::vector<std::string> labels_of(ElementSet set) const;
    ElementSet all() const { return ElementSet::full(size()); }
    RawSemimodule tables() const;

private:
    struct Impl {
        FiniteSemiring s;
        std::size_t n = 0;
        Elem zero = 0;
        std::vector<Elem> add;
        std::vector<Elem> scalar;
        std::vector<std::string> labels;
    };
    explicit FiniteSemimodule(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

struct Subsemimodule {
    ElementSet members;
    std::optional<std::vector<Elem>> generators;
};

Subsemimodule subsemimodule_generated(const FiniteSemimodule& m, ElementSet gens);

/// I*N: additive closure of {a*n : a in I, n in N} together with 0.
ElementSet ideal_times(const FiniteSemimodule& m, ElementSet ideal, ElementSet sub);

/// Every subsemimodule of M. Throws CapExceeded past `cap` of them.
std::vector<ElementSet> all_subsemimodules(const FiniteSemimodule& m, std::size_t cap = 4096);

struct SubtractiveSemimoduleVerdict {
    bool holds = true;
    std::optional<std::pair<Elem, Elem>> generators;
    ElementSet members;
    /// (x, y) with x, x + y in the subsemimodule and y outside it.
    std::optional<std::pair<Elem, Elem>> witness;
};

/// Scans every subsemimodule generated by at most two elements.
SubtractiveSemimoduleVerdict is_subtractive_semimodule(const FiniteSemimodule& m);

/// c_M(x) relative to a subsemimodule: the meet of all ideals I with x in I*N.
ElementSet content_in(const FiniteSemimodule& m, const IdealLattice& lattice, ElementSet sub, Elem x);

/// c_M(x). Throws CapExceeded.
Ideal content_cM(const FiniteSemimodule& m, Elem x, std::size_t lattice_cap = kDefaultLatticeCap);

struct ContentVerdict {
    bool holds = true;
    /// x with x outside c_M(x)M.
    std::optional<Elem> witness;
};

ContentVerdict is_content_semimodule(const FiniteSemimodule& m,
                                     std::size_t lattice_cap = kDefaultLatticeCap);

/// x = sum of c_i x_i with every c_i in c_M(x); found by breadth-first search.
struct ContentRepresentation {
    Elem x = 0;
    std::vector<std::pair<Elem, Elem>> terms;
    /// Ideal generated by the c_i.
    ElementSet generated;
};

struct ContentEquivalences {
    /// x in c_M(x)M for every x.
    bool content = true;
    /// (I meet J)M = IM meet JM for every pair of ideals.
    bool intersection = true;
    /// Each c_M(x) equals the ideal generated by the coefficients of a representation.
    bool finitely_generated = true;
    /// content == intersection.
    bool agrees = true;
    std::optional<std::pair<ElementSet, ElementSet>> intersection_witness;
    std::vector<ContentRepresentation> representations;
};

ContentEquivalences content_equivalences(const FiniteSemimodule& m,
                                         std::size_t lattice_cap = kDefaultLatticeCap);

/// The three submodule conditions for N inside a content semimodule M:
/// (1) IM meet N = IN for all I, (2) x in c_M(x)N for x in N,
/// (3) N is content and c_N agrees with c_M on N.
struct SubmoduleCriteria {
    ElementSet sub;
    bool c1 = false, c2 = false, c3 = false;
    bool agrees() const { return c1 == c2 && c2 == c3; }
};

SubmoduleCriteria submodule_criteria(const FiniteSemimodule& m, const IdealLattice& lattice,
                                     ElementSet sub);

// ---- Dedekind-Mertens over a semimodule ----------------------------------

/// Dense univariate polynomial with coefficients in M, lowest degree first.
using ModulePolynomial = std::vector<Elem>;

struct ModuleDMReport {
    std::optional<unsigned> exponent;
    unsigned bound_used = 0;
    ElementSet cf;             // ideal of S
    ElementSet cg, cfg;        // subsemimodules of M
    ElementSet lhs, rhs;       // at the last m tried
    ModulePolynomial fg;
};

/// f * g with f over S and g over M.
ModulePolynomial module_poly_mul(const FiniteSemimodule& m, const Polynomial& f,
                                 const ModulePolynomial& g);

/// Least m <= bound with c(f)^{m+1}c(g) = c(f)^m c(fg). f must be univariate in X.
ModuleDMReport dm_semimodule(const FiniteSemimodule& m, const Polynomial& f,
                             const ModulePolynomial& g, unsigned bound);

struct ModuleDMProbe {
    ElementSet sub;
    Elem a = 0, b = 0;  // a, a+b in sub, b outside
    ModulePolynomial g;
    ModuleDMReport report;
};

struct ModuleDMEquivalence {
    bool subtractive = true;
    bool dm_holds = true;
    bool agrees = true;
    std::uint64_t space = 0;
    std::optional<std::pair<Polynomial, ModulePolynomial>> witness;
    std::vector<ModuleDMProbe> probes;
};

/// Sweeps f in S[X], g in M[X] of degree <= D and replays f = 1 + X,
/// g = a + bX + aX^2 for each non-subtractive 2-generated subsemimodule.
ModuleDMEquivalence dm_semimodule_equivalence(const FiniteSemimodule& m, unsigned degree,
                                              const SweepOptions& options = {});

std::string module_poly_to_string(const FiniteSemimodule& m, const ModulePolynomial& g);

} // namespace slab
