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

#include "semiring_lab/semialgebra.hpp"

#include <algorithm>
#include <atomic>

namespace slab {

MinPrimeCorrespondence min_prime_correspondence(const FiniteSemiring& s, unsigned degree,
                                                const SweepOptions& options, std::size_t lattice_cap) {
    const IdealLattice lattice = enumerate_ideals(s, lattice_cap);
    IdealArithmetic ar(s);
    MinPrimeCorrespondence out;
    out.subtractive = is_subtractive_semiring(s).holds;
    const auto mins = minimal_primes(lattice);
    for (ElementSet p : mins) {
        MinPrimeExtension e;
        e.prime = p;
        e.extension_prime = ar.is_prime(p) && ar.is_subtractive(p);
        e.extension_prime_bounded =
            prime_extension_check(s, p, SweepWindow::univariate(degree), options).extension_prime_bounded;
        // The constants of p[X] are exactly the elements of p.
        ElementSet constants;
        for (Elem a = 0; a < s.size(); ++a)
            if (Polynomial::constant(s, a).support().subset_of(p)) constants.insert(a);
        e.contraction = constants == p;
        out.primes.push_back(e);
    }
    for (std::size_t i = 0; i < mins.size(); ++i)
        for (std::size_t j = 0; j < mins.size(); ++j)
            if (i != j && mins[i].subset_of(mins[j])) out.injective = false;
    out.holds = out.injective;
    for (const auto& e : out.primes)
        out.holds = out.holds && e.extension_prime && e.extension_prime_bounded && e.contraction;
    return out;
}

SemialgebraVerdict verify_content_semialgebra(const FiniteSemiring& s, unsigned degree,
                                              const SweepOptions& options, std::size_t lattice_cap) {
    const IdealLattice lattice = enumerate_ideals(s, lattice_cap);
    SemialgebraVerdict v;
    v.subtractive = is_subtractive_semiring(s).holds;
    PolySpace space(s, SweepWindow::univariate(degree));

    // Axiom 1: IB = I[X], so membership is coefficientwise.
    v.axiom1.bound = degree;
    for (ElementSet i : lattice.ideals()) {
        auto r = sweep_polys(space, options, [i](IdealArithmetic&, const PolyView& p) {
            bool member = true;
            for (Elem c : p.coeffs) member = member && i.contains(c);
            return member != p.content.subset_of(i);
        });
        if (!r.holds) {
            v.axiom1.holds = false;
            v.axiom1.ideal = i;
            v.axiom1.poly = space.polynomial(r.first->first);
            break;
        }
    }

    // Axiom 2.
    v.axiom2.bound = degree;
    {
        IdealArithmetic ar(s);
        if (ar.closure(Polynomial::constant(s, s.one()).support()) != s.all()) {
            v.axiom2.holds = false;
            v.axiom2.poly = Polynomial::constant(s, s.one());
        }
    }
    for (Elem t = 0; t < s.size() && v.axiom2.holds; ++t) {
        auto r = sweep_polys(space, options, [&, t](IdealArithmetic& ar, const PolyView& p) {
            ElementSet scaled;
            for (Elem c : p.coeffs)
                if (s.mul(t, c) != s.zero()) scaled.insert(s.mul(t, c));
            return ar.closure(scaled) != ar.scale(t, p.content);
        });
        if (!r.holds) {
            v.axiom2.holds = false;
            v.axiom2.scalar = t;
            v.axiom2.poly = space.polynomial(r.first->first);
        }
    }

    // Axiom 3; the reverse-direction probe is preferred as witness.
    v.axiom3.bound = degree;
    const DMEquivalence dm = dm_semiring_equivalence(s, degree, options);
    v.axiom3.holds = dm.dm_holds;
    if (!dm.probes.empty() && !dm.probes.front().report.exponent) {
        v.axiom3.pair = make_pair_witness(dm.probes.front().f, dm.probes.front().g);
        v.axiom3.ideal = dm.probes.front().ideal;
    } else if (dm.sweep.witness) {
        v.axiom3.pair = dm.sweep.witness;
    }

    const MinPrimeCorrespondence mp = min_prime_correspondence(s, std::min(degree, 2u), options, lattice_cap);
    v.min_prime_bijection.bound = std::min(degree, 2u);
    v.min_prime_bijection.holds = mp.holds;
    for (const auto& e : mp.primes) {
        if (!(e.extension_prime && e.extension_prime_bounded && e.contraction)) {
            v.min_prime_bijection.ideal = e.prime;
            break;
        }
    }

    const NilExtensionCheck nil = nil_extension_check(s, std::min(degree, 2u), 0, options);
    v.nil_extension.bound = std::min(degree, 2u);
    v.nil_extension.holds = nil.holds;
    v.nil_extension.poly = nil.witness;

    v.overall = v.axiom1.holds && v.axiom2.holds && v.axiom3.holds;
    v.agrees = v.overall == v.subtractive;
    return v;
}

ReducedTransferCheck reduced_transfer_check(const FiniteSemiring& s, unsigned degree,
                                            unsigned max_power, const SweepOptions& options) {
    ReducedTransferCheck out;
    IdealArithmetic ar(s);
    const ElementSet nil = ar.radical(ElementSet::single(s.zero()));
    out.reduced = nil == ElementSet::single(s.zero());
    PolySpace space(s, SweepWindow::univariate(degree));
    if (max_power == 0) {
        unsigned index = 1;
        for (Elem x : nil) {
            unsigned k = 1;
            while (s.pow(x, k) != s.zero()) ++k;
            index = std::max(index, k);
        }
        max_power = static_cast<unsigned>(space.slots()) * (index - 1) + 1;
    }
    out.max_power = max_power;
    auto r = sweep_polys(space, options, [&](IdealArithmetic&, const PolyView& v) {
        const Polynomial f = space.polynomial(v.index);
        if (f.is_zero()) return false;
        Polynomial power = f;
        for (unsigned k = 1; k < max_power && !power.is_zero(); ++k) power = poly_mul(power, f);
        return power.is_zero();
    });
    out.poly_reduced = r.holds;
    if (r.first) out.witness = space.polynomial(r.first->first);
    out.agrees = out.reduced == out.poly_reduced;
    return out;
}

} // namespace slab
