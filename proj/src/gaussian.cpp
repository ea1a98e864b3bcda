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

#include "semiring_lab/gaussian.hpp"

#include "semiring_lab/structure.hpp"

#include <atomic>
#include <unordered_set>

namespace slab {

PairWitness make_pair_witness(const Polynomial& f, const Polynomial& g) {
    IdealArithmetic ar(f.semiring());
    Polynomial fg = poly_mul(f, g);
    PairWitness w{f, g, fg, {}, {}, {}};
    w.cf = ar.closure(f.support());
    w.cg = ar.closure(g.support());
    w.cfg = ar.closure(fg.support());
    return w;
}

namespace {

PairWitness witness_at(const PolySpace& space, std::pair<std::uint64_t, std::uint64_t> ij) {
    return make_pair_witness(space.polynomial(ij.first), space.polynomial(ij.second));
}

// Lowest and highest occupied slot of a univariate dense tuple; spread = hi - lo.
unsigned dense_spread(std::span<const Elem> c, Elem zero) {
    int lo = -1, hi = -1;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == zero) continue;
        if (lo < 0) lo = static_cast<int>(k);
        hi = static_cast<int>(k);
    }
    return lo < 0 ? 0u : static_cast<unsigned>(hi - lo);
}

} // namespace

// ---- Gaussian -------------------------------------------------------------

const char* to_string(GaussianCertificate c) {
    switch (c) {
    case GaussianCertificate::LocalNilMax: return "LocalNilMax";
    case GaussianCertificate::SumGeneration: return "SumGeneration";
    case GaussianCertificate::BDL: return "BDL";
    case GaussianCertificate::Cancelation: return "Cancelation";
    case GaussianCertificate::RadicalFixed: return "RadicalFixed";
    case GaussianCertificate::None: return "None";
    }
    return "None";
}

std::optional<std::pair<Elem, Elem>> sum_generation_witness(const FiniteSemiring& s) {
    IdealArithmetic ar(s);
    for (Elem a = 0; a < s.size(); ++a) {
        for (Elem b = a; b < s.size(); ++b) {
            ElementSet gens = ElementSet::single(a);
            gens.insert(b);
            if (ar.closure(gens) != ar.closure(ElementSet::single(s.add(a, b))))
                return std::pair{a, b};
        }
    }
    return std::nullopt;
}

bool every_nonzero_ideal_cancelation(const FiniteSemiring& s, std::size_t lattice_cap) {
    const IdealLattice lattice = enumerate_ideals(s, lattice_cap);
    IdealArithmetic ar(s);
    const ElementSet zero = ElementSet::single(s.zero());
    const auto& ids = lattice.ideals();
    for (ElementSet i : ids) {
        if (i == zero) continue;
        std::unordered_set<ElementSet> images;
        for (ElementSet j : ids)
            if (!images.insert(ar.product(i, j)).second) return false;
    }
    return true;
}

std::vector<GaussianCertificate> gaussian_certificates(const FiniteSemiring& s,
                                                       std::size_t lattice_cap) {
    std::vector<GaussianCertificate> out;
    const StructuralFlags flags = structural_flags(s);
    const bool subtractive = is_subtractive_semiring(s).holds;
    if (flags.is_local && subtractive && flags.maximal_ideal_squared_zero)
        out.push_back(GaussianCertificate::LocalNilMax);
    if (!sum_generation_witness(s)) out.push_back(GaussianCertificate::SumGeneration);
    if (flags.bounded_distributive_lattice) out.push_back(GaussianCertificate::BDL);
    if (s.size() <= lattice_cap) {
        if (subtractive && every_nonzero_ideal_cancelation(s, lattice_cap))
            out.push_back(GaussianCertificate::Cancelation);
        if (is_weak_gaussian(s, lattice_cap).holds) {
            const IdealLattice lattice = enumerate_ideals(s, lattice_cap);
            IdealArithmetic ar(s);
            bool fixed = true;
            for (ElementSet i : lattice.ideals())
                if (ar.radical(i) != i) fixed = false;
            if (fixed) out.push_back(GaussianCertificate::RadicalFixed);
        }
    }
    return out;
}

GaussianCertificate gaussian_sufficient(const FiniteSemiring& s, std::size_t lattice_cap) {
    auto all = gaussian_certificates(s, lattice_cap);
    return all.empty() ? GaussianCertificate::None : all.front();
}

GaussianSweep is_gaussian_up_to(const FiniteSemiring& s, unsigned degree,
                                const SweepOptions& options) {
    PolySpace space(s, SweepWindow::univariate(degree));
    auto r = sweep_pairs(
        space, options,
        [](IdealArithmetic& ar, const PairView& v) { return v.cfg != ar.product(v.cf, v.cg); },
        PairOrder::Unordered);
    GaussianSweep out;
    out.holds = r.holds;
    out.degree = degree;
    out.space = r.space;
    if (r.first) out.witness = witness_at(space, *r.first);
    return out;
}

// ---- weak Gaussian --------------------------------------------------------

WeakGaussianVerdict is_weak_gaussian(const FiniteSemiring& s, std::size_t lattice_cap) {
    const IdealLattice lattice = enumerate_ideals(s, lattice_cap);
    IdealArithmetic ar(s);
    WeakGaussianVerdict v;
    for (ElementSet p : prime_ideals(lattice)) {
        auto w = ar.subtractive_witness(p);
        if (!w) continue;
        v.holds = false;
        v.prime = p;
        v.prime_witness = w;
        const auto [a, b] = *w;
        const Polynomial f = Polynomial::univariate(s, {b, s.add(a, b)});
        const Polynomial g = Polynomial::univariate(s, {a, b});
        v.witness = make_pair_witness(f, g);
        v.cfcg = ar.product(v.witness->cf, v.witness->cg);
        v.radical_cfg = ar.radical(v.witness->cfg);
        return v;
    }
    return v;
}

WeakGaussianSweep weak_gaussian_sweep(const FiniteSemiring& s, const SweepWindow& window,
                                      const SweepOptions& options) {
    PolySpace space(s, window);
    std::atomic<bool> strict{false};
    auto r = sweep_pairs(
        space, options,
        [&](IdealArithmetic& ar, const PairView& v) {
            const ElementSet prod = ar.product(v.cf, v.cg);
            if (prod != v.cfg) strict.store(true, std::memory_order_relaxed);
            return !v.cfg.subset_of(prod) || !prod.subset_of(ar.radical(v.cfg));
        },
        PairOrder::Unordered);
    WeakGaussianSweep out;
    out.holds = r.holds;
    out.space = r.space;
    out.gaussian_on_window = r.holds && !strict.load();
    if (r.first) {
        out.witness = witness_at(space, *r.first);
        IdealArithmetic ar(s);
        const ElementSet prod = ar.product(out.witness->cf, out.witness->cg);
        out.failed = out.witness->cfg.subset_of(prod) ? "c(f)c(g) <= sqrt(c(fg))" : "c(fg) <= c(f)c(g)";
    }
    return out;
}

// ---- Dedekind-Mertens -----------------------------------------------------

DMSweep dm_sweep(const FiniteSemiring& s, const SweepWindow& window, const SweepOptions& options) {
    PolySpace space(s, window);
    const bool univariate = window.indets.size() == 1;
    const Elem zero = s.zero();
    auto r = sweep_pairs(space, options, [&](IdealArithmetic& ar, const PairView& v) {
        unsigned bound = 0;
        if (univariate) {
            bound = dense_spread(v.g, zero);
        } else {
            const Polynomial g = space.polynomial(v.gi);
            if (g.is_zero()) return false;
            const auto folded = fold_pair(space.polynomial(v.fi), g).second;
            const auto vars = folded.indeterminates();
            bound = vars.empty() ? 0u : static_cast<unsigned>(*folded.degree(*vars.begin()));
        }
        return !dm_exponent_sets(ar, v.cf, v.cg, v.cfg, bound).has_value();
    });
    DMSweep out;
    out.holds = r.holds;
    out.space = r.space;
    if (r.first) {
        out.witness = witness_at(space, *r.first);
        const Polynomial& g = out.witness->g;
        unsigned bound = dm_degree(g);
        if (!univariate) {
            const auto folded = fold_pair(out.witness->f, g).second;
            const auto vars = folded.indeterminates();
            bound = vars.empty() ? 0u : static_cast<unsigned>(*folded.degree(*vars.begin()));
        }
        IdealArithmetic ar(s);
        DMReport rep;
        rep.bound_used = bound;
        rep.cf = out.witness->cf;
        rep.cg = out.witness->cg;
        rep.cfg = out.witness->cfg;
        rep.exponent = dm_exponent_sets(ar, rep.cf, rep.cg, rep.cfg, bound, &rep.lhs, &rep.rhs);
        out.report = rep;
    }
    return out;
}

DMEquivalence dm_semiring_equivalence(const FiniteSemiring& s, unsigned degree,
                                      const SweepOptions& options) {
    DMEquivalence out;
    out.subtractive = is_subtractive_semiring(s).holds;
    out.sweep = dm_sweep(s, SweepWindow::univariate(degree), options);
    out.dm_holds = out.sweep.holds;

    IdealArithmetic ar(s);
    std::unordered_set<ElementSet> seen;
    for (Elem x = 0; x < s.size(); ++x) {
        for (Elem y = x; y < s.size(); ++y) {
            ElementSet gens = ElementSet::single(x);
            gens.insert(y);
            const ElementSet n = ar.closure(gens);
            if (!seen.insert(n).second) continue;
            auto w = ar.subtractive_witness(n);
            if (!w) continue;
            const auto [a, b] = *w;
            DMProbe probe{n, a, b, Polynomial::univariate(s, {s.one(), s.one()}),
                          Polynomial::univariate(s, {a, b, a}), {}};
            probe.report = dm_exponent(probe.f, probe.g, std::max(2u, degree));
            out.probes.push_back(std::move(probe));
        }
    }
    bool probes_refute = true;
    for (const auto& p : out.probes)
        if (p.report.exponent) probes_refute = false;
    out.agrees = out.subtractive == out.dm_holds && probes_refute &&
                 (out.subtractive || !out.probes.empty());
    return out;
}

// ---- extensions -----------------------------------------------------------

PrimeExtensionCheck prime_extension_check(const FiniteSemiring& s, ElementSet p,
                                          const SweepWindow& window, const SweepOptions& options) {
    PrimeExtensionCheck out;
    IdealArithmetic ar(s);
    out.proper = p != s.all();
    out.prime = ar.is_prime(p);
    out.subtractive = ar.is_subtractive(p);
    if (!out.proper) {
        out.extension_prime_bounded = false;
        out.agrees = !(out.prime && out.subtractive);
        return out;
    }
    PolySpace space(s, window);
    auto r = sweep_pairs(
        space, options,
        [p](IdealArithmetic&, const PairView& v) {
            return !v.cf.subset_of(p) && !v.cg.subset_of(p) && v.cfg.subset_of(p);
        },
        PairOrder::Unordered);
    out.extension_prime_bounded = r.holds;
    if (r.first) out.witness = witness_at(space, *r.first);
    out.agrees = out.extension_prime_bounded == (out.prime && out.subtractive);
    return out;
}

McCoyCheck mccoy_check(const FiniteSemiring& s, unsigned degree, const SweepOptions& options) {
    PolySpace space(s, SweepWindow::univariate(degree));
    const Elem zero = s.zero();
    IdealArithmetic base(s);
    std::atomic<std::uint64_t> zero_products{0};
    std::atomic<std::uint64_t> example_f{UINT64_MAX};
    auto r = sweep_pairs(space, options, [&](IdealArithmetic& ar, const PairView& v) {
        if (v.cg == ElementSet::single(zero)) return false;
        for (Elem e : v.fg)
            if (e != zero) return false;
        zero_products.fetch_add(1, std::memory_order_relaxed);
        const ElementSet ann = ar.annihilator(v.cf);
        if (ann == ElementSet::single(zero)) return true;
        if (v.cf != ElementSet::single(zero)) {
            std::uint64_t cur = example_f.load();
            while (v.fi < cur && !example_f.compare_exchange_weak(cur, v.fi)) {
            }
        }
        return false;
    });
    McCoyCheck out;
    out.holds = r.holds;
    out.zero_products = zero_products.load();
    if (r.first) out.witness = witness_at(space, *r.first);
    if (example_f.load() != UINT64_MAX) {
        Polynomial f = space.polynomial(example_f.load());
        const ElementSet ann = base.annihilator(f.support()) - ElementSet::single(zero);
        out.example = std::pair{f, ann.first()};
    }
    return out;
}

NilExtensionCheck nil_extension_check(const FiniteSemiring& s, unsigned degree,
                                      unsigned max_power, const SweepOptions& options) {
    PolySpace space(s, SweepWindow::univariate(degree));
    IdealArithmetic base(s);
    NilExtensionCheck out;
    out.nil = base.radical(ElementSet::single(s.zero()));
    out.advisory = !is_subtractive_semiring(s).holds;
    if (max_power == 0) {
        unsigned index = 1;
        for (Elem x : out.nil) {
            unsigned k = 1;
            while (s.pow(x, k) != s.zero()) ++k;
            index = std::max(index, k);
        }
        max_power = static_cast<unsigned>(space.slots()) * (index - 1) + 1;
    }
    out.max_power = max_power;
    std::atomic<std::uint64_t> found{0};
    auto r = sweep_polys(space, options, [&](IdealArithmetic&, const PolyView& v) {
        const bool expect = v.support.subset_of(out.nil);
        const Polynomial f = space.polynomial(v.index);
        bool nilpotent = f.is_zero();
        Polynomial power = f;
        for (unsigned k = 1; k <= max_power && !nilpotent; ++k) {
            if (power.is_zero()) nilpotent = true;
            else if (k < max_power) power = poly_mul(power, f);
        }
        if (nilpotent) found.fetch_add(1, std::memory_order_relaxed);
        return nilpotent != expect;
    });
    out.holds = r.holds;
    out.nilpotent_found = found.load();
    if (r.first) out.witness = space.polynomial(r.first->first);
    return out;
}

} // namespace slab
